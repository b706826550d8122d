#include "ordlattice/cli/commands.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordlattice/accumulator.hpp"
#include "ordlattice/bounds.hpp"
#include "ordlattice/cli/database_io.hpp"
#include "ordlattice/cli/query_parser.hpp"
#include "ordlattice/errors.hpp"
#include "ordlattice/log.hpp"
#include "ordlattice/partitions.hpp"
#include "ordlattice/solvers.hpp"

namespace ordlattice::cli {

namespace {

using json = nlohmann::json;

std::string ids_text(const IdSequence& ids) {
  std::string s = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "]";
}

DispatchPolicy make_policy(const std::vector<std::string>& settings) {
  DispatchPolicy p;
  for (const auto& kv : settings) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ArgumentError("policy setting must look like key=value: " + kv);
    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (!is_canonical_natural(val)) throw ArgumentError("policy value must be a natural: " + kv);
    p.set(key, Value(val).natural());
  }
  return p;
}

Query checked_query(const ParsedQuery& pq, const PoDatabase& db) {
  arity_of(pq.query, db.schema());
  return pq.query;
}

json partition_json(const std::vector<std::vector<Id>>& parts) {
  json a = json::array();
  for (const auto& p : parts) a.push_back(p);
  return a;
}

json bound_json(const Bound& b) { return b ? json(*b) : json(nullptr); }

json analyze_relation(const PoRelation& r) {
  json j;
  j["size"] = r.size();
  j["arity"] = r.arity();
  if (r.failed()) {
    j["failed"] = true;
    return j;
  }
  WidthResult w = width_and_chain_partition(r);
  IaPartition ia = ia_partition(r);
  j["width"] = w.width;
  j["chains"] = partition_json(w.partition.chains);
  j["ia_width"] = ia.classes.size();
  j["ia_classes"] = partition_json(ia.classes);
  j["duplicate_free"] = !r.has_duplicates();
  return j;
}

void print_verdict(std::ostream& out, const char* label, const Verdict& v, const PoRelation* r,
                   const Monoid* m) {
  out << label << ": " << (v.answer ? "yes" : "no") << "\n";
  out << "method: " << v.method << "\n";
  if (v.group) out << "group: " << to_string(*v.group) << "\n";
  if (v.counterexample_world) out << "counterexample: " << to_string(*v.counterexample_world) << "\n";
  if (v.counterexample_value && m) out << "counterexample: " << m->format(*v.counterexample_value) << "\n";
  if (v.witness) {
    out << "witness: " << ids_text(*v.witness) << "\n";
    if (r && !v.counterexample_world && v.witness->size() == r->size())
      out << "world: " << to_string(world_of(*r, *v.witness)) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partially ordered relations: evaluation, possibility and certainty", "ordlattice"};
  app.require_subcommand(1);
  std::vector<std::string> policy_settings;
  app.add_option("--policy", policy_settings, "Dispatch override key=value (repeatable)")->take_all();
  app.fallthrough();

  std::string db_path, query_text, candidate_arg, op_spec, value_text, mode = "poss";
  std::size_t worlds = 0;
  bool hasse = false;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a query and print the resulting po-relation");
  eval_cmd->add_option("db", db_path, "Database document")->required();
  eval_cmd->add_option("query", query_text, "Query text")->required();
  eval_cmd->add_option("--worlds", worlds, "Print up to N possible worlds instead");
  eval_cmd->add_flag("--hasse", hasse, "Print ids, labels and covering edges as text");

  auto* poss_cmd = app.add_subcommand("poss", "Is the candidate list a possible world of the query?");
  auto* cert_cmd = app.add_subcommand("cert", "Is the candidate list the only possible world?");
  for (auto* c : {poss_cmd, cert_cmd}) {
    c->add_option("db", db_path, "Database document")->required();
    c->add_option("query", query_text, "Query text")->required();
    c->add_option("candidate", candidate_arg, "Candidate list: file, or inline JSON starting with '['")
        ->required();
  }

  auto* accum_cmd = app.add_subcommand("accum", "Possibility or certainty of an accumulation value");
  accum_cmd->add_option("db", db_path, "Database document")->required();
  accum_cmd->add_option("query", query_text, "Query text, optionally wrapped in accum(...) or groupby(...)")
      ->required();
  accum_cmd->add_option("--op", op_spec, "Accumulator, e.g. sum(2), topk(2), dfa(\"a.json\")");
  accum_cmd->add_option("--value", value_text, "Candidate value in the accumulator's encoding (@file to read)")
      ->required();
  accum_cmd->add_option("--mode", mode, "poss or cert")->check(CLI::IsMember({"poss", "cert"}));

  auto* analyze_cmd = app.add_subcommand("analyze", "Widths, partitions and static bounds");
  analyze_cmd->add_option("db", db_path, "Database document")->required();
  analyze_cmd->add_option("query", query_text, "Optional query text");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    DispatchPolicy policy = make_policy(policy_settings);
    PoDatabase db = load_database(db_path);

    if (eval_cmd->parsed()) {
      Query qy = checked_query(parse_query_text(query_text), db);
      PoRelation r = eval(qy, db);
      if (worlds > 0) {
        for (const auto& w : some_worlds(r, worlds)) out << to_string(w) << "\n";
      } else if (hasse) {
        if (r.failed()) out << "complete failure\n";
        for (Id i = 0; i < r.size(); ++i) out << i << ": " << to_string(r.label(i)) << "\n";
        for (auto [a, b] : r.hasse()) out << a << " < " << b << "\n";
      } else {
        out << database_document("result", r) << "\n";
      }
      return kYes;
    }

    if (poss_cmd->parsed() || cert_cmd->parsed()) {
      Query qy = checked_query(parse_query_text(query_text), db);
      ListRelation candidate = parse_list(inline_or_file(candidate_arg));
      PoRelation r = eval(qy, db);
      Verdict v = poss_cmd->parsed() ? poss(qy, db, candidate, policy) : cert(qy, db, candidate, policy);
      print_verdict(out, poss_cmd->parsed() ? "possible" : "certain", v, &r, nullptr);
      return v.answer ? kYes : kNo;
    }

    if (accum_cmd->parsed()) {
      ParsedQuery pq = parse_query_text(query_text);
      if (pq.kind != ParsedQuery::Kind::Plain && !op_spec.empty())
        throw ArgumentError("give the accumulator either in the query or with --op, not both");
      if (pq.kind == ParsedQuery::Kind::Plain) {
        if (op_spec.empty()) throw ArgumentError("accum needs --op or an accum(...) query");
        std::tie(pq.accumulator, pq.accumulator_args) = parse_accumulator_spec(op_spec);
        pq.kind = ParsedQuery::Kind::Accum;
      }
      Query qy = checked_query(pq, db);
      Accumulator acc = make_builtin_accumulator(pq.accumulator, pq.accumulator_args);
      std::string text = !value_text.empty() && value_text[0] == '@' ? read_file(value_text.substr(1)) : value_text;
      PoRelation r = eval(qy, db);
      const char* label = mode == "poss" ? "possible" : "certain";
      Verdict v;
      if (pq.kind == ParsedQuery::Kind::GroupBy) {
        GroupByAccumulator g{acc, pq.group_attrs};
        GroupResult candidate = parse_group_result(text, acc.monoid());
        v = mode == "poss" ? poss_group_by(g, qy, db, candidate, policy)
                           : cert_group_by(g, qy, db, candidate, policy);
      } else {
        Element value = acc.monoid().parse(text);
        v = mode == "poss" ? poss_accum(acc, qy, db, value, policy) : cert_accum(acc, qy, db, value, policy);
      }
      print_verdict(out, label, v, &r, &acc.monoid());
      return v.answer ? kYes : kNo;
    }

    if (analyze_cmd->parsed()) {
      json report;
      report["relations"] = json::object();
      for (const auto& [name, r] : db.relations()) report["relations"][name] = analyze_relation(r);
      if (!query_text.empty()) {
        Query qy = checked_query(parse_query_text(query_text), db);
        PoRelation r = eval(qy, db);
        std::map<std::string, std::size_t> widths, ias;
        std::size_t k = 1;
        for (const auto& name : relation_names(qy)) {
          const PoRelation& in = db.get(name);
          widths[name] = in.failed() ? 0 : width(in);
          ias[name] = in.failed() ? 0 : ia_width(in);
          k = std::max(k, widths[name]);
        }
        StaticBounds sb = width_bounds(qy, widths, ias);
        json jq = analyze_relation(r);
        jq["query"] = to_string(qy);
        jq["operators"] = query_size(qy);
        jq["static_width_bound"] = bound_json(sb.width);
        jq["static_ia_width_bound"] = bound_json(sb.ia_width);
        jq["uniform_width_bound"] = bound_json(uniform_width_bound(qy, k));
        jq["poss_method"] = poss_dispatch(qy, db, policy);
        report["query"] = jq;
      }
      out << report.dump(2) << "\n";
      return kYes;
    }
  } catch (const ResourceExceeded& e) {
    err << "resource exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const OverflowError& e) {
    err << "resource exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace ordlattice::cli
