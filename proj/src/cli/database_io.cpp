#include "ordlattice/cli/database_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ordlattice/errors.hpp"

namespace ordlattice::cli {

namespace {

using json = nlohmann::json;

// Turns a byte offset into 1-based line and column.
std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(what + ": " + e.what(), line, col);
  }
}

}  // namespace

Value value_from_json(const json& j) {
  if (j.is_number_unsigned()) return Value(j.get<std::uint64_t>());
  if (j.is_string()) return Value(j.get<std::string>());
  throw ParseError("values must be naturals or strings, got " + j.dump());
}

json value_to_json(const Value& v) {
  return v.is_natural() ? json(v.natural()) : json(v.str());
}

Tuple tuple_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("tuples must be JSON arrays, got " + j.dump());
  Tuple t;
  for (const auto& x : j) t.values.push_back(value_from_json(x));
  return t;
}

json tuple_to_json(const Tuple& t) {
  json a = json::array();
  for (const auto& v : t.values) a.push_back(value_to_json(v));
  return a;
}

PoDatabase parse_database(const std::string& json_text) {
  json doc = parse_json(json_text, "database document");
  if (!doc.is_object() || !doc.contains("relations") || !doc["relations"].is_object())
    throw ParseError("database document needs a \"relations\" object");
  PoDatabase db;
  for (const auto& [name, rel] : doc["relations"].items()) {
    const std::string where = "relation " + name;
    if (!rel.is_object()) throw ParseError(where + " must be an object");
    std::vector<Tuple> rows;
    if (rel.contains("rows")) {
      if (!rel["rows"].is_array()) throw ParseError(where + ": rows must be an array");
      for (const auto& row : rel["rows"]) rows.push_back(tuple_from_json(row));
    }
    std::size_t arity = 0;
    if (rel.contains("arity")) {
      if (!rel["arity"].is_number_unsigned()) throw ParseError(where + ": arity must be a natural");
      arity = rel["arity"].get<std::size_t>();
    } else if (!rows.empty()) {
      arity = rows.front().arity();
    }
    for (const auto& t : rows)
      if (t.arity() != arity)
        throw ArityError(where + ": row " + to_string(t) + " does not have arity " + std::to_string(arity));
    if (rel.value("failed", false)) {
      if (!rows.empty()) throw ParseError(where + ": a failed relation has no rows");
      db.add(name, PoRelation::complete_failure(arity));
      continue;
    }
    std::vector<IdPair> pairs;
    if (rel.contains("order")) {
      if (!rel["order"].is_array()) throw ParseError(where + ": order must be an array of pairs");
      for (const auto& p : rel["order"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
          throw ParseError(where + ": order entries must be [i, j] index pairs");
        std::size_t a = p[0].get<std::size_t>(), b = p[1].get<std::size_t>();
        if (a >= rows.size() || b >= rows.size())
          throw ParseError(where + ": order pair [" + std::to_string(a) + ", " + std::to_string(b) +
                           "] out of range");
        pairs.push_back({a, b});
      }
    }
    db.add(name, PoRelation::from_pairs(arity, std::move(rows), pairs, name));
  }
  return db;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PoDatabase load_database(const std::string& path) { return parse_database(read_file(path)); }

json relation_to_json(const PoRelation& r) {
  json rel = json::object();
  rel["arity"] = r.arity();
  json rows = json::array();
  for (const auto& t : r.labels()) rows.push_back(tuple_to_json(t));
  rel["rows"] = rows;
  json order = json::array();
  for (auto [a, b] : r.hasse()) order.push_back(json::array({a, b}));
  rel["order"] = order;
  if (r.failed()) rel["failed"] = true;
  return rel;
}

std::string database_document(const std::string& name, const PoRelation& r) {
  json doc;
  doc["relations"][name] = relation_to_json(r);
  return doc.dump(2);
}

ListRelation parse_list(const std::string& json_text) {
  json j = parse_json(json_text, "list");
  if (!j.is_array()) throw ParseError("a list must be a JSON array of tuples");
  ListRelation l;
  for (const auto& row : j) l.rows.push_back(tuple_from_json(row));
  return l;
}

GroupResult parse_group_result(const std::string& json_text, const Monoid& m) {
  json j = parse_json(json_text, "group-by value");
  if (!j.is_array()) throw ParseError("a group-by value must be a JSON array of [key, value] pairs");
  GroupResult out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw ParseError("group-by entries must be [key, value] pairs");
    Tuple key = tuple_from_json(p[0]);
    std::string text = p[1].is_string() ? p[1].get<std::string>() : p[1].dump();
    out.push_back({std::move(key), m.parse(text)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string inline_or_file(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '[') return arg;
  return read_file(arg);
}

}  // namespace ordlattice::cli
