#include "ordlattice/accumulator.hpp"

#include <cctype>
#include <limits>
#include <memory>

#include <json.hpp>

#include "ordlattice/errors.hpp"

namespace ordlattice {

namespace {

Value json_to_value(const nlohmann::json& x) {
  if (x.is_number_unsigned()) return Value(x.get<std::uint64_t>());
  if (x.is_string()) return Value(x.get<std::string>());
  throw ParseError("values must be naturals or strings");
}

std::uint64_t parse_natural(const std::string& text, const std::string& who) {
  std::string t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  if (!is_canonical_natural(t)) throw ParseError(who + " expects a natural number, got '" + text + "'");
  return Value(t).natural();
}

}  // namespace

Element ConcatMonoid::combine(const Element& a, const Element& b) const {
  Element out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Element encode_list(const ListRelation& l) {
  Element e;
  for (const auto& t : l.rows) {
    e.emplace_back(static_cast<std::uint64_t>(t.arity()));
    e.insert(e.end(), t.values.begin(), t.values.end());
  }
  return e;
}

ListRelation decode_list(const Element& e) {
  ListRelation l;
  for (std::size_t i = 0; i < e.size();) {
    std::size_t k = e[i].natural();
    Tuple t;
    t.values.assign(e.begin() + static_cast<std::ptrdiff_t>(i + 1),
                    e.begin() + static_cast<std::ptrdiff_t>(i + 1 + k));
    l.rows.push_back(std::move(t));
    i += k + 1;
  }
  return l;
}

std::string ConcatMonoid::format(const Element& e) const { return to_string(decode_list(e)); }

Element ConcatMonoid::parse(const std::string& text) const {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("list value: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("list value must be a JSON array of tuples");
  ListRelation l;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("list value must be a JSON array of tuples");
    Tuple t;
    for (const auto& x : row) t.values.push_back(json_to_value(x));
    l.rows.push_back(std::move(t));
  }
  return encode_list(l);
}

Element SumMonoid::combine(const Element& a, const Element& b) const {
  std::uint64_t x = a.at(0).natural(), y = b.at(0).natural();
  if (x > std::numeric_limits<std::uint64_t>::max() - y) throw OverflowError("sum overflows 64 bits");
  return {Value(x + y)};
}

std::string SumMonoid::format(const Element& e) const { return e.at(0).text(); }
Element SumMonoid::parse(const std::string& text) const { return {Value(parse_natural(text, "sum"))}; }

Element ParityMonoid::combine(const Element& a, const Element& b) const {
  return {Value((a.at(0).natural() + b.at(0).natural()) % 2)};
}

std::string ParityMonoid::format(const Element& e) const { return e.at(0).text(); }

Element ParityMonoid::parse(const std::string& text) const {
  std::uint64_t v = parse_natural(text, "parity");
  if (v > 1) throw ParseError("parity value must be 0 or 1");
  return {Value(v)};
}

Element PrecedenceMonoid::combine(const Element& a, const Element& b) const {
  return a.at(0).natural() != kEps ? a : b;
}

std::vector<Element> PrecedenceMonoid::elements() const {
  return {{Value(kEps)}, {Value(kTop)}, {Value(kBot)}};
}

std::string PrecedenceMonoid::format(const Element& e) const {
  switch (e.at(0).natural()) {
    case kTop: return "top";
    case kBot: return "bot";
    default: return "eps";
  }
}

Element PrecedenceMonoid::parse(const std::string& text) const {
  if (text == "top") return {Value(kTop)};
  if (text == "bot") return {Value(kBot)};
  if (text == "eps") return {Value(kEps)};
  throw ParseError("precedence value must be top, bot or eps");
}

Accumulator make_concat() {
  Accumulator a("concat", std::make_shared<ConcatMonoid>(),
                [](const Tuple& t, std::size_t) { return encode_list(ListRelation{t}); }, true);
  a.set_identity_encoding(true);
  return a;
}

Accumulator make_sum(std::size_t attribute) {
  if (attribute == 0) throw ArgumentError("sum attribute is 1-based");
  return Accumulator(
      "sum", std::make_shared<SumMonoid>(),
      [attribute](const Tuple& t, std::size_t) {
        if (attribute > t.arity()) throw ArityError("sum attribute beyond tuple arity");
        const Value& v = t.at(attribute);
        if (!v.is_natural()) throw ArgumentError("sum over a non-numeric value " + to_string(v));
        return Element{v};
      },
      true);
}

Accumulator make_count() {
  return Accumulator("count", std::make_shared<SumMonoid>(),
                     [](const Tuple&, std::size_t) { return Element{Value(1)}; }, true);
}

Accumulator make_parity() {
  return Accumulator("parity", std::make_shared<ParityMonoid>(),
                     [](const Tuple&, std::size_t) { return Element{Value(1)}; }, true);
}

Accumulator make_topk(std::size_t k) {
  return Accumulator("topk", std::make_shared<ConcatMonoid>(),
                     [k](const Tuple& t, std::size_t p) {
                       return p <= k ? encode_list(ListRelation{t}) : Element{};
                     },
                     false);
}

Accumulator make_select_at(std::size_t k) {
  if (k == 0) throw ArgumentError("select_at position is 1-based");
  return Accumulator("select_at", std::make_shared<ConcatMonoid>(),
                     [k](const Tuple& t, std::size_t p) {
                       return p == k ? encode_list(ListRelation{t}) : Element{};
                     },
                     false);
}

Accumulator make_precedes(Tuple t1, Tuple t2) {
  if (t1 == t2) throw ArgumentError("precedes needs two distinct tuples");
  return Accumulator("precedes", std::make_shared<PrecedenceMonoid>(),
                     [t1, t2](const Tuple& t, std::size_t) {
                       if (t == t1) return Element{Value(PrecedenceMonoid::kTop)};
                       if (t == t2) return Element{Value(PrecedenceMonoid::kBot)};
                       return Element{Value(PrecedenceMonoid::kEps)};
                     },
                     true);
}

Accumulator make_dfa(Dfa dfa) {
  auto m = std::make_shared<TransitionMonoid>(std::move(dfa));
  const TransitionMonoid* raw = m.get();
  return Accumulator("dfa", m,
                     [raw](const Tuple& t, std::size_t) { return function_element(raw->dfa().step(t)); },
                     true);
}

namespace {

std::size_t natural_arg(const std::vector<AccumArg>& args, std::size_t i, const std::string& who) {
  if (i >= args.size() || args[i].is_tuple || !args[i].scalar.is_natural())
    throw ArgumentError(who + " expects a natural argument");
  return args[i].scalar.natural();
}

Tuple tuple_arg(const std::vector<AccumArg>& args, std::size_t i, const std::string& who) {
  if (i >= args.size()) throw ArgumentError(who + " expects two tuple arguments");
  return args[i].is_tuple ? args[i].tuple : Tuple{args[i].scalar};
}

void expect_count(const std::vector<AccumArg>& args, std::size_t lo, std::size_t hi,
                  const std::string& who) {
  if (args.size() < lo || args.size() > hi)
    throw ArgumentError(who + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                        " argument(s)");
}

}  // namespace

Accumulator make_builtin_accumulator(const std::string& name, const std::vector<AccumArg>& args) {
  if (name == "concat") {
    expect_count(args, 0, 0, name);
    return make_concat();
  }
  if (name == "sum") {
    expect_count(args, 0, 1, name);
    return make_sum(args.empty() ? 1 : natural_arg(args, 0, name));
  }
  if (name == "count") {
    expect_count(args, 0, 0, name);
    return make_count();
  }
  if (name == "parity") {
    expect_count(args, 0, 0, name);
    return make_parity();
  }
  if (name == "topk") {
    expect_count(args, 1, 1, name);
    return make_topk(natural_arg(args, 0, name));
  }
  if (name == "select_at") {
    expect_count(args, 1, 1, name);
    return make_select_at(natural_arg(args, 0, name));
  }
  if (name == "precedes") {
    expect_count(args, 2, 2, name);
    return make_precedes(tuple_arg(args, 0, name), tuple_arg(args, 1, name));
  }
  if (name == "dfa") {
    expect_count(args, 1, 1, name);
    if (args[0].is_tuple || !args[0].scalar.is_string())
      throw ArgumentError("dfa expects an automaton file path");
    return make_dfa(load_dfa(args[0].scalar.str()));
  }
  throw ArgumentError("unknown accumulator " + name);
}

std::vector<std::string> builtin_accumulator_names() {
  return {"concat", "sum", "count", "parity", "topk", "select_at", "precedes", "dfa"};
}

}  // namespace ordlattice
