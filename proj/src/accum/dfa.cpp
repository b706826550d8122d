#include "ordlattice/dfa.hpp"

#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ordlattice/errors.hpp"

namespace ordlattice {

void Dfa::validate() const {
  if (states == 0) throw ArgumentError("automaton needs at least one state");
  if (initial >= states) throw ArgumentError("initial state out of range");
  if (attribute == 0) throw ArgumentError("automaton attribute is 1-based");
  for (std::size_t s : accepting)
    if (s >= states) throw ArgumentError("accepting state out of range");
  auto check_row = [&](const std::vector<std::size_t>& row, const std::string& what) {
    if (row.size() != states) throw ArgumentError("transition row for " + what + " has wrong length");
    for (std::size_t s : row)
      if (s >= states) throw ArgumentError("transition target out of range for " + what);
  };
  for (const auto& [sym, row] : transitions) check_row(row, "symbol " + sym);
  if (fallback) check_row(*fallback, "default");
}

std::vector<std::size_t> Dfa::step(const Tuple& t) const {
  auto it = transitions.find(t.at(attribute).text());
  if (it != transitions.end()) return it->second;
  if (fallback) return *fallback;
  std::vector<std::size_t> id(states);
  for (std::size_t s = 0; s < states; ++s) id[s] = s;
  return id;
}

bool Dfa::accepts(const std::vector<std::size_t>& function) const {
  std::size_t end = function.at(initial);
  for (std::size_t s : accepting)
    if (s == end) return true;
  return false;
}

Dfa parse_dfa(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("automaton document: ") + e.what());
  }
  Dfa d;
  try {
    d.states = j.at("states").get<std::size_t>();
    d.initial = j.value("initial", std::size_t{0});
    d.accepting = j.value("accepting", std::vector<std::size_t>{});
    d.attribute = j.value("attribute", std::size_t{1});
    for (const auto& [sym, row] : j.at("transitions").items())
      d.transitions[sym] = row.get<std::vector<std::size_t>>();
    if (j.contains("default")) d.fallback = j.at("default").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("automaton document: ") + e.what());
  }
  try {
    d.validate();
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("automaton document: ") + e.what());
  }
  return d;
}

Dfa load_dfa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open automaton file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_dfa(ss.str());
}

Element function_element(const std::vector<std::size_t>& f) {
  Element e;
  for (std::size_t s : f) e.emplace_back(static_cast<std::uint64_t>(s));
  return e;
}

TransitionMonoid::TransitionMonoid(Dfa dfa) : dfa_(std::move(dfa)) {
  dfa_.validate();
  std::vector<Element> letters;
  for (const auto& [sym, row] : dfa_.transitions) letters.push_back(function_element(row));
  if (dfa_.fallback) letters.push_back(function_element(*dfa_.fallback));
  std::set<Element> seen{neutral()};
  std::deque<Element> todo{neutral()};
  while (!todo.empty()) {
    Element f = todo.front();
    todo.pop_front();
    for (const auto& g : letters) {
      Element fg = combine(f, g);
      if (seen.insert(fg).second) todo.push_back(fg);
    }
  }
  elements_.assign(seen.begin(), seen.end());
  cancellative_ = check_cancellative(*this);
}

Element TransitionMonoid::neutral() const {
  Element e;
  for (std::size_t s = 0; s < dfa_.states; ++s) e.emplace_back(static_cast<std::uint64_t>(s));
  return e;
}

Element TransitionMonoid::combine(const Element& a, const Element& b) const {
  Element out(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) out[s] = b.at(a[s].natural());
  return out;
}

}  // namespace ordlattice
