#include "ordlattice/monoid.hpp"

#include <json.hpp>

#include "ordlattice/errors.hpp"

namespace ordlattice {

std::vector<Element> Monoid::elements() const {
  throw NotFiniteError("monoid " + name() + " is not finite");
}

std::string Monoid::format(const Element& e) const { return to_string(Tuple(e)); }

Element Monoid::parse(const std::string& text) const {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad value for monoid ") + name() + ": " + e.what());
  }
  if (!j.is_array()) throw ParseError("monoid " + name() + " expects a JSON array");
  Element out;
  for (const auto& x : j) {
    if (x.is_number_unsigned()) out.emplace_back(x.get<std::uint64_t>());
    else if (x.is_string()) out.emplace_back(x.get<std::string>());
    else throw ParseError("monoid " + name() + " expects naturals or strings");
  }
  return out;
}

TableMonoid::TableMonoid(std::string name, std::vector<std::vector<std::size_t>> table,
                         std::size_t unit)
    : name_(std::move(name)), table_(std::move(table)), unit_(unit) {
  const std::size_t k = table_.size();
  if (unit_ >= k) throw ArgumentError("neutral element out of range");
  for (const auto& row : table_) {
    if (row.size() != k) throw ArgumentError("multiplication table is not square");
    for (std::size_t x : row)
      if (x >= k) throw ArgumentError("multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (table_[unit_][a] != a || table_[a][unit_] != a)
      throw ArgumentError("claimed neutral element is not neutral");
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw ArgumentError("multiplication table is not associative");
  }
  cancellative_ = check_cancellative(*this);
}

Element TableMonoid::combine(const Element& a, const Element& b) const {
  return {Value(table_[a.at(0).natural()][b.at(0).natural()])};
}

std::vector<Element> TableMonoid::elements() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < table_.size(); ++i) out.push_back({Value(i)});
  return out;
}

bool check_cancellative(const Monoid& m) {
  auto els = m.elements();
  for (const auto& a : els)
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = i + 1; j < els.size(); ++j) {
        if (m.combine(a, els[i]) == m.combine(a, els[j])) return false;
        if (m.combine(els[i], a) == m.combine(els[j], a)) return false;
      }
  return true;
}

Accumulator::Accumulator(std::string name, std::shared_ptr<const Monoid> monoid, Map h,
                         bool position_invariant, std::optional<std::size_t> arity)
    : name_(std::move(name)),
      monoid_(std::move(monoid)),
      h_(std::move(h)),
      position_invariant_(position_invariant),
      arity_(arity) {}

Element Accumulator::accumulate(const ListRelation& l) const {
  Element v = monoid_->neutral();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (arity_ && l.rows[i].arity() != *arity_)
      throw ArityError("accumulator " + name_ + " expects arity " + std::to_string(*arity_));
    v = monoid_->combine(v, h_(l.rows[i], i + 1));
  }
  return v;
}

Element accumulate_list(const Accumulator& acc, const ListRelation& l) { return acc.accumulate(l); }

}  // namespace ordlattice
