#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordlattice/value.hpp"

namespace ordlattice {

/// Attribute reference (1-based) or constant.
struct Operand {
  bool is_attribute = true;
  std::size_t attribute = 1;
  Value constant;

  static Operand attr(std::size_t i) { return {true, i, {}}; }
  static Operand value(Value v) { return {false, 0, std::move(v)}; }
  bool operator==(const Operand&) const = default;
};

/// Boolean combination of (in)equality atoms over one tuple.
struct Predicate {
  enum class Kind { True, False, Eq, Neq, And, Or, Not };
  Kind kind = Kind::True;
  Operand lhs, rhs;
  std::vector<Predicate> kids;

  static Predicate always() { return {}; }
  static Predicate never() { return {Kind::False, {}, {}, {}}; }
  static Predicate eq(Operand a, Operand b) { return {Kind::Eq, std::move(a), std::move(b), {}}; }
  static Predicate neq(Operand a, Operand b) { return {Kind::Neq, std::move(a), std::move(b), {}}; }
  static Predicate conj(std::vector<Predicate> ps) { return {Kind::And, {}, {}, std::move(ps)}; }
  static Predicate disj(std::vector<Predicate> ps) { return {Kind::Or, {}, {}, std::move(ps)}; }
  static Predicate negate(Predicate p) { return {Kind::Not, {}, {}, {std::move(p)}}; }

  bool holds(const Tuple& t) const;
  /// Largest attribute referenced; 0 if none.
  std::size_t max_attribute() const;
  bool operator==(const Predicate&) const = default;
};

/// Renders in the query-language syntax; parses back to an equal predicate.
std::string to_string(const Predicate& p);

}  // namespace ordlattice
