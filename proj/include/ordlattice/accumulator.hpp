#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordlattice/dfa.hpp"
#include "ordlattice/monoid.hpp"

namespace ordlattice {

/// Lists of tuples under concatenation. An element stores each tuple as its
/// arity followed by its values.
class ConcatMonoid : public Monoid {
 public:
  std::string name() const override { return "concat"; }
  Element neutral() const override { return {}; }
  Element combine(const Element& a, const Element& b) const override;
  bool is_cancellative() const override { return true; }
  /// JSON array of tuples.
  std::string format(const Element& e) const override;
  Element parse(const std::string& text) const override;
};

Element encode_list(const ListRelation& l);
ListRelation decode_list(const Element& e);

/// Naturals under addition (OverflowError past 2^64-1).
class SumMonoid : public Monoid {
 public:
  std::string name() const override { return "sum"; }
  Element neutral() const override { return {Value(0)}; }
  Element combine(const Element& a, const Element& b) const override;
  bool is_cancellative() const override { return true; }
  std::string format(const Element& e) const override;
  Element parse(const std::string& text) const override;
};

/// Integers mod 2; a group, hence cancellative.
class ParityMonoid : public Monoid {
 public:
  std::string name() const override { return "parity"; }
  Element neutral() const override { return {Value(0)}; }
  Element combine(const Element& a, const Element& b) const override;
  bool is_cancellative() const override { return true; }
  bool is_finite() const override { return true; }
  std::vector<Element> elements() const override { return {{Value(0)}, {Value(1)}}; }
  std::string format(const Element& e) const override;
  Element parse(const std::string& text) const override;
};

/// {eps, top, bot}: the leftmost non-neutral operand wins.
class PrecedenceMonoid : public Monoid {
 public:
  static constexpr std::uint64_t kEps = 0, kTop = 1, kBot = 2;
  std::string name() const override { return "precedes"; }
  Element neutral() const override { return {Value(kEps)}; }
  Element combine(const Element& a, const Element& b) const override;
  bool is_cancellative() const override { return false; }
  bool is_finite() const override { return true; }
  std::vector<Element> elements() const override;
  /// "eps", "top", "bot".
  std::string format(const Element& e) const override;
  Element parse(const std::string& text) const override;
};

Accumulator make_concat();
/// Sum of the natural at 1-based `attribute`; ArgumentError on a string.
Accumulator make_sum(std::size_t attribute = 1);
Accumulator make_count();
Accumulator make_parity();
/// Keeps the first k tuples of the list.
Accumulator make_topk(std::size_t k);
/// Keeps the tuple at position k, if any.
Accumulator make_select_at(std::size_t k);
/// top if some t1 comes before every t2, bot if a t2 comes first, eps if
/// neither occurs.
Accumulator make_precedes(Tuple t1, Tuple t2);
Accumulator make_dfa(Dfa dfa);

/// One registry argument: a scalar or a bracketed tuple.
struct AccumArg {
  bool is_tuple = false;
  Value scalar;
  Tuple tuple;
};

/// Builtins by name: concat, sum([i]), count, parity, topk(k), select_at(k),
/// precedes(t1, t2), dfa(path). ArgumentError for unknown names or bad args.
Accumulator make_builtin_accumulator(const std::string& name, const std::vector<AccumArg>& args);
std::vector<std::string> builtin_accumulator_names();

}  // namespace ordlattice
