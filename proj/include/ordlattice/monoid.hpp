#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordlattice/value.hpp"

namespace ordlattice {

/// Monoid elements are value sequences; each monoid fixes its own encoding.
using Element = std::vector<Value>;

struct ElementHash {
  std::size_t operator()(const Element& e) const { return hash_tuple(Tuple(e)); }
};

class Monoid {
 public:
  virtual ~Monoid() = default;
  virtual std::string name() const = 0;
  virtual Element neutral() const = 0;
  virtual Element combine(const Element& a, const Element& b) const = 0;
  virtual bool is_cancellative() const = 0;
  virtual bool is_finite() const { return false; }
  /// Every element; NotFiniteError unless is_finite().
  virtual std::vector<Element> elements() const;
  /// Text encoding used by the CLI for candidate values.
  virtual std::string format(const Element& e) const;
  /// Inverse of format; ParseError on bad input.
  virtual Element parse(const std::string& text) const;
};

/// Finite monoid given by a multiplication table over 0..k-1. The table is
/// checked for associativity and for `unit` being neutral on construction.
class TableMonoid : public Monoid {
 public:
  TableMonoid(std::string name, std::vector<std::vector<std::size_t>> table, std::size_t unit);
  std::string name() const override { return name_; }
  Element neutral() const override { return {Value(unit_)}; }
  Element combine(const Element& a, const Element& b) const override;
  bool is_cancellative() const override { return cancellative_; }
  bool is_finite() const override { return true; }
  std::vector<Element> elements() const override;
  std::size_t order() const { return table_.size(); }

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t unit_;
  bool cancellative_;
};

/// Brute-force two-sided cancellativity on a finite carrier.
bool check_cancellative(const Monoid& m);

/// A monoid plus an accumulation map h(tuple, 1-based position).
class Accumulator {
 public:
  using Map = std::function<Element(const Tuple&, std::size_t)>;

  Accumulator(std::string name, std::shared_ptr<const Monoid> monoid, Map h, bool position_invariant,
              std::optional<std::size_t> arity = std::nullopt);

  const std::string& name() const { return name_; }
  const Monoid& monoid() const { return *monoid_; }
  std::shared_ptr<const Monoid> monoid_ptr() const { return monoid_; }
  bool is_position_invariant() const { return position_invariant_; }
  std::optional<std::size_t> arity() const { return arity_; }

  Element map(const Tuple& t, std::size_t position) const { return h_(t, position); }
  /// h(t1,1) + ... + h(tn,n); ArityError when a row has the wrong arity.
  Element accumulate(const ListRelation& l) const;

  /// Set for accumulators whose value is the list itself; the solvers then
  /// reduce to list possibility and certainty.
  bool identity_encoding() const { return identity_; }
  void set_identity_encoding(bool v) { identity_ = v; }

 private:
  std::string name_;
  std::shared_ptr<const Monoid> monoid_;
  Map h_;
  bool position_invariant_;
  std::optional<std::size_t> arity_;
  bool identity_ = false;
};

Element accumulate_list(const Accumulator& acc, const ListRelation& l);

struct GroupByAccumulator {
  Accumulator acc;
  std::vector<std::size_t> attrs;  // 1-based grouping positions
};

}  // namespace ordlattice
