#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ordlattice/bitset.hpp"
#include "ordlattice/value.hpp"

namespace ordlattice {

using Id = std::size_t;
using IdPair = std::pair<Id, Id>;

/// Identifiers labeled with tuples plus a strict partial order on them.
///
/// Ids are dense: 0..size()-1. The order is kept as full closure rows in both
/// directions together with its Hasse reduction. Instances are immutable.
///
/// A relation may also be a complete-failure marker: the result of duplicate
/// elimination on an input whose value classes are cyclically ordered. It has
/// no ids and no possible worlds at all (not even the empty one).
class PoRelation {
 public:
  PoRelation() = default;
  explicit PoRelation(std::size_t arity) : arity_(arity) {}

  /// Closes `pairs` transitively. Throws CycleError (naming `name` if given)
  /// or ArityError when a label has the wrong arity.
  static PoRelation from_pairs(std::size_t arity, std::vector<Tuple> labels,
                               const std::vector<IdPair>& pairs,
                               const std::string& name = "");

  /// Trusted constructor: `below[i]` must already be the strict ancestor set
  /// of i and describe a transitive, irreflexive relation.
  static PoRelation from_closure(std::size_t arity, std::vector<Tuple> labels,
                                 std::vector<Bitset> below);

  static PoRelation complete_failure(std::size_t arity);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  std::size_t arity() const { return arity_; }
  bool failed() const { return failed_; }

  const Tuple& label(Id id) const { return labels_[id]; }
  const std::vector<Tuple>& labels() const { return labels_; }

  bool less(Id a, Id b) const { return below_[b].test(a); }
  bool comparable(Id a, Id b) const { return less(a, b) || less(b, a); }

  const Bitset& ancestors(Id id) const { return below_[id]; }
  const Bitset& descendants(Id id) const { return above_[id]; }

  /// Covering pairs (a, b), sorted.
  const std::vector<IdPair>& hasse() const { return hasse_; }
  /// Every pair of the strict order, sorted.
  std::vector<IdPair> order_pairs() const;

  /// Induced sub-relation on `keep`; new id i is old id keep[i].
  PoRelation restrict(const std::vector<Id>& keep) const;
  /// Same order, new labels (all of arity `arity`).
  PoRelation relabel(std::size_t arity, std::vector<Tuple> labels) const;

  bool is_total() const;
  bool is_unordered() const { return hasse_.empty(); }
  bool has_duplicates() const;

  /// Structural equality on concrete ids, labels and order.
  bool operator==(const PoRelation& o) const {
    return arity_ == o.arity_ && failed_ == o.failed_ && labels_ == o.labels_ &&
           below_ == o.below_;
  }

 private:
  void finish();

  std::size_t arity_ = 0;
  bool failed_ = false;
  std::vector<Tuple> labels_;
  std::vector<Bitset> below_;
  std::vector<Bitset> above_;
  std::vector<IdPair> hasse_;
};

/// General-id entry point: ids are arbitrary integers, `labels[i]` labels
/// `ids[i]`, and `pairs` refer to those integers. The result uses dense ids in
/// the order the ids were given.
PoRelation validate_po_relation(const std::vector<std::int64_t>& ids,
                                std::vector<Tuple> labels,
                                const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                                std::size_t arity);

}  // namespace ordlattice
