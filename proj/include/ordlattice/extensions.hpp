#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "ordlattice/po_relation.hpp"

namespace ordlattice {

using IdSequence = std::vector<Id>;

/// Lazily yields every linear extension exactly once, lexicographically by id.
/// A complete-failure relation yields nothing; an empty one yields one empty
/// sequence.
class LinearExtensionStream {
 public:
  explicit LinearExtensionStream(const PoRelation& r);
  std::optional<IdSequence> next();

 private:
  void take(Id x);
  void give_back(Id x);
  std::optional<Id> first_available(Id from) const;

  const PoRelation* r_;
  IdSequence prefix_;
  std::vector<std::size_t> pending_;  // unused ancestors per id
  std::vector<char> used_;
  bool started_ = false;
  bool done_ = false;
};

LinearExtensionStream linear_extensions(const PoRelation& r);

using WorldSet = std::unordered_set<ListRelation, ListRelationHash>;

inline constexpr std::size_t kDefaultWorldLimit = 1000000;

/// Distinct value sequences over all extensions. OverflowError past `limit`.
WorldSet possible_worlds(const PoRelation& r, std::size_t limit = kDefaultWorldLimit);
/// Up to `count` distinct worlds (the first ones met in id order), sorted.
std::vector<ListRelation> some_worlds(const PoRelation& r, std::size_t count);
/// Same set as possible_worlds, sorted, for printing and byte-stable comparison.
std::vector<ListRelation> sorted_worlds(const PoRelation& r,
                                        std::size_t limit = kDefaultWorldLimit);

/// NotPermutationError unless seq is a permutation of the ids.
bool is_linear_extension(const PoRelation& r, const IdSequence& seq);

/// Smallest-available-id topological sort.
IdSequence canonical_extension(const PoRelation& r);

ListRelation world_of(const PoRelation& r, const IdSequence& seq);

struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool contains(std::size_t p) const { return lo <= p && p <= hi; }
  bool operator==(const Interval&) const = default;
};

/// [a+1, n-d] for incomparable x, y. ComparableError otherwise.
Interval possible_ranks(const PoRelation& r, Id x, Id y);

/// An extension with x at 1-based position p and y at q. RankError when the
/// pair or positions are not admissible.
IdSequence rank_witness(const PoRelation& r, Id x, Id y, std::size_t p, std::size_t q);

/// [#ancestors+1, n-#descendants].
Interval index_bounds(const PoRelation& r, Id x);

}  // namespace ordlattice
