#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ordlattice/extensions.hpp"
#include "ordlattice/monoid.hpp"
#include "ordlattice/po_relation.hpp"

namespace ordlattice {

/// Reachable accumulation values, each with one extension realizing it.
using ResultWitnesses = std::map<Element, IdSequence>;

inline constexpr std::size_t kDefaultResultLimit = 1000000;

/// Exhaustive search over (used ids, value so far). OverflowError past
/// `limit` distinct values, ResourceExceeded past `element_cap` ids.
ResultWitnesses results_bruteforce(const Accumulator& acc, const PoRelation& r,
                                   std::size_t limit = kDefaultResultLimit,
                                   std::size_t element_cap = 64);

/// Same search stopping early: `stop(value, witness)` returns true to end.
/// Returns whether it was stopped.
bool search_results(const Accumulator& acc, const PoRelation& r, std::size_t element_cap,
                    const std::function<bool(const Element&, const IdSequence&)>& stop);

/// DP over chain-position vectors of a minimum chain partition (each vector
/// describing an order ideal) paired with the value of the prefix.
/// NotFiniteError unless the monoid is finite.
ResultWitnesses results_bounded_width(const Accumulator& acc, const PoRelation& r);

/// Results for the union of r_width and r_ia (ids of r_ia placed after those
/// of r_width). Tracks chain positions of r_width and, per ia-class of r_ia,
/// how many members of each accumulation value are used.
/// NotFiniteError; NotPositionInvariantError.
ResultWitnesses results_noprod_union(const Accumulator& acc, const PoRelation& r_width,
                                     const PoRelation& r_ia);

/// One group-by output: group key with its value, sorted by key.
using GroupRow = std::pair<Tuple, Element>;
using GroupResult = std::vector<GroupRow>;

Tuple group_key(const Tuple& t, const std::vector<std::size_t>& attrs);

/// Group-by result of a single list.
GroupResult accumulate_groups(const GroupByAccumulator& g, const ListRelation& l);

/// Distinct group-by results over all possible worlds. OverflowError past
/// `limit`; ResourceExceeded past `element_cap` ids.
std::set<GroupResult> group_by_results(const GroupByAccumulator& g, const PoRelation& r,
                                       std::size_t limit = kDefaultResultLimit,
                                       std::size_t element_cap = 64);

}  // namespace ordlattice
