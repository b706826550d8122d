#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ordlattice/extensions.hpp"
#include "ordlattice/po_relation.hpp"
#include "ordlattice/query.hpp"

namespace ordlattice {

using Bag = std::map<Tuple, std::size_t>;

/// The multiset of labels, order forgotten. Empty for a failed relation.
Bag bag_of(const PoRelation& r);

/// Linear extensions whose intersection is the order of r: the canonical one,
/// plus one extension putting y before x for each ordered incomparable pair
/// not yet covered.
std::vector<IdSequence> realizer(const PoRelation& r);

/// A query over no relations whose result has the same possible worlds as r.
/// ArgumentError for a failed relation of arity 0 (it has no such query).
Query synthesize_constant_query(const PoRelation& r);

}  // namespace ordlattice
