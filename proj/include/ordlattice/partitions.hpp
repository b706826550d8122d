#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ordlattice/po_relation.hpp"

namespace ordlattice {

struct ChainPartition {
  /// Each chain is listed bottom to top.
  std::vector<std::vector<Id>> chains;
};

struct IaPartition {
  /// Classes ordered by smallest member; members ascending.
  std::vector<std::vector<Id>> classes;
};

struct WidthResult {
  std::size_t width = 0;
  ChainPartition partition;
};

/// Dilworth via maximum matching on the strict order (minimum chain cover).
WidthResult width_and_chain_partition(const PoRelation& r);
std::size_t width(const PoRelation& r);

/// Greedy merge from singletons; the result has minimum cardinality.
IaPartition ia_partition(const PoRelation& r);
std::size_t ia_width(const PoRelation& r);

/// need[x][j]: how many elements of chain j lie strictly below x. Chains
/// are order-convex from the bottom, so these are prefixes of each chain.
std::vector<std::vector<std::uint32_t>> chain_needs(const PoRelation& r, const ChainPartition& p);

bool is_antichain(const PoRelation& r, const std::vector<Id>& ids);
/// Members share their ancestors and descendants outside the set.
bool is_indistinguishable(const PoRelation& r, const std::vector<Id>& ids);
bool is_chain(const PoRelation& r, const std::vector<Id>& ids);

}  // namespace ordlattice
