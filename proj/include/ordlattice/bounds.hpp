#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "ordlattice/query.hpp"

namespace ordlattice {

/// std::nullopt stands for an unbounded (infinite) estimate.
using Bound = std::optional<std::size_t>;

struct StaticBounds {
  Bound width;
  Bound ia_width;
};

/// Static upper bounds on the width and ia-width of the query result given
/// per-relation bounds. Width is unbounded once a direct product appears;
/// ia-width is unbounded once any product or dedup appears.
StaticBounds width_bounds(const Query& query, const std::map<std::string, std::size_t>& input_widths,
                          const std::map<std::string, std::size_t>& input_iawidths);

/// Uniform bound k^(|Q|+1) for direct-product-free queries over inputs of
/// width at most k (k is raised to 2 if smaller); unbounded otherwise. Saturates at SIZE_MAX.
Bound uniform_width_bound(const Query& query, std::size_t k);

/// Uniform ia-width bound max(k, c) * |Q| for product-free queries without
/// dedup, c being the longest chain constant.
Bound uniform_iawidth_bound(const Query& query, std::size_t k);

}  // namespace ordlattice
