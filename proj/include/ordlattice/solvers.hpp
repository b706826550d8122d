#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordlattice/accum_results.hpp"
#include "ordlattice/eval.hpp"
#include "ordlattice/extensions.hpp"
#include "ordlattice/monoid.hpp"
#include "ordlattice/po_relation.hpp"
#include "ordlattice/query.hpp"

namespace ordlattice {

struct DispatchPolicy {
  std::size_t width_threshold = 4;
  std::size_t ia_threshold = 4;
  std::size_t finishing_order_cap = 6;  // ia-classes whose orders are enumerated
  std::size_t brute_force_cap = 14;     // elements for exhaustive search
  std::size_t topk_cap = 3;
  std::size_t world_limit = kDefaultWorldLimit;

  /// Sets one field by its key (k_w, k_ia, finishing_cap, brute_force_cap,
  /// topk_cap, world_limit). ArgumentError on unknown keys or zero values.
  void set(const std::string& key, std::size_t value);
};

namespace method {
inline constexpr const char* kCompleteFailure = "complete-failure";
inline constexpr const char* kMultiset = "multiset-mismatch";
inline constexpr const char* kDedup = "dedup-scc";
inline constexpr const char* kBoundedWidth = "bounded-width-dp";
inline constexpr const char* kUnionWidthIa = "union-width-ia-dp";
inline constexpr const char* kBacktracking = "backtracking";
inline constexpr const char* kCertCanonical = "cert-equal-incomparables";
inline constexpr const char* kSafeSwaps = "safe-swaps";
inline constexpr const char* kAccumBoundedWidth = "accum-bounded-width-dp";
inline constexpr const char* kAccumUnion = "accum-union-dp";
inline constexpr const char* kAccumBruteForce = "accum-bruteforce";
inline constexpr const char* kListReduction = "list-reduction";
inline constexpr const char* kIndexBounds = "index-bounds";
inline constexpr const char* kPrefixes = "prefix-enumeration";
inline constexpr const char* kPrecedence = "precedence-acyclicity";
inline constexpr const char* kGroupBy = "group-by-split";
}  // namespace method

struct Verdict {
  bool answer = false;
  /// POSS yes: extension realizing the candidate; CERT no: extension of a
  /// distinct possible result.
  std::optional<IdSequence> witness;
  /// CERT no: the distinct world (list problems) or value (accumulation).
  std::optional<ListRelation> counterexample_world;
  std::optional<Element> counterexample_value;
  /// Group-by CERT no: the group whose value is not certain or differs.
  std::optional<Tuple> group;
  std::string method;
};

// ---- list candidates ----

Verdict poss(const Query& query, const PoDatabase& db, const ListRelation& candidate,
             const DispatchPolicy& policy = {});
Verdict cert(const Query& query, const PoDatabase& db, const ListRelation& candidate,
             const DispatchPolicy& policy = {});

/// Relation-level dispatch, without a query for static bounds.
Verdict poss_relation(const PoRelation& r, const ListRelation& candidate,
                      const DispatchPolicy& policy = {});
Verdict cert_relation(const PoRelation& r, const ListRelation& candidate);

Verdict poss_bounded_width_dp(const PoRelation& r, const ListRelation& candidate);
/// Candidate possibility for r_w union r_ia (r_ia ids placed after r_w ids).
/// ResourceExceeded when r_ia has more ia-classes than the policy cap.
Verdict poss_union_width_iawidth(const PoRelation& r_w, const PoRelation& r_ia,
                                 const ListRelation& candidate, const DispatchPolicy& policy = {});
/// Memoized search over sets of used ids. ResourceExceeded past the cap.
Verdict poss_backtracking(const PoRelation& r, const ListRelation& candidate,
                          const DispatchPolicy& policy = {});

/// POSS and CERT on a duplicate-free relation through strongly connected
/// components of the order plus the candidate's consecutive pairs.
std::pair<Verdict, Verdict> poss_cert_dedup_relation(const PoRelation& r, const ListRelation& candidate);
std::pair<Verdict, Verdict> poss_cert_dedup(const Query& query, const PoDatabase& db,
                                            const ListRelation& candidate);

// ---- accumulation candidates ----

Verdict cert_safe_swaps(const Accumulator& acc, const PoRelation& r, const Element& value);

Verdict poss_accum(const Accumulator& acc, const Query& query, const PoDatabase& db,
                   const Element& value, const DispatchPolicy& policy = {});
Verdict cert_accum(const Accumulator& acc, const Query& query, const PoDatabase& db,
                   const Element& value, const DispatchPolicy& policy = {});

/// Relation-level accumulation dispatch. `branches`, when given, is the
/// union split of r used by the union DP.
Verdict poss_accum_relation(const Accumulator& acc, const PoRelation& r, const Element& value,
                            const DispatchPolicy& policy = {},
                            const UnionBranches* branches = nullptr);
Verdict cert_accum_relation(const Accumulator& acc, const PoRelation& r, const Element& value,
                            const DispatchPolicy& policy = {},
                            const UnionBranches* branches = nullptr);

/// Every group's value is certain and equals the candidate's (which must
/// list exactly the groups present).
Verdict cert_group_by(const GroupByAccumulator& g, const Query& query, const PoDatabase& db,
                      const GroupResult& candidate, const DispatchPolicy& policy = {});
/// Exhaustive only.
Verdict poss_group_by(const GroupByAccumulator& g, const Query& query, const PoDatabase& db,
                      const GroupResult& candidate, const DispatchPolicy& policy = {});

// ---- position-based problems ----

struct PossCert {
  bool poss = false;
  bool cert = false;
  /// tuple_precedence only: a tuple was absent, so both answers are false.
  bool vacuous = false;
};

/// PositionError unless 1 <= k <= |result|.
PossCert select_at_k(const Query& query, const PoDatabase& db, const Tuple& t, std::size_t k);
PossCert select_at_k_relation(const PoRelation& r, const Tuple& t, std::size_t k);

/// Is `prefix` possibly / certainly the first |prefix| tuples? ResourceExceeded
/// when |prefix| exceeds the policy cap.
PossCert top_k(const Query& query, const PoDatabase& db, const ListRelation& prefix,
               const DispatchPolicy& policy = {});
PossCert top_k_relation(const PoRelation& r, const ListRelation& prefix,
                        const DispatchPolicy& policy = {});

/// Does some occurrence of t1 come before every occurrence of t2?
/// ArgumentError if t1 == t2.
PossCert tuple_precedence(const Query& query, const PoDatabase& db, const Tuple& t1, const Tuple& t2);
PossCert tuple_precedence_relation(const PoRelation& r, const Tuple& t1, const Tuple& t2);

/// Width (from the static bound when the query is direct-product-free, else
/// from the evaluated result) is within the policy threshold.
bool width_fast_path_applies(const Query& query, const PoDatabase& db, const PoRelation& result,
                             const DispatchPolicy& policy);

/// The method poss() would dispatch to, without solving. The union DP may
/// still give way to backtracking at solve time when its cap is hit.
std::string poss_dispatch(const Query& query, const PoDatabase& db, const DispatchPolicy& policy = {});

/// Splits a union of selections/projections into a width side and an
/// ia side, each branch going to the first side whose threshold it meets.
struct WidthIaSplit {
  PoRelation width_side;
  PoRelation ia_side;
  std::vector<Id> width_ids;  // result id of each width-side id
  std::vector<Id> ia_ids;
};
std::optional<WidthIaSplit> split_width_ia(const UnionBranches& branches, std::size_t arity,
                                           const DispatchPolicy& policy);

}  // namespace ordlattice
