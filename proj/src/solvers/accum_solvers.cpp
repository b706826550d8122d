#include <algorithm>
#include <map>

#include "ordlattice/accumulator.hpp"
#include "ordlattice/errors.hpp"
#include "ordlattice/log.hpp"
#include "ordlattice/partitions.hpp"
#include "ordlattice/solvers.hpp"

namespace ordlattice {

namespace {

Verdict verdict(bool answer, const char* method) {
  Verdict v;
  v.answer = answer;
  v.method = method;
  return v;
}

struct AccumContext {
  bool width_ok = false;
  const UnionBranches* branches = nullptr;
};

// Result sets from the applicable DP, or nullopt when neither applies.
std::optional<std::pair<ResultWitnesses, const char*>> dp_results(const Accumulator& acc, const PoRelation& r,
                                                                   const AccumContext& ctx,
                                                                   const DispatchPolicy& policy) {
  if (!acc.monoid().is_finite()) return std::nullopt;
  if (ctx.width_ok) {
    debug_log("accum: finite monoid, width within threshold, chain DP");
    return std::make_pair(results_bounded_width(acc, r), method::kAccumBoundedWidth);
  }
  if (acc.is_position_invariant() && ctx.branches) {
    auto s = split_width_ia(*ctx.branches, r.arity(), policy);
    if (s) {
      debug_log("accum: finite position-invariant monoid, union DP");
      ResultWitnesses res = results_noprod_union(acc, s->width_side, s->ia_side);
      for (auto& [v, w] : res)
        for (Id& id : w) id = id < s->width_ids.size() ? s->width_ids[id] : s->ia_ids[id - s->width_ids.size()];
      return std::make_pair(std::move(res), method::kAccumUnion);
    }
  }
  return std::nullopt;
}

Verdict poss_accum_impl(const Accumulator& acc, const PoRelation& r, const Element& value,
                        const DispatchPolicy& policy, const AccumContext& ctx) {
  if (r.failed()) return verdict(false, method::kCompleteFailure);
  if (auto dp = dp_results(acc, r, ctx, policy)) {
    Verdict v = verdict(false, dp->second);
    auto it = dp->first.find(value);
    if (it != dp->first.end()) {
      v.answer = true;
      v.witness = it->second;
    }
    return v;
  }
  debug_log("accum: exhaustive search");
  Verdict v = verdict(false, method::kAccumBruteForce);
  search_results(acc, r, policy.brute_force_cap, [&](const Element& e, const IdSequence& w) {
    if (e != value) return false;
    v.answer = true;
    v.witness = w;
    return true;
  });
  return v;
}

Verdict cert_accum_impl(const Accumulator& acc, const PoRelation& r, const Element& value,
                        const DispatchPolicy& policy, const AccumContext& ctx) {
  if (r.failed()) return verdict(false, method::kCompleteFailure);
  if (acc.monoid().is_cancellative()) {
    debug_log("accum: cancellative monoid, safe swaps");
    return cert_safe_swaps(acc, r, value);
  }
  if (auto dp = dp_results(acc, r, ctx, policy)) {
    Verdict v = verdict(false, dp->second);
    for (const auto& [e, w] : dp->first)
      if (e != value) {
        v.counterexample_value = e;
        v.witness = w;
        return v;
      }
    v.answer = true;  // the set is non-empty, so it is exactly {value}
    return v;
  }
  debug_log("accum: exhaustive search");
  Verdict v = verdict(true, method::kAccumBruteForce);
  search_results(acc, r, policy.brute_force_cap, [&](const Element& e, const IdSequence& w) {
    if (e == value) return false;
    v.answer = false;
    v.counterexample_value = e;
    v.witness = w;
    return true;
  });
  return v;
}

Verdict list_poss(const Query* query, const PoDatabase* db, const PoRelation& r,
                  const Element& value, const DispatchPolicy& policy) {
  ListRelation l = decode_list(value);
  Verdict v = query ? poss(*query, *db, l, policy) : poss_relation(r, l, policy);
  v.method = std::string(method::kListReduction) + "/" + v.method;
  return v;
}

Verdict list_cert(const Accumulator& acc, const PoRelation& r, const Element& value) {
  Verdict v = cert_relation(r, decode_list(value));
  if (v.counterexample_world) v.counterexample_value = acc.monoid().parse(to_string(*v.counterexample_world));
  v.method = std::string(method::kListReduction) + "/" + v.method;
  return v;
}

}  // namespace

Verdict cert_safe_swaps(const Accumulator& acc, const PoRelation& r, const Element& value) {
  if (!acc.monoid().is_cancellative())
    throw NotCancellativeError("monoid " + acc.monoid().name() + " is not cancellative");
  if (r.failed()) return verdict(false, method::kCompleteFailure);
  Verdict out = verdict(false, method::kSafeSwaps);
  const Monoid& m = acc.monoid();
  const std::size_t n = r.size();
  for (Id x = 0; x < n; ++x)
    for (Id y = x + 1; y < n; ++y) {
      if (r.comparable(x, y)) continue;
      Interval pr = possible_ranks(r, x, y);
      const Tuple &tx = r.label(x), &ty = r.label(y);
      for (std::size_t p = pr.lo; p < pr.hi; ++p) {
        if (m.combine(acc.map(tx, p), acc.map(ty, p + 1)) == m.combine(acc.map(ty, p), acc.map(tx, p + 1)))
          continue;
        // Unsafe swap: by cancellativity the two extensions give different values.
        IdSequence a = rank_witness(r, x, y, p, p + 1), b = rank_witness(r, x, y, p + 1, p);
        Element va = acc.accumulate(world_of(r, a));
        if (va != value) {
          out.witness = a;
          out.counterexample_value = va;
        } else {
          out.witness = b;
          out.counterexample_value = acc.accumulate(world_of(r, b));
        }
        return out;
      }
    }
  IdSequence canon = canonical_extension(r);
  Element only = acc.accumulate(world_of(r, canon));
  out.answer = only == value;
  if (!out.answer) {
    out.witness = canon;
    out.counterexample_value = only;
  }
  return out;
}

Verdict poss_accum_relation(const Accumulator& acc, const PoRelation& r, const Element& value,
                            const DispatchPolicy& policy, const UnionBranches* branches) {
  if (acc.identity_encoding()) return list_poss(nullptr, nullptr, r, value, policy);
  AccumContext ctx{!r.failed() && width(r) <= policy.width_threshold, branches};
  return poss_accum_impl(acc, r, value, policy, ctx);
}

Verdict cert_accum_relation(const Accumulator& acc, const PoRelation& r, const Element& value,
                            const DispatchPolicy& policy, const UnionBranches* branches) {
  if (acc.identity_encoding() && !r.failed()) return list_cert(acc, r, value);
  AccumContext ctx{!r.failed() && width(r) <= policy.width_threshold, branches};
  return cert_accum_impl(acc, r, value, policy, ctx);
}

namespace {

struct Prepared {
  PoRelation r;
  std::optional<UnionBranches> branches;
  AccumContext ctx;
};

Prepared prepare(const Query& query, const PoDatabase& db, const DispatchPolicy& policy) {
  Prepared p{eval(query, db), std::nullopt, {}};
  if (p.r.failed()) return p;
  p.ctx.width_ok = width_fast_path_applies(query, db, p.r, policy);
  if (is_union_of_spj(query)) p.branches = split_union_branches(query, db);
  return p;
}

}  // namespace

Verdict poss_accum(const Accumulator& acc, const Query& query, const PoDatabase& db, const Element& value,
                   const DispatchPolicy& policy) {
  if (acc.identity_encoding()) return list_poss(&query, &db, PoRelation(), value, policy);
  Prepared p = prepare(query, db, policy);
  p.ctx.branches = p.branches ? &*p.branches : nullptr;
  return poss_accum_impl(acc, p.r, value, policy, p.ctx);
}

Verdict cert_accum(const Accumulator& acc, const Query& query, const PoDatabase& db, const Element& value,
                   const DispatchPolicy& policy) {
  Prepared p = prepare(query, db, policy);
  if (acc.identity_encoding() && !p.r.failed()) return list_cert(acc, p.r, value);
  p.ctx.branches = p.branches ? &*p.branches : nullptr;
  return cert_accum_impl(acc, p.r, value, policy, p.ctx);
}

namespace {

// Restricts every union branch to the ids of one group, keeping offsets
// consistent with the restricted relation.
UnionBranches restrict_branches(const UnionBranches& b, const std::vector<char>& in_group) {
  UnionBranches out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < b.parts.size(); ++i) {
    std::vector<Id> keep;
    for (Id x = 0; x < b.parts[i].size(); ++x)
      if (in_group[b.offsets[i] + x]) keep.push_back(x);
    out.offsets.push_back(offset);
    out.parts.push_back(b.parts[i].restrict(keep));
    offset += keep.size();
  }
  return out;
}

}  // namespace

Verdict cert_group_by(const GroupByAccumulator& g, const Query& query, const PoDatabase& db,
                      const GroupResult& candidate, const DispatchPolicy& policy) {
  PoRelation r = eval(query, db);
  if (r.failed()) return verdict(false, method::kCompleteFailure);
  std::optional<UnionBranches> branches;
  if (is_union_of_spj(query)) branches = split_union_branches(query, db);

  std::map<Tuple, std::vector<Id>> groups;
  for (Id x = 0; x < r.size(); ++x) groups[group_key(r.label(x), g.attrs)].push_back(x);
  std::map<Tuple, Element> wanted;
  for (const auto& [k, v] : candidate)
    if (!wanted.emplace(k, v).second) return verdict(false, method::kGroupBy);

  Verdict out = verdict(false, method::kGroupBy);
  if (wanted.size() != groups.size() ||
      !std::equal(groups.begin(), groups.end(), wanted.begin(),
                  [](const auto& a, const auto& b) { return a.first == b.first; })) {
    // Group keys do not depend on the order, so every world disagrees.
    out.witness = canonical_extension(r);
    return out;
  }
  for (const auto& [key, ids] : groups) {
    PoRelation sub = r.restrict(ids);
    std::optional<UnionBranches> sub_branches;
    if (branches) {
      std::vector<char> in_group(r.size(), 0);
      for (Id x : ids) in_group[x] = 1;
      sub_branches = restrict_branches(*branches, in_group);
    }
    Verdict v = cert_accum_relation(g.acc, sub, wanted.at(key), policy, sub_branches ? &*sub_branches : nullptr);
    if (v.answer) continue;
    out.method = std::string(method::kGroupBy) + "/" + v.method;
    out.group = key;
    out.counterexample_value = v.counterexample_value;
    if (v.witness) {
      // Lift the group's extension to a whole extension of the result.
      auto pairs = r.order_pairs();
      for (std::size_t i = 0; i + 1 < v.witness->size(); ++i)
        pairs.push_back({ids[(*v.witness)[i]], ids[(*v.witness)[i + 1]]});
      out.witness = canonical_extension(PoRelation::from_pairs(r.arity(), r.labels(), pairs));
    }
    return out;
  }
  out.answer = true;
  return out;
}

Verdict poss_group_by(const GroupByAccumulator& g, const Query& query, const PoDatabase& db,
                      const GroupResult& candidate, const DispatchPolicy& policy) {
  PoRelation r = eval(query, db);
  if (r.failed()) return verdict(false, method::kCompleteFailure);
  GroupResult sorted = candidate;
  std::sort(sorted.begin(), sorted.end());
  auto all = group_by_results(g, r, policy.world_limit, policy.brute_force_cap);
  return verdict(all.count(sorted) > 0, method::kAccumBruteForce);
}

}  // namespace ordlattice
