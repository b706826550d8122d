#include <algorithm>
#include <functional>

#include "ordlattice/errors.hpp"
#include "ordlattice/solvers.hpp"

namespace ordlattice {

PossCert select_at_k_relation(const PoRelation& r, const Tuple& t, std::size_t k) {
  if (r.failed()) return {};
  if (k < 1 || k > r.size())
    throw PositionError("position " + std::to_string(k) + " outside 1.." + std::to_string(r.size()));
  PossCert out;
  bool conflict = false;
  for (Id x = 0; x < r.size(); ++x) {
    if (!index_bounds(r, x).contains(k)) continue;
    if (r.label(x) == t)
      out.poss = true;
    else
      conflict = true;
  }
  out.cert = out.poss && !conflict;
  return out;
}

PossCert select_at_k(const Query& query, const PoDatabase& db, const Tuple& t, std::size_t k) {
  return select_at_k_relation(eval(query, db), t, k);
}

PossCert top_k_relation(const PoRelation& r, const ListRelation& prefix, const DispatchPolicy& policy) {
  const std::size_t k = prefix.size();
  if (k > policy.topk_cap)
    throw ResourceExceeded("top-k with k=" + std::to_string(k) + " exceeds the cap of " +
                           std::to_string(policy.topk_cap));
  if (r.failed() || k > r.size()) return {};
  PossCert out;
  bool mismatch = false;
  std::vector<char> used(r.size(), 0);
  std::vector<std::size_t> pending(r.size());
  for (Id i = 0; i < r.size(); ++i) pending[i] = r.ancestors(i).count();
  // Depth-first over feasible length-k prefixes; `agree` tracks whether the
  // prefix built so far still matches.
  std::function<void(std::size_t, bool)> run = [&](std::size_t depth, bool agree) {
    if (out.poss && mismatch) return;
    if (depth == k) {
      (agree ? out.poss : mismatch) = true;
      return;
    }
    std::vector<Id> tried;
    for (Id x = 0; x < r.size(); ++x) {
      if (used[x] || pending[x]) continue;
      bool twin = std::any_of(tried.begin(), tried.end(), [&](Id t) {
        return r.label(t) == r.label(x) && r.ancestors(t) == r.ancestors(x) &&
               r.descendants(t) == r.descendants(x);
      });
      if (twin) continue;
      tried.push_back(x);
      used[x] = 1;
      r.descendants(x).for_each([&](Id d) { --pending[d]; });
      run(depth + 1, agree && r.label(x) == prefix.rows[depth]);
      r.descendants(x).for_each([&](Id d) { ++pending[d]; });
      used[x] = 0;
      if (out.poss && mismatch) return;
    }
  };
  run(0, true);
  out.cert = out.poss && !mismatch;
  return out;
}

PossCert top_k(const Query& query, const PoDatabase& db, const ListRelation& prefix,
               const DispatchPolicy& policy) {
  return top_k_relation(eval(query, db), prefix, policy);
}

namespace {

// Some id labeled a has no id labeled b below it.
bool can_precede(const PoRelation& r, const Tuple& a, const Tuple& b) {
  for (Id x = 0; x < r.size(); ++x) {
    if (r.label(x) != a) continue;
    bool blocked = false;
    r.ancestors(x).for_each([&](Id y) { blocked = blocked || r.label(y) == b; });
    if (!blocked) return true;
  }
  return false;
}

}  // namespace

PossCert tuple_precedence_relation(const PoRelation& r, const Tuple& t1, const Tuple& t2) {
  if (t1 == t2) throw ArgumentError("tuple precedence needs two distinct tuples");
  const auto& ls = r.labels();
  if (r.failed() || std::find(ls.begin(), ls.end(), t1) == ls.end() ||
      std::find(ls.begin(), ls.end(), t2) == ls.end())
    return {false, false, true};
  return {can_precede(r, t1, t2), !can_precede(r, t2, t1), false};
}

PossCert tuple_precedence(const Query& query, const PoDatabase& db, const Tuple& t1, const Tuple& t2) {
  return tuple_precedence_relation(eval(query, db), t1, t2);
}

}  // namespace ordlattice
