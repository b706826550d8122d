#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "ordlattice/bounds.hpp"
#include "ordlattice/errors.hpp"
#include "ordlattice/log.hpp"
#include "ordlattice/partitions.hpp"
#include "ordlattice/solvers.hpp"

namespace ordlattice {

void DispatchPolicy::set(const std::string& key, std::size_t value) {
  if (value == 0) throw ArgumentError("policy value for " + key + " must be positive");
  if (key == "k_w" || key == "width_threshold") width_threshold = value;
  else if (key == "k_ia" || key == "ia_threshold") ia_threshold = value;
  else if (key == "finishing_cap" || key == "finishing_order_cap") finishing_order_cap = value;
  else if (key == "brute_force_cap") brute_force_cap = value;
  else if (key == "topk_cap") topk_cap = value;
  else if (key == "world_limit") world_limit = value;
  else throw ArgumentError("unknown policy key " + key);
}

namespace {

Verdict verdict(bool answer, const char* method) {
  Verdict v;
  v.answer = answer;
  v.method = method;
  return v;
}

bool same_bag(const PoRelation& r, const ListRelation& l) {
  if (r.size() != l.size()) return false;
  std::vector<Tuple> a = r.labels(), b = l.rows;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

using Vec = std::vector<std::uint32_t>;

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u ^ x;
    return h;
  }
};

struct Step {
  Vec state;
  std::size_t parent;
  std::size_t move;
};

// Breadth-first over layers of fixed-size counter vectors; `expand` emits
// successors of a state at layer s. Returns the moves of one path reaching
// the last layer, if any.
template <class Expand>
std::optional<std::vector<std::size_t>> layered_search(std::size_t layers, Vec start, Expand expand) {
  std::vector<std::vector<Step>> levels(1);
  levels[0].push_back({std::move(start), 0, 0});
  for (std::size_t s = 0; s < layers; ++s) {
    std::unordered_map<Vec, std::size_t, VecHash> index;
    std::vector<Step> next;
    for (std::size_t i = 0; i < levels[s].size(); ++i)
      expand(levels[s][i].state, s, [&](Vec v, std::size_t move) {
        if (index.emplace(v, next.size()).second) next.push_back({std::move(v), i, move});
      });
    if (next.empty()) return std::nullopt;
    levels.push_back(std::move(next));
  }
  std::vector<std::size_t> moves(layers);
  std::size_t i = 0;
  for (std::size_t s = layers; s > 0; --s) {
    moves[s - 1] = levels[s][i].move;
    i = levels[s][i].parent;
  }
  return moves;
}

}  // namespace

Verdict poss_bounded_width_dp(const PoRelation& r, const ListRelation& candidate) {
  if (r.failed()) return verdict(false, method::kCompleteFailure);
  Verdict out = verdict(false, method::kBoundedWidth);
  if (!same_bag(r, candidate)) return out;
  ChainPartition p = width_and_chain_partition(r).partition;
  auto need = chain_needs(r, p);
  const std::size_t w = p.chains.size();
  // State m: the first m[j] elements of chain j are placed, sum(m) = layer.
  auto moves = layered_search(r.size(), Vec(w, 0), [&](const Vec& m, std::size_t s, auto&& emit) {
    for (std::size_t j = 0; j < w; ++j) {
      if (m[j] == p.chains[j].size()) continue;
      Id x = p.chains[j][m[j]];
      if (r.label(x) != candidate.rows[s]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < w && ok; ++i) ok = m[i] >= need[x][i];
      if (!ok) continue;
      Vec next = m;
      ++next[j];
      emit(std::move(next), x);
    }
  });
  if (moves) {
    out.answer = true;
    out.witness = *moves;
  }
  return out;
}

Verdict poss_union_width_iawidth(const PoRelation& r_w, const PoRelation& r_ia,
                                 const ListRelation& candidate, const DispatchPolicy& policy) {
  if (r_w.failed() || r_ia.failed()) return verdict(false, method::kCompleteFailure);
  Verdict out = verdict(false, method::kUnionWidthIa);
  const std::size_t n = r_w.size() + r_ia.size();
  {
    std::vector<Tuple> a = r_w.labels(), b = candidate.rows;
    a.insert(a.end(), r_ia.labels().begin(), r_ia.labels().end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return out;
  }
  const auto classes = ia_partition(r_ia).classes;
  const std::size_t c = classes.size();
  if (c > policy.finishing_order_cap)
    throw ResourceExceeded(std::to_string(c) + " ia-classes exceed the finishing-order cap of " +
                           std::to_string(policy.finishing_order_cap));
  ChainPartition p = width_and_chain_partition(r_w).partition;
  auto need = chain_needs(r_w, p);
  const std::size_t w = p.chains.size();

  // Slots: distinct labels per class. State layout: m (w entries), then the
  // used count of every slot.
  std::vector<std::vector<Tuple>> slot_label(c);
  std::vector<std::vector<std::uint32_t>> slot_size(c);
  std::vector<std::size_t> base(c);
  std::vector<std::size_t> class_of(r_ia.size());
  std::vector<std::vector<std::size_t>> below(c);
  std::size_t width_state = w;
  for (std::size_t k = 0; k < c; ++k) {
    base[k] = width_state;
    for (Id x : classes[k]) {
      class_of[x] = k;
      auto it = std::find(slot_label[k].begin(), slot_label[k].end(), r_ia.label(x));
      if (it == slot_label[k].end()) {
        slot_label[k].push_back(r_ia.label(x));
        slot_size[k].push_back(1);
      } else {
        ++slot_size[k][static_cast<std::size_t>(it - slot_label[k].begin())];
      }
    }
    width_state += slot_label[k].size();
  }
  for (std::size_t k = 0; k < c; ++k) {
    std::vector<char> mark(c, 0);
    r_ia.ancestors(classes[k].front()).for_each([&](Id a) { mark[class_of[a]] = 1; });
    for (std::size_t b = 0; b < c; ++b)
      if (mark[b]) below[k].push_back(b);
  }
  auto used = [&](const Vec& m, std::size_t k) {
    std::uint32_t u = 0;
    for (std::size_t s = 0; s < slot_label[k].size(); ++s) u += m[base[k] + s];
    return u;
  };

  std::vector<std::size_t> order(c);
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<std::size_t> rank(c);
    for (std::size_t i = 0; i < c; ++i) rank[order[i]] = i;
    bool consistent = true;
    for (std::size_t k = 0; k < c && consistent; ++k)
      for (std::size_t b : below[k]) consistent = consistent && rank[b] < rank[k];
    if (!consistent) continue;
    auto moves = layered_search(n, Vec(width_state, 0), [&](const Vec& m, std::size_t s, auto&& emit) {
      const Tuple& want = candidate.rows[s];
      for (std::size_t j = 0; j < w; ++j) {
        if (m[j] == p.chains[j].size()) continue;
        Id x = p.chains[j][m[j]];
        if (r_w.label(x) != want) continue;
        bool ok = true;
        for (std::size_t i = 0; i < w && ok; ++i) ok = m[i] >= need[x][i];
        if (!ok) continue;
        Vec next = m;
        ++next[j];
        emit(std::move(next), x);
      }
      // Greedy: the open class finishing earliest under this order that
      // still has an unused copy of the wanted value.
      std::size_t finished = 0;
      for (std::size_t k = 0; k < c; ++k) finished += used(m, k) == classes[k].size();
      for (std::size_t i = 0; i < c; ++i) {
        std::size_t k = order[i];
        if (used(m, k) == classes[k].size()) continue;
        bool open = std::all_of(below[k].begin(), below[k].end(),
                                [&](std::size_t b) { return used(m, b) == classes[b].size(); });
        if (!open) continue;
        auto it = std::find(slot_label[k].begin(), slot_label[k].end(), want);
        if (it == slot_label[k].end()) continue;
        std::size_t slot = base[k] + static_cast<std::size_t>(it - slot_label[k].begin());
        if (m[slot] == slot_size[k][slot - base[k]]) continue;
        Vec next = m;
        ++next[slot];
        if (used(next, k) == classes[k].size() && rank[k] != finished) break;
        emit(std::move(next), r_w.size() + k);
        break;
      }
    });
    if (!moves) continue;
    std::vector<char> taken(r_ia.size(), 0);
    IdSequence witness;
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t mv = (*moves)[s];
      if (mv < r_w.size()) {
        witness.push_back(mv);
        continue;
      }
      for (Id x : classes[mv - r_w.size()])
        if (!taken[x] && r_ia.label(x) == candidate.rows[s]) {
          taken[x] = 1;
          witness.push_back(r_w.size() + x);
          break;
        }
    }
    out.answer = true;
    out.witness = std::move(witness);
    return out;
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Verdict poss_backtracking(const PoRelation& r, const ListRelation& candidate,
                          const DispatchPolicy& policy) {
  if (r.failed()) return verdict(false, method::kCompleteFailure);
  Verdict out = verdict(false, method::kBacktracking);
  if (!same_bag(r, candidate)) return out;
  if (r.size() > policy.brute_force_cap)
    throw ResourceExceeded("backtracking over " + std::to_string(r.size()) +
                           " elements exceeds the cap of " + std::to_string(policy.brute_force_cap));
  const std::size_t n = r.size();
  std::unordered_set<Bitset, BitsetHash> dead;
  Bitset used(n);
  std::vector<std::size_t> pending(n);
  for (Id i = 0; i < n; ++i) pending[i] = r.ancestors(i).count();
  IdSequence prefix;
  std::function<bool()> run = [&]() -> bool {
    if (prefix.size() == n) return true;
    if (dead.count(used)) return false;
    const Tuple& want = candidate.rows[prefix.size()];
    std::vector<Id> tried;
    for (Id x = 0; x < n; ++x) {
      if (used.test(x) || pending[x] || r.label(x) != want) continue;
      bool twin = std::any_of(tried.begin(), tried.end(), [&](Id t) {
        return r.ancestors(t) == r.ancestors(x) && r.descendants(t) == r.descendants(x);
      });
      if (twin) continue;
      tried.push_back(x);
      used.set(x);
      prefix.push_back(x);
      r.descendants(x).for_each([&](Id d) { --pending[d]; });
      if (run()) return true;
      r.descendants(x).for_each([&](Id d) { ++pending[d]; });
      prefix.pop_back();
      used.reset(x);
    }
    dead.insert(used);
    return false;
  };
  if (run()) {
    out.answer = true;
    out.witness = prefix;
  }
  return out;
}

namespace {

// Tarjan's strongly connected components; true iff every component is a
// single vertex (self-loops never occur here).
bool acyclic_by_scc(std::size_t n, const std::vector<std::vector<Id>>& succ) {
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Id> stack;
  std::size_t counter = 0;
  bool acyclic = true;
  std::function<void(Id)> connect = [&](Id v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (Id u : succ[v]) {
      if (index[u] == SIZE_MAX) {
        connect(u);
        low[v] = std::min(low[v], low[u]);
      } else if (on_stack[u]) {
        low[v] = std::min(low[v], index[u]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t members = 0;
      for (;;) {
        Id u = stack.back();
        stack.pop_back();
        on_stack[u] = 0;
        ++members;
        if (u == v) break;
      }
      if (members > 1) acyclic = false;
    }
  };
  for (Id v = 0; v < n; ++v)
    if (index[v] == SIZE_MAX) connect(v);
  return acyclic;
}

// For two extensions of r differing in one adjacent swap, the world that is
// not `avoid` (the first when both differ).
void set_counterexample(Verdict& v, const PoRelation& r, const IdSequence& a, const IdSequence& b,
                        const ListRelation& avoid) {
  ListRelation wa = world_of(r, a);
  if (wa != avoid) {
    v.witness = a;
    v.counterexample_world = std::move(wa);
  } else {
    v.witness = b;
    v.counterexample_world = world_of(r, b);
  }
}

}  // namespace

std::pair<Verdict, Verdict> poss_cert_dedup_relation(const PoRelation& r, const ListRelation& candidate) {
  if (r.failed()) return {verdict(false, method::kCompleteFailure), verdict(false, method::kCompleteFailure)};
  Verdict p = verdict(false, method::kDedup), c = verdict(false, method::kDedup);
  const std::size_t n = r.size();
  std::map<Tuple, Id> by_label;
  for (Id i = 0; i < n; ++i) by_label.emplace(r.label(i), i);
  if (by_label.size() != n) throw ArgumentError("dedup solver needs a duplicate-free relation");

  auto fallback_counterexample = [&] {
    IdSequence canon = canonical_extension(r);
    c.witness = canon;
    c.counterexample_world = world_of(r, canon);
  };

  IdSequence ids;
  bool matched = candidate.size() == n;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; matched && i < n; ++i) {
    auto it = by_label.find(candidate.rows[i]);
    matched = it != by_label.end() && !seen[it->second];
    if (matched) {
      seen[it->second] = 1;
      ids.push_back(it->second);
    }
  }
  if (!matched) {
    fallback_counterexample();
    return {p, c};
  }
  std::vector<std::vector<Id>> succ(n);
  for (auto [a, b] : r.hasse()) succ[a].push_back(b);
  for (std::size_t i = 0; i + 1 < n; ++i) succ[ids[i]].push_back(ids[i + 1]);
  if (!acyclic_by_scc(n, succ)) {
    fallback_counterexample();
    return {p, c};
  }
  p.answer = true;
  p.witness = ids;
  // The extension is unique iff each consecutive pair is comparable.
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!r.less(ids[i], ids[i + 1])) {
      IdSequence swapped = ids;
      std::swap(swapped[i], swapped[i + 1]);
      c.witness = swapped;
      c.counterexample_world = world_of(r, swapped);
      return {p, c};
    }
  c.answer = true;
  return {p, c};
}

std::pair<Verdict, Verdict> poss_cert_dedup(const Query& query, const PoDatabase& db,
                                            const ListRelation& candidate) {
  return poss_cert_dedup_relation(eval(query, db), candidate);
}

Verdict cert_relation(const PoRelation& r, const ListRelation& candidate) {
  if (r.failed()) return verdict(false, method::kCompleteFailure);
  if (!r.has_duplicates()) return poss_cert_dedup_relation(r, candidate).second;
  Verdict out = verdict(false, method::kCertCanonical);
  const std::size_t n = r.size();
  IdSequence canon = canonical_extension(r);
  ListRelation world = world_of(r, canon);
  std::optional<IdPair> differing;
  for (Id x = 0; x < n && !differing; ++x)
    for (Id y = x + 1; y < n; ++y)
      if (!r.comparable(x, y) && r.label(x) != r.label(y)) {
        differing = IdPair{x, y};
        break;
      }
  if (!differing) {
    // Every extension yields the same world.
    out.answer = world == candidate;
    if (!out.answer) {
      out.witness = canon;
      out.counterexample_world = world;
    }
    return out;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Id a = canon[i], b = canon[i + 1];
    if (!r.comparable(a, b) && r.label(a) != r.label(b)) {
      IdSequence swapped = canon;
      std::swap(swapped[i], swapped[i + 1]);
      set_counterexample(out, r, swapped, canon, candidate);
      return out;
    }
  }
  auto [x, y] = *differing;
  std::size_t p = possible_ranks(r, x, y).lo;
  set_counterexample(out, r, rank_witness(r, x, y, p, p + 1), rank_witness(r, x, y, p + 1, p), candidate);
  return out;
}

bool width_fast_path_applies(const Query& query, const PoDatabase& db, const PoRelation& result,
                             const DispatchPolicy& policy) {
  if (!contains_op(query, Op::DirProduct)) {
    std::map<std::string, std::size_t> widths, ias;
    for (const auto& name : relation_names(query)) {
      widths[name] = width(db.get(name));
      ias[name] = 0;
    }
    Bound b = width_bounds(query, widths, ias).width;
    if (b && *b <= policy.width_threshold) return true;
  }
  return width(result) <= policy.width_threshold;
}

std::optional<WidthIaSplit> split_width_ia(const UnionBranches& branches, std::size_t arity,
                                           const DispatchPolicy& policy) {
  WidthIaSplit s{PoRelation(arity), PoRelation(arity), {}, {}};
  for (std::size_t b = 0; b < branches.parts.size(); ++b) {
    const PoRelation& part = branches.parts[b];
    if (part.failed()) return std::nullopt;
    bool to_width = width(part) <= policy.width_threshold;
    if (!to_width && ia_width(part) > policy.ia_threshold) return std::nullopt;
    PoRelation& side = to_width ? s.width_side : s.ia_side;
    auto& ids = to_width ? s.width_ids : s.ia_ids;
    side = unite(side, part);
    for (Id i = 0; i < part.size(); ++i) ids.push_back(branches.offsets[b] + i);
  }
  return s;
}

namespace {

Verdict via_split(const WidthIaSplit& s, const ListRelation& candidate, const DispatchPolicy& policy) {
  Verdict v = poss_union_width_iawidth(s.width_side, s.ia_side, candidate, policy);
  if (v.witness)
    for (Id& id : *v.witness)
      id = id < s.width_ids.size() ? s.width_ids[id] : s.ia_ids[id - s.width_ids.size()];
  return v;
}

}  // namespace

Verdict poss_relation(const PoRelation& r, const ListRelation& candidate, const DispatchPolicy& policy) {
  if (r.failed()) return verdict(false, method::kCompleteFailure);
  if (!r.has_duplicates()) return poss_cert_dedup_relation(r, candidate).first;
  if (width(r) <= policy.width_threshold) return poss_bounded_width_dp(r, candidate);
  return poss_backtracking(r, candidate, policy);
}

Verdict poss(const Query& query, const PoDatabase& db, const ListRelation& candidate,
             const DispatchPolicy& policy) {
  PoRelation r = eval(query, db);
  if (r.failed()) {
    debug_log("poss: result completely fails");
    return verdict(false, method::kCompleteFailure);
  }
  if (!r.has_duplicates()) {
    debug_log("poss: duplicate-free result, SCC solver");
    return poss_cert_dedup_relation(r, candidate).first;
  }
  if (width_fast_path_applies(query, db, r, policy)) {
    debug_log("poss: width within threshold, chain DP");
    return poss_bounded_width_dp(r, candidate);
  }
  if (is_union_of_spj(query)) {
    if (auto s = split_width_ia(split_union_branches(query, db), r.arity(), policy)) {
      try {
        debug_log("poss: union split into width and ia-width sides");
        return via_split(*s, candidate, policy);
      } catch (const ResourceExceeded& e) {
        debug_log(std::string("poss: union DP gave up (") + e.what() + "), backtracking");
      }
    }
  }
  debug_log("poss: no fast path, backtracking");
  return poss_backtracking(r, candidate, policy);
}

std::string poss_dispatch(const Query& query, const PoDatabase& db, const DispatchPolicy& policy) {
  PoRelation r = eval(query, db);
  if (r.failed()) return method::kCompleteFailure;
  if (!r.has_duplicates()) return method::kDedup;
  if (width_fast_path_applies(query, db, r, policy)) return method::kBoundedWidth;
  if (is_union_of_spj(query) && split_width_ia(split_union_branches(query, db), r.arity(), policy))
    return method::kUnionWidthIa;
  return method::kBacktracking;
}

Verdict cert(const Query& query, const PoDatabase& db, const ListRelation& candidate,
             const DispatchPolicy&) {
  return cert_relation(eval(query, db), candidate);
}

}  // namespace ordlattice
