#include "ordlattice/po_relation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "ordlattice/errors.hpp"

namespace ordlattice {

namespace {

// Finds one directed cycle in an adjacency list known to contain one.
std::vector<Id> find_cycle(const std::vector<std::vector<Id>>& succ) {
  const std::size_t n = succ.size();
  std::vector<int> color(n, 0);
  std::vector<Id> parent(n, 0);
  for (Id start = 0; start < n; ++start) {
    if (color[start]) continue;
    std::vector<std::pair<Id, std::size_t>> stack{{start, 0}};
    color[start] = 1;
    while (!stack.empty()) {
      auto& [u, k] = stack.back();
      if (k == succ[u].size()) {
        color[u] = 2;
        stack.pop_back();
        continue;
      }
      Id v = succ[u][k++];
      if (color[v] == 1) {
        std::vector<Id> cycle{v};
        for (Id w = u; w != v; w = parent[w]) cycle.push_back(w);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (color[v] == 0) {
        color[v] = 1;
        parent[v] = u;
        stack.push_back({v, 0});
      }
    }
  }
  return {};
}

}  // namespace

PoRelation PoRelation::from_pairs(std::size_t arity, std::vector<Tuple> labels,
                                  const std::vector<IdPair>& pairs,
                                  const std::string& name) {
  const std::size_t n = labels.size();
  for (const auto& t : labels)
    if (t.arity() != arity)
      throw ArityError("label " + to_string(t) + " has arity " + std::to_string(t.arity()) +
                       ", expected " + std::to_string(arity));
  std::vector<std::vector<Id>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw ArgumentError("order pair refers to an unknown id");
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::deque<Id> ready;
  for (Id i = 0; i < n; ++i)
    if (!indeg[i]) ready.push_back(i);
  std::vector<Id> topo;
  while (!ready.empty()) {
    Id u = ready.front();
    ready.pop_front();
    topo.push_back(u);
    for (Id v : succ[u])
      if (--indeg[v] == 0) ready.push_back(v);
  }
  if (topo.size() != n) {
    auto cycle = find_cycle(succ);
    std::string msg = "order contains a cycle";
    if (!name.empty()) msg += " in relation " + name;
    msg += ":";
    for (Id c : cycle) msg += " " + std::to_string(c);
    throw CycleError(msg, cycle);
  }
  std::vector<Bitset> below(n, Bitset(n));
  for (Id u : topo)
    for (Id v : succ[u]) {
      below[v] |= below[u];
      below[v].set(u);
    }
  return from_closure(arity, std::move(labels), std::move(below));
}

PoRelation PoRelation::from_closure(std::size_t arity, std::vector<Tuple> labels,
                                    std::vector<Bitset> below) {
  PoRelation r(arity);
  r.labels_ = std::move(labels);
  r.below_ = std::move(below);
  r.finish();
  return r;
}

PoRelation PoRelation::complete_failure(std::size_t arity) {
  PoRelation r(arity);
  r.failed_ = true;
  return r;
}

void PoRelation::finish() {
  const std::size_t n = labels_.size();
  above_.assign(n, Bitset(n));
  for (Id b = 0; b < n; ++b) below_[b].for_each([&](Id a) { above_[a].set(b); });
  hasse_.clear();
  for (Id a = 0; a < n; ++a)
    above_[a].for_each([&](Id b) {
      if (!above_[a].intersects(below_[b])) hasse_.push_back({a, b});
    });
}

std::vector<IdPair> PoRelation::order_pairs() const {
  std::vector<IdPair> out;
  for (Id a = 0; a < size(); ++a) above_[a].for_each([&](Id b) { out.push_back({a, b}); });
  return out;
}

PoRelation PoRelation::restrict(const std::vector<Id>& keep) const {
  const std::size_t m = keep.size();
  std::vector<Tuple> labels;
  labels.reserve(m);
  for (Id k : keep) labels.push_back(labels_[k]);
  std::vector<Bitset> below(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (less(keep[j], keep[i])) below[i].set(j);
  PoRelation r = from_closure(arity_, std::move(labels), std::move(below));
  r.failed_ = failed_;
  return r;
}

PoRelation PoRelation::relabel(std::size_t arity, std::vector<Tuple> labels) const {
  PoRelation r = *this;
  r.arity_ = arity;
  r.labels_ = std::move(labels);
  return r;
}

bool PoRelation::is_total() const {
  for (Id i = 0; i < size(); ++i)
    if (below_[i].count() + above_[i].count() + 1 != size()) return false;
  return true;
}

bool PoRelation::has_duplicates() const {
  std::vector<const Tuple*> ts;
  for (const auto& t : labels_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return *a < *b; });
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (*ts[i] == *ts[i - 1]) return true;
  return false;
}

PoRelation validate_po_relation(const std::vector<std::int64_t>& ids, std::vector<Tuple> labels,
                                const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                                std::size_t arity) {
  if (ids.size() != labels.size()) throw ArgumentError("ids and labels differ in length");
  std::unordered_map<std::int64_t, Id> dense;
  for (Id i = 0; i < ids.size(); ++i)
    if (!dense.emplace(ids[i], i).second)
      throw ArgumentError("duplicate id " + std::to_string(ids[i]));
  std::vector<IdPair> local;
  for (auto [a, b] : pairs) {
    auto ia = dense.find(a), ib = dense.find(b);
    if (ia == dense.end() || ib == dense.end())
      throw ArgumentError("order pair refers to an unknown id");
    local.push_back({ia->second, ib->second});
  }
  try {
    return PoRelation::from_pairs(arity, std::move(labels), local);
  } catch (const CycleError& e) {
    std::vector<Id> original;
    std::string msg = "order contains a cycle:";
    for (Id c : e.cycle()) {
      original.push_back(static_cast<Id>(ids[c]));
      msg += " " + std::to_string(ids[c]);
    }
    throw CycleError(msg, original);
  }
}

}  // namespace ordlattice
