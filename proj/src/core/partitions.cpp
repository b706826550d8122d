#include "ordlattice/partitions.hpp"

#include <algorithm>

namespace ordlattice {

namespace {

struct Matcher {
  const PoRelation& r;
  std::vector<Id> succ_of;  // left u -> right v, or npos
  std::vector<Id> pred_of;  // right v -> left u, or npos
  std::vector<char> seen;
  static constexpr Id npos = static_cast<Id>(-1);

  bool augment(Id u) {
    bool found = false;
    r.descendants(u).for_each([&](Id v) {
      if (found || seen[v]) return;
      seen[v] = 1;
      if (pred_of[v] == npos || augment(pred_of[v])) {
        succ_of[u] = v;
        pred_of[v] = u;
        found = true;
      }
    });
    return found;
  }
};

}  // namespace

WidthResult width_and_chain_partition(const PoRelation& r) {
  const std::size_t n = r.size();
  Matcher m{r, std::vector<Id>(n, Matcher::npos), std::vector<Id>(n, Matcher::npos), {}};
  // Greedy start along Hasse edges keeps augmenting paths short.
  for (auto [a, b] : r.hasse())
    if (m.succ_of[a] == Matcher::npos && m.pred_of[b] == Matcher::npos) {
      m.succ_of[a] = b;
      m.pred_of[b] = a;
    }
  for (Id u = 0; u < n; ++u) {
    if (m.succ_of[u] != Matcher::npos) continue;
    m.seen.assign(n, 0);
    m.augment(u);
  }
  WidthResult out;
  for (Id u = 0; u < n; ++u) {
    if (m.pred_of[u] != Matcher::npos) continue;
    std::vector<Id> chain;
    for (Id v = u; v != Matcher::npos; v = m.succ_of[v]) chain.push_back(v);
    out.partition.chains.push_back(std::move(chain));
  }
  out.width = out.partition.chains.size();
  return out;
}

std::size_t width(const PoRelation& r) { return width_and_chain_partition(r).width; }

IaPartition ia_partition(const PoRelation& r) {
  const std::size_t n = r.size();
  // First sweep: scanning (i, j) ascending, j joins i's class when the union
  // stays an indistinguishable antichain. With class members sharing all
  // outside relations this reduces to comparing against the first member.
  std::vector<std::vector<Id>> classes;
  std::vector<char> placed(n, 0);
  for (Id i = 0; i < n; ++i) {
    if (placed[i]) continue;
    std::vector<Id> cls{i};
    for (Id j = i + 1; j < n; ++j)
      if (!placed[j] && !r.comparable(i, j) && r.ancestors(i) == r.ancestors(j) &&
          r.descendants(i) == r.descendants(j)) {
        cls.push_back(j);
        placed[j] = 1;
      }
    classes.push_back(std::move(cls));
  }
  auto mergeable = [&](const std::vector<Id>& a, const std::vector<Id>& b) {
    std::vector<Id> u = a;
    u.insert(u.end(), b.begin(), b.end());
    return is_antichain(r, u) && is_indistinguishable(r, u);
  };
  // Fixpoint over whole classes with the definitional test.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < classes.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        if (mergeable(classes[i], classes[j])) {
          classes[i].insert(classes[i].end(), classes[j].begin(), classes[j].end());
          std::sort(classes[i].begin(), classes[i].end());
          classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
  }
  return {std::move(classes)};
}

std::size_t ia_width(const PoRelation& r) { return ia_partition(r).classes.size(); }

std::vector<std::vector<std::uint32_t>> chain_needs(const PoRelation& r, const ChainPartition& p) {
  std::vector<std::vector<std::uint32_t>> need(r.size(), std::vector<std::uint32_t>(p.chains.size(), 0));
  for (Id x = 0; x < r.size(); ++x)
    for (std::size_t j = 0; j < p.chains.size(); ++j)
      for (Id c : p.chains[j])
        if (r.less(c, x)) ++need[x][j];
  return need;
}

bool is_antichain(const PoRelation& r, const std::vector<Id>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (ids[i] == ids[j] || r.comparable(ids[i], ids[j])) return false;
  return true;
}

bool is_indistinguishable(const PoRelation& r, const std::vector<Id>& ids) {
  if (ids.empty()) return true;
  Bitset inside(r.size());
  for (Id i : ids) inside.set(i);
  Bitset below0 = r.ancestors(ids[0]);
  Bitset above0 = r.descendants(ids[0]);
  below0.subtract(inside);
  above0.subtract(inside);
  for (Id i : ids) {
    Bitset b = r.ancestors(i), a = r.descendants(i);
    b.subtract(inside);
    a.subtract(inside);
    if (!(b == below0) || !(a == above0)) return false;
  }
  return true;
}

bool is_chain(const PoRelation& r, const std::vector<Id>& ids) {
  for (std::size_t i = 0; i + 1 < ids.size(); ++i)
    if (!r.less(ids[i], ids[i + 1])) return false;
  return true;
}

}  // namespace ordlattice
