// Test-only reference implementations. They use nothing from the library
// except data access (labels, less) so they can check its algorithms.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "ordlattice/accumulator.hpp"
#include "ordlattice/po_relation.hpp"
#include "ordlattice/query.hpp"

namespace oracle {

using namespace ordlattice;

// Every topological sort, by plain recursion over minimal remaining ids.
inline std::vector<std::vector<Id>> all_extensions(const PoRelation& r) {
  std::vector<std::vector<Id>> out;
  if (r.failed()) return out;
  const std::size_t n = r.size();
  std::vector<char> used(n, 0);
  std::vector<Id> seq;
  std::function<void()> rec = [&] {
    if (seq.size() == n) {
      out.push_back(seq);
      return;
    }
    for (Id x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool minimal = true;
      for (Id y = 0; y < n && minimal; ++y)
        if (!used[y] && y != x && r.less(y, x)) minimal = false;
      if (!minimal) continue;
      used[x] = 1;
      seq.push_back(x);
      rec();
      seq.pop_back();
      used[x] = 0;
    }
  };
  rec();
  return out;
}

inline ListRelation world(const PoRelation& r, const std::vector<Id>& seq) {
  ListRelation l;
  for (Id x : seq) l.rows.push_back(r.label(x));
  return l;
}

inline std::set<ListRelation> worlds(const PoRelation& r) {
  std::set<ListRelation> out;
  for (const auto& e : all_extensions(r)) out.insert(world(r, e));
  return out;
}

inline bool is_extension(const PoRelation& r, const std::vector<Id>& seq) {
  if (seq.size() != r.size()) return false;
  std::vector<Id> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  for (Id i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (r.less(seq[j], seq[i])) return false;
  return true;
}

// Largest antichain by subset enumeration.
inline std::size_t max_antichain(const PoRelation& r) {
  const std::size_t n = r.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (Id a = 0; a < n && ok; ++a)
      for (Id b = a + 1; b < n && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && (r.less(a, b) || r.less(b, a))) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

inline bool class_ok(const PoRelation& r, const std::vector<Id>& c) {
  for (Id a : c)
    for (Id b : c)
      if (a != b && r.less(a, b)) return false;
  for (Id z = 0; z < r.size(); ++z) {
    if (std::find(c.begin(), c.end(), z) != c.end()) continue;
    for (Id a : c)
      for (Id b : c)
        if (r.less(z, a) != r.less(z, b) || r.less(a, z) != r.less(b, z)) return false;
  }
  return true;
}

// Fewest classes over all set partitions into indistinguishable antichains.
inline std::size_t min_ia_partition(const PoRelation& r) {
  const std::size_t n = r.size();
  if (n == 0) return 0;
  std::size_t best = n;
  std::vector<std::vector<Id>> parts;
  std::function<void(Id)> rec = [&](Id x) {
    if (parts.size() >= best) return;
    if (x == n) {
      for (const auto& p : parts)
        if (!class_ok(r, p)) return;
      best = parts.size();
      return;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      parts[i].push_back(x);
      rec(x + 1);
      parts[i].pop_back();
    }
    parts.push_back({x});
    rec(x + 1);
    parts.pop_back();
  };
  rec(0);
  return best;
}

// Closure of a pair list by Floyd-Warshall.
inline std::vector<std::vector<char>> closure(std::size_t n, const std::vector<IdPair>& pairs) {
  std::vector<std::vector<char>> c(n, std::vector<char>(n, 0));
  for (auto [a, b] : pairs) c[a][b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c[i][k] && c[k][j]) c[i][j] = 1;
  return c;
}

// All interleavings of two lists.
inline std::set<ListRelation> shuffles(const ListRelation& a, const ListRelation& b) {
  std::set<ListRelation> out;
  ListRelation cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == a.size() && j == b.size()) {
      out.insert(cur);
      return;
    }
    if (i < a.size()) {
      cur.rows.push_back(a.rows[i]);
      rec(i + 1, j);
      cur.rows.pop_back();
    }
    if (j < b.size()) {
      cur.rows.push_back(b.rows[j]);
      rec(i, j + 1);
      cur.rows.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

// Bag semantics of a PosRA query, computed on multisets only.
using Bag = std::map<Tuple, std::size_t>;

inline Bag bag_eval(const Query& q, const std::map<std::string, Bag>& db) {
  const QueryNode& n = *q;
  auto join = [](const Tuple& a, const Tuple& b) {
    Tuple t = a;
    t.values.insert(t.values.end(), b.values.begin(), b.values.end());
    return t;
  };
  switch (n.op) {
    case Op::Relation: return db.at(n.name);
    case Op::Singleton: return {{n.tuple, 1}};
    case Op::Chain: {
      Bag b;
      for (std::size_t i = 1; i <= n.length; ++i) b[Tuple{Value(static_cast<std::uint64_t>(i))}] = 1;
      return b;
    }
    case Op::Select: {
      Bag b;
      for (const auto& [t, c] : bag_eval(n.left, db))
        if (n.predicate.holds(t)) b[t] += c;
      return b;
    }
    case Op::Project: {
      Bag b;
      for (const auto& [t, c] : bag_eval(n.left, db)) {
        Tuple u;
        for (std::size_t a : n.attrs) u.values.push_back(t.values[a - 1]);
        b[u] += c;
      }
      return b;
    }
    case Op::Union:
    case Op::Concat: {
      Bag b = bag_eval(n.left, db);
      for (const auto& [t, c] : bag_eval(n.right, db)) b[t] += c;
      return b;
    }
    case Op::DirProduct:
    case Op::LexProduct: {
      Bag b, l = bag_eval(n.left, db), r = bag_eval(n.right, db);
      for (const auto& [t, c] : l)
        for (const auto& [u, d] : r) b[join(t, u)] += c * d;
      return b;
    }
    case Op::DupElim: {
      Bag b;
      for (const auto& [t, c] : bag_eval(n.left, db)) b[t] = 1;
      return b;
    }
  }
  return {};
}

// Value of h(t1,1) + ... folded by hand.
inline Element fold(const Accumulator& acc, const ListRelation& l) {
  Element v = acc.monoid().neutral();
  for (std::size_t i = 0; i < l.size(); ++i) v = acc.monoid().combine(v, acc.map(l.rows[i], i + 1));
  return v;
}

inline std::set<Element> accum_values(const Accumulator& acc, const PoRelation& r) {
  std::set<Element> out;
  for (const auto& w : worlds(r)) out.insert(fold(acc, w));
  return out;
}

// Per-world group-by, each group folded over its sublist.
inline std::vector<std::pair<Tuple, Element>> group_fold(const Accumulator& acc,
                                                         const std::vector<std::size_t>& attrs,
                                                         const ListRelation& l) {
  std::map<Tuple, ListRelation> parts;
  for (const auto& t : l.rows) {
    Tuple k;
    for (std::size_t a : attrs) k.values.push_back(t.values[a - 1]);
    parts[k].rows.push_back(t);
  }
  std::vector<std::pair<Tuple, Element>> out;
  for (const auto& [k, sub] : parts) out.push_back({k, fold(acc, sub)});
  return out;
}

// Duplicate elimination of one list: fails unless equal values are
// contiguous; otherwise keeps one copy of each block.
inline std::optional<ListRelation> dedup_list(const ListRelation& l) {
  ListRelation out;
  std::set<Tuple> closed;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i > 0 && l.rows[i] == l.rows[i - 1]) continue;
    if (closed.count(l.rows[i])) return std::nullopt;
    closed.insert(l.rows[i]);
    out.rows.push_back(l.rows[i]);
  }
  return out;
}

}  // namespace oracle
