// Seeded random instances for property tests and the acceptance run.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "ordlattice/eval.hpp"
#include "ordlattice/po_relation.hpp"
#include "ordlattice/query.hpp"

namespace gen {

using namespace ordlattice;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline Tuple random_tuple(Rng& rng, std::size_t arity, std::size_t alphabet) {
  Tuple t;
  for (std::size_t i = 0; i < arity; ++i) t.values.push_back(Value(uniform(rng, 0, alphabet - 1)));
  return t;
}

// Random DAG over a hidden random permutation, closed by the library.
inline PoRelation random_poset(Rng& rng, std::size_t n, double density, std::size_t arity = 1,
                               std::size_t alphabet = 3) {
  std::vector<Id> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<IdPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, density)) pairs.push_back({perm[i], perm[j]});
  std::vector<Tuple> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(random_tuple(rng, arity, alphabet));
  return PoRelation::from_pairs(arity, std::move(labels), pairs);
}

// Union of w chains plus forward cross edges along a random global time.
inline PoRelation random_width(Rng& rng, std::size_t n, std::size_t w, double cross,
                               std::size_t arity = 1, std::size_t alphabet = 3) {
  std::vector<std::size_t> time(n);
  std::iota(time.begin(), time.end(), 0);
  std::shuffle(time.begin(), time.end(), rng);
  std::vector<std::size_t> chain(n);
  for (auto& c : chain) c = uniform(rng, 0, w - 1);
  std::vector<IdPair> pairs;
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      if (time[a] >= time[b]) continue;
      if (chain[a] == chain[b] || coin(rng, cross)) pairs.push_back({a, b});
    }
  std::vector<Tuple> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(random_tuple(rng, arity, alphabet));
  return PoRelation::from_pairs(arity, std::move(labels), pairs);
}

// Classes of equal-neighbourhood elements laid over a random class order.
inline PoRelation random_ia(Rng& rng, std::size_t n, std::size_t classes, double density,
                            std::size_t arity = 1, std::size_t alphabet = 3) {
  std::vector<std::size_t> cls(n);
  for (auto& c : cls) c = uniform(rng, 0, classes - 1);
  std::vector<std::vector<char>> above(classes, std::vector<char>(classes, 0));
  for (std::size_t a = 0; a < classes; ++a)
    for (std::size_t b = a + 1; b < classes; ++b) above[a][b] = coin(rng, density);
  std::vector<IdPair> pairs;
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      if (above[cls[a]][cls[b]]) pairs.push_back({a, b});
  std::vector<Tuple> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(random_tuple(rng, arity, alphabet));
  return PoRelation::from_pairs(arity, std::move(labels), pairs);
}

inline Predicate random_predicate(Rng& rng, std::size_t arity, std::size_t alphabet) {
  auto atom = [&] {
    Operand a = Operand::attr(uniform(rng, 1, arity));
    Operand b = coin(rng, 0.5) ? Operand::attr(uniform(rng, 1, arity))
                               : Operand::value(Value(uniform(rng, 0, alphabet - 1)));
    return coin(rng, 0.5) ? Predicate::eq(a, b) : Predicate::neq(a, b);
  };
  switch (uniform(rng, 0, 4)) {
    case 0: return Predicate::always();
    case 1: return Predicate::disj({atom(), atom()});
    case 2: return Predicate::negate(atom());
    default: return atom();
  }
}

struct QueryOptions {
  bool allow_dir = false;
  bool allow_lex = true;
  bool allow_concat = true;
  bool allow_union = true;
  bool allow_constants = true;
  std::size_t alphabet = 3;
};

// Random query over relations named in `schema`, up to `depth` operators deep.
inline Query random_query(Rng& rng, const Schema& schema, std::size_t depth,
                          const QueryOptions& opt = {}) {
  std::vector<std::string> names;
  for (const auto& [name, arity] : schema) names.push_back(name);
  std::function<Query(std::size_t)> rec = [&](std::size_t d) -> Query {
    if (d == 0 || coin(rng, 0.2)) {
      if (opt.allow_constants && coin(rng, 0.15)) {
        if (coin(rng, 0.5)) return q::chain(uniform(rng, 1, 2));
        return q::singleton(random_tuple(rng, 1, opt.alphabet));
      }
      return q::rel(names[uniform(rng, 0, names.size() - 1)]);
    }
    std::vector<int> ops = {0, 1};
    if (opt.allow_union) ops.push_back(2);
    if (opt.allow_lex) ops.push_back(3);
    if (opt.allow_concat) ops.push_back(4);
    if (opt.allow_dir) ops.push_back(5);
    int op = ops[uniform(rng, 0, ops.size() - 1)];
    Query a = rec(d - 1);
    std::size_t ar = arity_of(a, schema);
    switch (op) {
      case 0: return q::select(random_predicate(rng, ar, opt.alphabet), a);
      case 1: {
        std::vector<std::size_t> attrs;
        std::size_t m = uniform(rng, 1, std::max<std::size_t>(1, ar));
        for (std::size_t i = 0; i < m; ++i) attrs.push_back(uniform(rng, 1, ar));
        return q::project(attrs, a);
      }
      case 3: return q::lexprod(a, rec(d - 1));
      case 5: return q::dirprod(a, rec(d - 1));
      default: {
        // Same-arity partner for union and concat: project to match.
        Query b = rec(d - 1);
        std::size_t br = arity_of(b, schema);
        if (br != ar) {
          std::vector<std::size_t> attrs;
          for (std::size_t i = 0; i < ar; ++i) attrs.push_back(uniform(rng, 1, br));
          b = q::project(attrs, b);
        }
        return op == 2 ? q::unite(a, b) : q::concat(a, b);
      }
    }
  };
  return rec(depth);
}

// A uniformly chosen available id at every step.
inline std::vector<Id> random_extension(Rng& rng, const PoRelation& r) {
  std::vector<char> used(r.size(), 0);
  std::vector<Id> seq;
  while (seq.size() < r.size()) {
    std::vector<Id> avail;
    for (Id x = 0; x < r.size(); ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (Id y = 0; y < r.size() && ok; ++y)
        if (!used[y] && r.less(y, x)) ok = false;
      if (ok) avail.push_back(x);
    }
    Id pick = avail[uniform(rng, 0, avail.size() - 1)];
    used[pick] = 1;
    seq.push_back(pick);
  }
  return seq;
}

inline ListRelation random_world(Rng& rng, const PoRelation& r) {
  ListRelation l;
  for (Id x : random_extension(rng, r)) l.rows.push_back(r.label(x));
  return l;
}

// A candidate list: a real world half of the time, else a shuffled bag.
inline ListRelation random_candidate(Rng& rng, const PoRelation& r) {
  if (coin(rng, 0.5)) return random_world(rng, r);
  std::vector<Id> ids(r.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  ListRelation l;
  for (Id x : ids) l.rows.push_back(r.label(x));
  return l;
}

}  // namespace gen
