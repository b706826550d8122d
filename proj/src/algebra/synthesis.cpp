#include "ordlattice/synthesis.hpp"

#include <algorithm>

#include "ordlattice/errors.hpp"

namespace ordlattice {

Bag bag_of(const PoRelation& r) {
  Bag b;
  if (r.failed()) return b;
  for (const auto& t : r.labels()) ++b[t];
  return b;
}

std::vector<IdSequence> realizer(const PoRelation& r) {
  const std::size_t n = r.size();
  std::vector<IdSequence> exts{canonical_extension(r)};
  std::vector<std::vector<std::size_t>> positions;
  auto record = [&](const IdSequence& e) {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[e[i]] = i;
    positions.push_back(std::move(pos));
  };
  record(exts[0]);
  auto pairs = r.order_pairs();
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y) {
      if (x == y || r.comparable(x, y)) continue;
      bool covered = std::any_of(positions.begin(), positions.end(),
                                 [&](const auto& pos) { return pos[y] < pos[x]; });
      if (covered) continue;
      auto extra = pairs;
      extra.push_back({y, x});
      PoRelation forced = PoRelation::from_pairs(r.arity(), r.labels(), extra);
      exts.push_back(canonical_extension(forced));
      record(exts.back());
    }
  return exts;
}

namespace {

Query failing_query(std::size_t arity) {
  if (arity == 0) throw ArgumentError("a failed relation of arity 0 has no constant query");
  // Two values ordered both ways: the value classes form a cycle.
  Tuple a(std::vector<Value>(arity, Value(0))), b(std::vector<Value>(arity, Value(1)));
  return q::dedup(q::unite(q::concat(q::singleton(a), q::singleton(b)),
                           q::concat(q::singleton(b), q::singleton(a))));
}

bool is_numbered_chain(const PoRelation& r, const IdSequence& ext) {
  if (r.arity() != 1 || !r.is_total()) return false;
  for (std::size_t i = 0; i < ext.size(); ++i)
    if (r.label(ext[i]) != Tuple{Value(static_cast<std::uint64_t>(i + 1))}) return false;
  return true;
}

}  // namespace

Query synthesize_constant_query(const PoRelation& r) {
  const std::size_t n = r.size(), arity = r.arity();
  if (r.failed()) return failing_query(arity);
  if (n == 0) return q::select(Predicate::never(), q::singleton(Tuple(std::vector<Value>(arity, Value(0)))));
  std::vector<IdSequence> exts = realizer(r);
  if (is_numbered_chain(r, exts[0])) return q::chain(n);

  // coords[id][k] is the 1-based position of id in the k-th extension. The
  // ids embed into a product of chains; each product step is followed by a
  // selection keeping only coordinate prefixes that some id actually has.
  const std::size_t m = exts.size();
  std::vector<std::vector<std::size_t>> coords(n, std::vector<std::size_t>(m));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) coords[exts[k][i]][k] = i + 1;

  auto prefix_filter = [&](std::size_t len) {
    std::vector<Predicate> alts;
    for (Id id = 0; id < n; ++id) {
      std::vector<Predicate> eqs;
      for (std::size_t k = 0; k < len; ++k)
        eqs.push_back(Predicate::eq(Operand::attr(k + 1), Operand::value(Value(coords[id][k]))));
      alts.push_back(Predicate::conj(std::move(eqs)));
    }
    return Predicate::disj(std::move(alts));
  };

  Query grid = q::chain(n);
  for (std::size_t k = 1; k < m; ++k)
    grid = q::select(prefix_filter(k + 1), q::dirprod(grid, q::chain(n)));

  // Attach labels: a union of singletons [coords..., label...] is an
  // antichain, so the lexicographic product keeps the grid order; matching
  // coordinates pairs every grid point with its own label.
  Query tags;
  for (Id id = 0; id < n; ++id) {
    Tuple t;
    for (std::size_t c : coords[id]) t.values.push_back(Value(c));
    t.values.insert(t.values.end(), r.label(id).values.begin(), r.label(id).values.end());
    Query s = q::singleton(std::move(t));
    tags = tags ? q::unite(tags, s) : s;
  }
  std::vector<Predicate> match;
  for (std::size_t k = 1; k <= m; ++k)
    match.push_back(Predicate::eq(Operand::attr(k), Operand::attr(m + k)));
  std::vector<std::size_t> keep;
  for (std::size_t a = 1; a <= arity; ++a) keep.push_back(2 * m + a);
  return q::project(std::move(keep), q::select(Predicate::conj(std::move(match)), q::lexprod(grid, tags)));
}

}  // namespace ordlattice
