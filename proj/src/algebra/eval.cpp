#include "ordlattice/eval.hpp"

#include <algorithm>
#include <map>

#include "ordlattice/errors.hpp"

namespace ordlattice {

const PoRelation& PoDatabase::get(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw UnboundRelation("unbound relation " + name);
  return it->second;
}

Schema PoDatabase::schema() const {
  Schema s;
  for (const auto& [name, r] : relations_) s[name] = r.arity();
  return s;
}

PoRelation select(const PoRelation& r, const Predicate& p) {
  if (p.max_attribute() > r.arity())
    throw ArityError("selection refers to ." + std::to_string(p.max_attribute()) + " on arity " +
                     std::to_string(r.arity()));
  if (r.failed()) return r;
  std::vector<Id> keep;
  for (Id i = 0; i < r.size(); ++i)
    if (p.holds(r.label(i))) keep.push_back(i);
  return r.restrict(keep);
}

PoRelation project(const PoRelation& r, const std::vector<std::size_t>& attrs) {
  for (std::size_t a : attrs)
    if (a < 1 || a > r.arity())
      throw ArityError("projection refers to ." + std::to_string(a) + " on arity " +
                       std::to_string(r.arity()));
  if (r.failed()) return PoRelation::complete_failure(attrs.size());
  std::vector<Tuple> labels;
  labels.reserve(r.size());
  for (const auto& t : r.labels()) {
    Tuple u;
    for (std::size_t a : attrs) u.values.push_back(t.at(a));
    labels.push_back(std::move(u));
  }
  return r.relabel(attrs.size(), std::move(labels));
}

namespace {

void check_same_arity(const PoRelation& a, const PoRelation& b, const char* what) {
  if (a.arity() != b.arity())
    throw ArityError(std::string(what) + " of arities " + std::to_string(a.arity()) + " and " +
                     std::to_string(b.arity()));
}

// Places b's ids after a's; when `series` every a id is below every b id.
PoRelation juxtapose(const PoRelation& a, const PoRelation& b, bool series) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<Tuple> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<Bitset> below(n + m, Bitset(n + m));
  for (Id i = 0; i < n; ++i) a.ancestors(i).for_each([&](Id x) { below[i].set(x); });
  for (Id j = 0; j < m; ++j) {
    b.ancestors(j).for_each([&](Id x) { below[n + j].set(n + x); });
    if (series)
      for (Id i = 0; i < n; ++i) below[n + j].set(i);
  }
  return PoRelation::from_closure(a.arity(), std::move(labels), std::move(below));
}

Tuple join_labels(const Tuple& x, const Tuple& y) {
  Tuple t = x;
  t.values.insert(t.values.end(), y.values.begin(), y.values.end());
  return t;
}

}  // namespace

PoRelation unite(const PoRelation& a, const PoRelation& b) {
  check_same_arity(a, b, "union");
  if (a.failed() || b.failed()) return PoRelation::complete_failure(a.arity());
  return juxtapose(a, b, false);
}

PoRelation concat(const PoRelation& a, const PoRelation& b) {
  check_same_arity(a, b, "concat");
  if (a.failed() || b.failed()) return PoRelation::complete_failure(a.arity());
  return juxtapose(a, b, true);
}

PoRelation dir_product(const PoRelation& a, const PoRelation& b) {
  const std::size_t arity = a.arity() + b.arity();
  if (a.failed() || b.failed()) return PoRelation::complete_failure(arity);
  const std::size_t n = a.size(), m = b.size();
  std::vector<Tuple> labels;
  labels.reserve(n * m);
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < m; ++j) labels.push_back(join_labels(a.label(i), b.label(j)));
  // (i,j) < (k,l) iff i <= k and j <= l, the pairs being distinct.
  std::vector<Bitset> below(n * m, Bitset(n * m));
  for (Id k = 0; k < n; ++k) {
    std::vector<Id> ak = a.ancestors(k).to_vector();
    ak.push_back(k);
    for (Id l = 0; l < m; ++l) {
      std::vector<Id> bl = b.ancestors(l).to_vector();
      bl.push_back(l);
      Bitset& row = below[k * m + l];
      for (Id i : ak)
        for (Id j : bl) row.set(i * m + j);
      row.reset(k * m + l);
    }
  }
  return PoRelation::from_closure(arity, std::move(labels), std::move(below));
}

PoRelation lex_product(const PoRelation& a, const PoRelation& b) {
  const std::size_t arity = a.arity() + b.arity();
  if (a.failed() || b.failed()) return PoRelation::complete_failure(arity);
  const std::size_t n = a.size(), m = b.size();
  std::vector<Tuple> labels;
  labels.reserve(n * m);
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < m; ++j) labels.push_back(join_labels(a.label(i), b.label(j)));
  // (i,j) < (k,l) iff i < k, or i = k and j < l.
  std::vector<Bitset> below(n * m, Bitset(n * m));
  for (Id k = 0; k < n; ++k)
    for (Id l = 0; l < m; ++l) {
      Bitset& row = below[k * m + l];
      a.ancestors(k).for_each([&](Id i) {
        for (Id j = 0; j < m; ++j) row.set(i * m + j);
      });
      b.ancestors(l).for_each([&](Id j) { row.set(k * m + j); });
    }
  return PoRelation::from_closure(arity, std::move(labels), std::move(below));
}

PoRelation singleton_relation(const Tuple& t) {
  return PoRelation::from_pairs(t.arity(), {t}, {});
}

PoRelation chain_relation(std::size_t n) {
  std::vector<Tuple> labels;
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(Tuple{Value(static_cast<std::uint64_t>(i + 1))});
    for (std::size_t j = 0; j < i; ++j) below[i].set(j);
  }
  return PoRelation::from_closure(1, std::move(labels), std::move(below));
}

QuotientGraph quotient_graph(const PoRelation& r) {
  QuotientGraph g;
  std::map<Tuple, std::size_t> index;
  std::vector<std::size_t> cls(r.size());
  for (Id i = 0; i < r.size(); ++i) {
    auto [it, fresh] = index.emplace(r.label(i), g.classes.size());
    if (fresh) g.classes.emplace_back();
    g.classes[it->second].push_back(i);
    cls[i] = it->second;
  }
  for (auto [a, b] : r.order_pairs())
    if (cls[a] != cls[b]) g.edges.push_back({cls[a], cls[b]});
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  try {
    PoRelation::from_pairs(0, std::vector<Tuple>(g.classes.size()), g.edges);
  } catch (const CycleError&) {
    g.acyclic = false;
  }
  return g;
}

PoRelation dup_elim(const PoRelation& r) {
  if (r.failed()) return r;
  QuotientGraph g = quotient_graph(r);
  if (!g.acyclic) return PoRelation::complete_failure(r.arity());
  std::vector<Tuple> labels;
  for (const auto& c : g.classes) labels.push_back(r.label(c.front()));
  return PoRelation::from_pairs(r.arity(), std::move(labels), g.edges);
}

PoRelation eval(const Query& query, const PoDatabase& db) {
  const QueryNode& n = *query;
  switch (n.op) {
    case Op::Relation: return db.get(n.name);
    case Op::Singleton: return singleton_relation(n.tuple);
    case Op::Chain: return chain_relation(n.length);
    case Op::Select: return select(eval(n.left, db), n.predicate);
    case Op::Project: return project(eval(n.left, db), n.attrs);
    case Op::Union: return unite(eval(n.left, db), eval(n.right, db));
    case Op::DirProduct: return dir_product(eval(n.left, db), eval(n.right, db));
    case Op::LexProduct: return lex_product(eval(n.left, db), eval(n.right, db));
    case Op::Concat: return concat(eval(n.left, db), eval(n.right, db));
    case Op::DupElim: return dup_elim(eval(n.left, db));
  }
  throw ArgumentError("unknown operator");
}

bool is_union_of_spj(const Query& query) {
  switch (query->op) {
    case Op::Relation:
    case Op::Singleton:
    case Op::Chain: return true;
    case Op::Select:
    case Op::Project: return is_union_of_spj(query->left);
    case Op::Union: return is_union_of_spj(query->left) && is_union_of_spj(query->right);
    default: return false;
  }
}

namespace {

// Pushes selections and projections below unions. `pending` holds the unary
// operators met on the way down, outermost first.
void collect_branches(const Query& query, const PoDatabase& db,
                      const std::vector<const QueryNode*>& pending, UnionBranches& out) {
  const QueryNode& n = *query;
  if (n.op == Op::Union) {
    collect_branches(n.left, db, pending, out);
    collect_branches(n.right, db, pending, out);
    return;
  }
  if (n.op == Op::Select || n.op == Op::Project) {
    auto next = pending;
    next.push_back(&n);
    collect_branches(n.left, db, next, out);
    return;
  }
  PoRelation part = eval(query, db);
  for (auto it = pending.rbegin(); it != pending.rend(); ++it)
    part = (*it)->op == Op::Select ? select(part, (*it)->predicate) : project(part, (*it)->attrs);
  out.offsets.push_back(out.parts.empty() ? 0 : out.offsets.back() + out.parts.back().size());
  out.parts.push_back(std::move(part));
}

}  // namespace

UnionBranches split_union_branches(const Query& query, const PoDatabase& db) {
  if (!is_union_of_spj(query)) throw ArgumentError("query is not a union of selections and projections");
  UnionBranches out;
  collect_branches(query, db, {}, out);
  return out;
}

}  // namespace ordlattice
