#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ordlattice/po_relation.hpp"
#include "ordlattice/query.hpp"

namespace ordlattice {

class PoDatabase {
 public:
  void add(std::string name, PoRelation r) { relations_[std::move(name)] = std::move(r); }
  bool contains(const std::string& name) const { return relations_.count(name) > 0; }
  /// UnboundRelation if missing.
  const PoRelation& get(const std::string& name) const;
  const std::map<std::string, PoRelation>& relations() const { return relations_; }
  Schema schema() const;

 private:
  std::map<std::string, PoRelation> relations_;
};

/// Evaluates under the fixed id policy: union and concat number the left
/// operand first, products pair ids row-major (left id * |right| + right id).
PoRelation eval(const Query& query, const PoDatabase& db);

// Operator kernels, usable directly on relations.
PoRelation select(const PoRelation& r, const Predicate& p);
PoRelation project(const PoRelation& r, const std::vector<std::size_t>& attrs);
PoRelation unite(const PoRelation& a, const PoRelation& b);
PoRelation dir_product(const PoRelation& a, const PoRelation& b);
PoRelation lex_product(const PoRelation& a, const PoRelation& b);
PoRelation concat(const PoRelation& a, const PoRelation& b);
PoRelation singleton_relation(const Tuple& t);
PoRelation chain_relation(std::size_t n);

/// Equal-value classes of ids (in first-appearance order) and the edges
/// between distinct classes induced by comparable cross pairs.
struct QuotientGraph {
  std::vector<std::vector<Id>> classes;
  std::vector<IdPair> edges;  // sorted, between class indices
  bool acyclic = true;
};

QuotientGraph quotient_graph(const PoRelation& r);

/// One id per value class, ordered by the closure of the quotient edges; a
/// complete-failure marker when that graph has a cycle.
PoRelation dup_elim(const PoRelation& r);

/// A product-free query without dedup or concat, flattened into the union
/// branches it denotes. Evaluating the branches and placing their ids end to
/// end reproduces eval(query) exactly.
struct UnionBranches {
  std::vector<PoRelation> parts;
  std::vector<std::size_t> offsets;
};

/// True if the query only uses relations, constants, selection, projection
/// and union.
bool is_union_of_spj(const Query& query);
UnionBranches split_union_branches(const Query& query, const PoDatabase& db);

}  // namespace ordlattice
