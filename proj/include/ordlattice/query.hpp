#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ordlattice/predicate.hpp"
#include "ordlattice/value.hpp"

namespace ordlattice {

enum class Op {
  Relation,
  Singleton,
  Chain,
  Select,
  Project,
  Union,
  DirProduct,
  LexProduct,
  Concat,
  DupElim,
};

struct QueryNode;
using Query = std::shared_ptr<const QueryNode>;

struct QueryNode {
  Op op = Op::Relation;
  std::string name;                 // Relation
  Tuple tuple;                      // Singleton
  std::size_t length = 0;           // Chain
  Predicate predicate;              // Select
  std::vector<std::size_t> attrs;   // Project, 1-based, repeats allowed
  Query left;                       // unary child or left operand
  Query right;
};

namespace q {
Query rel(std::string name);
Query singleton(Tuple t);
Query chain(std::size_t n);
Query select(Predicate p, Query sub);
Query project(std::vector<std::size_t> attrs, Query sub);
Query unite(Query a, Query b);
Query dirprod(Query a, Query b);
Query lexprod(Query a, Query b);
Query concat(Query a, Query b);
Query dedup(Query sub);
}  // namespace q

using Schema = std::map<std::string, std::size_t>;

/// Output arity after type-checking. UnboundRelation or ArityError.
std::size_t arity_of(const Query& query, const Schema& schema);

/// Number of operator nodes, leaves included.
std::size_t query_size(const Query& query);
bool contains_op(const Query& query, Op op);
std::vector<std::string> relation_names(const Query& query);

/// Query-language text; parse_query(to_string(q)) rebuilds an equivalent AST.
std::string to_string(const Query& query);

}  // namespace ordlattice
