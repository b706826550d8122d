#include "ordlattice/query.hpp"

#include <algorithm>
#include <functional>

#include "ordlattice/errors.hpp"

namespace ordlattice {

namespace q {

namespace {
Query make(QueryNode n) { return std::make_shared<const QueryNode>(std::move(n)); }
Query binary(Op op, Query a, Query b) {
  QueryNode n;
  n.op = op;
  n.left = std::move(a);
  n.right = std::move(b);
  return make(std::move(n));
}
}  // namespace

Query rel(std::string name) {
  QueryNode n;
  n.name = std::move(name);
  return make(std::move(n));
}

Query singleton(Tuple t) {
  QueryNode n;
  n.op = Op::Singleton;
  n.tuple = std::move(t);
  return make(std::move(n));
}

Query chain(std::size_t len) {
  QueryNode n;
  n.op = Op::Chain;
  n.length = len;
  return make(std::move(n));
}

Query select(Predicate p, Query sub) {
  QueryNode n;
  n.op = Op::Select;
  n.predicate = std::move(p);
  n.left = std::move(sub);
  return make(std::move(n));
}

Query project(std::vector<std::size_t> attrs, Query sub) {
  QueryNode n;
  n.op = Op::Project;
  n.attrs = std::move(attrs);
  n.left = std::move(sub);
  return make(std::move(n));
}

Query unite(Query a, Query b) { return binary(Op::Union, std::move(a), std::move(b)); }
Query dirprod(Query a, Query b) { return binary(Op::DirProduct, std::move(a), std::move(b)); }
Query lexprod(Query a, Query b) { return binary(Op::LexProduct, std::move(a), std::move(b)); }
Query concat(Query a, Query b) { return binary(Op::Concat, std::move(a), std::move(b)); }

Query dedup(Query sub) {
  QueryNode n;
  n.op = Op::DupElim;
  n.left = std::move(sub);
  return make(std::move(n));
}

}  // namespace q

std::size_t arity_of(const Query& query, const Schema& schema) {
  const QueryNode& n = *query;
  switch (n.op) {
    case Op::Relation: {
      auto it = schema.find(n.name);
      if (it == schema.end()) throw UnboundRelation("unbound relation " + n.name);
      return it->second;
    }
    case Op::Singleton: return n.tuple.arity();
    case Op::Chain: return 1;
    case Op::Select: {
      std::size_t a = arity_of(n.left, schema);
      if (n.predicate.max_attribute() > a)
        throw ArityError("selection refers to ." + std::to_string(n.predicate.max_attribute()) +
                         " on arity " + std::to_string(a));
      return a;
    }
    case Op::Project: {
      std::size_t a = arity_of(n.left, schema);
      for (std::size_t i : n.attrs)
        if (i < 1 || i > a)
          throw ArityError("projection refers to ." + std::to_string(i) + " on arity " +
                           std::to_string(a));
      return n.attrs.size();
    }
    case Op::Union:
    case Op::Concat: {
      std::size_t a = arity_of(n.left, schema), b = arity_of(n.right, schema);
      if (a != b)
        throw ArityError(std::string(n.op == Op::Union ? "union" : "concat") +
                         " of arities " + std::to_string(a) + " and " + std::to_string(b));
      return a;
    }
    case Op::DirProduct:
    case Op::LexProduct: return arity_of(n.left, schema) + arity_of(n.right, schema);
    case Op::DupElim: return arity_of(n.left, schema);
  }
  return 0;
}

std::size_t query_size(const Query& query) {
  if (!query) return 0;
  return 1 + query_size(query->left) + query_size(query->right);
}

bool contains_op(const Query& query, Op op) {
  if (!query) return false;
  return query->op == op || contains_op(query->left, op) || contains_op(query->right, op);
}

std::vector<std::string> relation_names(const Query& query) {
  std::vector<std::string> out;
  std::function<void(const Query&)> walk = [&](const Query& x) {
    if (!x) return;
    if (x->op == Op::Relation && std::find(out.begin(), out.end(), x->name) == out.end())
      out.push_back(x->name);
    walk(x->left);
    walk(x->right);
  };
  walk(query);
  return out;
}

std::string to_string(const Query& query) {
  const QueryNode& n = *query;
  auto bin = [&](const char* f) {
    return std::string(f) + "(" + to_string(n.left) + ", " + to_string(n.right) + ")";
  };
  switch (n.op) {
    case Op::Relation: return n.name;
    case Op::Singleton: return to_string(n.tuple);
    case Op::Chain: return "chain(" + std::to_string(n.length) + ")";
    case Op::Select: return "sel(" + to_string(n.predicate) + ", " + to_string(n.left) + ")";
    case Op::Project: {
      std::string out = "proj(";
      for (std::size_t i : n.attrs) out += std::to_string(i) + ", ";
      return out + to_string(n.left) + ")";
    }
    case Op::Union: return bin("union");
    case Op::DirProduct: return bin("dirprod");
    case Op::LexProduct: return bin("lexprod");
    case Op::Concat: return bin("concat");
    case Op::DupElim: return "dedup(" + to_string(n.left) + ")";
  }
  return "";
}

}  // namespace ordlattice
