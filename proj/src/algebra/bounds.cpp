#include "ordlattice/bounds.hpp"

#include <algorithm>
#include <limits>

#include "ordlattice/errors.hpp"

namespace ordlattice {

namespace {

constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kMax - b ? kMax : a + b; }
std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

std::size_t lookup(const std::map<std::string, std::size_t>& m, const std::string& name) {
  auto it = m.find(name);
  if (it == m.end()) throw UnboundRelation("no bound given for relation " + name);
  return it->second;
}

Bound width_of(const Query& q, const std::map<std::string, std::size_t>& widths) {
  const QueryNode& n = *q;
  switch (n.op) {
    case Op::Relation: return lookup(widths, n.name);
    case Op::Singleton:
    case Op::Chain: return std::size_t{1};
    case Op::Select:
    case Op::Project:
    case Op::DupElim: return width_of(n.left, widths);
    case Op::DirProduct: return std::nullopt;
    default: break;
  }
  Bound a = width_of(n.left, widths), b = width_of(n.right, widths);
  if (!a || !b) return std::nullopt;
  switch (n.op) {
    case Op::Union: return sat_add(*a, *b);
    case Op::LexProduct: return sat_mul(*a, *b);
    case Op::Concat: return std::max(*a, *b);
    default: return std::nullopt;
  }
}

Bound ia_of(const Query& q, const std::map<std::string, std::size_t>& ias) {
  const QueryNode& n = *q;
  switch (n.op) {
    case Op::Relation: return lookup(ias, n.name);
    case Op::Singleton: return std::size_t{1};
    case Op::Chain: return n.length;
    case Op::Select:
    case Op::Project: return ia_of(n.left, ias);
    case Op::Union:
    case Op::Concat: {
      Bound a = ia_of(n.left, ias), b = ia_of(n.right, ias);
      if (!a || !b) return std::nullopt;
      return sat_add(*a, *b);
    }
    default: return std::nullopt;
  }
}

std::size_t longest_chain_constant(const Query& q) {
  if (!q) return 0;
  std::size_t here = q->op == Op::Chain ? q->length : 0;
  return std::max({here, longest_chain_constant(q->left), longest_chain_constant(q->right)});
}

}  // namespace

StaticBounds width_bounds(const Query& query, const std::map<std::string, std::size_t>& input_widths,
                          const std::map<std::string, std::size_t>& input_iawidths) {
  return {width_of(query, input_widths), ia_of(query, input_iawidths)};
}

Bound uniform_width_bound(const Query& query, std::size_t k) {
  if (contains_op(query, Op::DirProduct)) return std::nullopt;
  // The exponent argument needs k >= 2: a union of two chains already has width 2.
  k = std::max<std::size_t>(k, 2);
  std::size_t out = 1;
  for (std::size_t i = 0; i <= query_size(query); ++i) out = sat_mul(out, k);
  return out;
}

Bound uniform_iawidth_bound(const Query& query, std::size_t k) {
  if (contains_op(query, Op::DirProduct) || contains_op(query, Op::LexProduct) ||
      contains_op(query, Op::DupElim))
    return std::nullopt;
  return sat_mul(std::max(k, longest_chain_constant(query)), query_size(query));
}

}  // namespace ordlattice
