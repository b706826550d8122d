#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordlattice/accumulator.hpp"
#include "ordlattice/query.hpp"

namespace ordlattice::cli {

/// A query text with its optional outer accumulation.
struct ParsedQuery {
  enum class Kind { Plain, Accum, GroupBy };
  Kind kind = Kind::Plain;
  Query query;
  std::string accumulator;          // registry name
  std::vector<AccumArg> accumulator_args;
  std::vector<std::size_t> group_attrs;
};

/// Grammar:
///   top   := query | accum(ACC, query) | groupby(i, ..., ACC, query)
///   query := NAME | [v, ...] | chain(n) | sel(pred, query)
///          | proj(i, ..., query) | union(query, query) | dirprod(query, query)
///          | lexprod(query, query) | concat(query, query) | dedup(query)
///   pred  := pred or pred | pred and pred | not pred | (pred) | true | false
///          | operand = operand | operand != operand
///   operand := .i | number | "string"
///   ACC   := NAME | NAME(arg, ...), arg being a number, string or [tuple]
/// ParseError carries the 1-based line and column of the offending token.
ParsedQuery parse_query_text(const std::string& text);

/// Plain queries only.
Query parse_query(const std::string& text);

/// ACC on its own, e.g. "topk(2)".
std::pair<std::string, std::vector<AccumArg>> parse_accumulator_spec(const std::string& text);

}  // namespace ordlattice::cli
