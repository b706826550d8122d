#pragma once

#include <string>

#include <json.hpp>

#include "ordlattice/accum_results.hpp"
#include "ordlattice/eval.hpp"
#include "ordlattice/monoid.hpp"

namespace ordlattice::cli {

/// {"relations": {"R": {"arity": 2, "rows": [[...], ...], "order": [[i, j], ...]}}}
/// Order pairs are 0-based row indices and are closed transitively. A
/// relation may carry "failed": true (complete failure, no rows).
/// ParseError on malformed documents; CycleError naming the relation.
PoDatabase parse_database(const std::string& json_text);
PoDatabase load_database(const std::string& path);

/// Canonical form: rows in id order, Hasse edges sorted.
nlohmann::json relation_to_json(const PoRelation& r);
/// {"relations": {name: relation}}, printed with two-space indentation.
std::string database_document(const std::string& name, const PoRelation& r);

Value value_from_json(const nlohmann::json& j);
nlohmann::json value_to_json(const Value& v);
Tuple tuple_from_json(const nlohmann::json& j);
nlohmann::json tuple_to_json(const Tuple& t);

/// JSON array of tuples.
ListRelation parse_list(const std::string& json_text);
/// JSON array of [key-tuple, value] pairs; a string value is handed to the
/// monoid's parser as is, anything else as its JSON text.
GroupResult parse_group_result(const std::string& json_text, const Monoid& m);

std::string read_file(const std::string& path);
/// Inline text when `arg` starts with '[' (after spaces), else file contents.
std::string inline_or_file(const std::string& arg);

}  // namespace ordlattice::cli
