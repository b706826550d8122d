#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ordlattice {

/// A domain value: a natural number or an opaque string token.
///
/// Strings that spell a canonical decimal natural ("0", "12", not "012") are
/// normalized to the natural at construction, so a string-valued Value never
/// collides with a natural one.
class Value {
 public:
  Value() : v_(std::uint64_t{0}) {}
  Value(std::uint64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Value(int n) : v_(static_cast<std::uint64_t>(n)) {}  // NOLINT
  Value(std::string s);  // NOLINT
  Value(const char* s) : Value(std::string(s)) {}  // NOLINT

  bool is_natural() const { return std::holds_alternative<std::uint64_t>(v_); }
  bool is_string() const { return !is_natural(); }
  std::uint64_t natural() const { return std::get<std::uint64_t>(v_); }
  const std::string& str() const { return std::get<std::string>(v_); }

  /// Plain text: the number, or the token unquoted.
  std::string text() const;

  bool operator==(const Value&) const = default;
  std::strong_ordering operator<=>(const Value& o) const;

  std::size_t hash() const;

 private:
  std::variant<std::uint64_t, std::string> v_;
};

/// True iff `s` is a canonical decimal spelling of a natural that fits in 64 bits.
bool is_canonical_natural(std::string_view s);

struct Tuple {
  std::vector<Value> values;

  Tuple() = default;
  Tuple(std::initializer_list<Value> vs) : values(vs) {}
  explicit Tuple(std::vector<Value> vs) : values(std::move(vs)) {}

  std::size_t arity() const { return values.size(); }
  /// 1-based attribute access.
  const Value& at(std::size_t attribute) const { return values.at(attribute - 1); }

  bool operator==(const Tuple&) const = default;
  auto operator<=>(const Tuple&) const = default;
};

/// A totally ordered list of tuples: one possible world.
struct ListRelation {
  std::vector<Tuple> rows;

  ListRelation() = default;
  ListRelation(std::initializer_list<Tuple> ts) : rows(ts) {}
  explicit ListRelation(std::vector<Tuple> ts) : rows(std::move(ts)) {}

  std::size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }
  /// 1-based row access.
  const Tuple& at(std::size_t position) const { return rows.at(position - 1); }

  bool operator==(const ListRelation&) const = default;
  auto operator<=>(const ListRelation&) const = default;
};

std::size_t hash_tuple(const Tuple& t);
std::size_t hash_list(const ListRelation& l);

struct TupleHash {
  std::size_t operator()(const Tuple& t) const { return hash_tuple(t); }
};
struct ListRelationHash {
  std::size_t operator()(const ListRelation& l) const { return hash_list(l); }
};

/// JSON-style rendering: naturals bare, strings quoted.
std::string to_string(const Value& v);
std::string to_string(const Tuple& t);
std::string to_string(const ListRelation& l);

}  // namespace ordlattice

template <>
struct std::hash<ordlattice::Value> {
  std::size_t operator()(const ordlattice::Value& v) const { return v.hash(); }
};
