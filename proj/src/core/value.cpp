#include "ordlattice/value.hpp"

#include <charconv>
#include <limits>

#include <json.hpp>

namespace ordlattice {

bool is_canonical_natural(std::string_view s) {
  if (s.empty() || s.size() > 20) return false;
  if (s.size() > 1 && s[0] == '0') return false;
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

Value::Value(std::string s) {
  if (is_canonical_natural(s)) {
    std::uint64_t out = 0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    v_ = out;
  } else {
    v_ = std::move(s);
  }
}

std::string Value::text() const {
  return is_natural() ? std::to_string(natural()) : str();
}

std::strong_ordering Value::operator<=>(const Value& o) const {
  if (is_natural() != o.is_natural())
    return is_natural() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (is_natural()) return natural() <=> o.natural();
  int c = str().compare(o.str());
  return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::size_t Value::hash() const {
  // Tag the two alternatives so 7 and "7" could never share a bucket pattern.
  if (is_natural()) return std::hash<std::uint64_t>{}(natural()) * 31u + 1u;
  return std::hash<std::string>{}(str()) * 31u + 2u;
}

static std::size_t mix(std::size_t h, std::size_t x) {
  return h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_tuple(const Tuple& t) {
  std::size_t h = t.values.size();
  for (const auto& v : t.values) h = mix(h, v.hash());
  return h;
}

std::size_t hash_list(const ListRelation& l) {
  std::size_t h = l.rows.size();
  for (const auto& t : l.rows) h = mix(h, hash_tuple(t));
  return h;
}

std::string to_string(const Value& v) {
  if (v.is_natural()) return std::to_string(v.natural());
  return nlohmann::json(v.str()).dump();
}

std::string to_string(const Tuple& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (i) out += ",";
    out += to_string(t.values[i]);
  }
  return out + "]";
}

std::string to_string(const ListRelation& l) {
  std::string out = "[";
  for (std::size_t i = 0; i < l.rows.size(); ++i) {
    if (i) out += ",";
    out += to_string(l.rows[i]);
  }
  return out + "]";
}

}  // namespace ordlattice
