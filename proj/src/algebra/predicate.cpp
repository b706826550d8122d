#include "ordlattice/predicate.hpp"

#include <algorithm>

namespace ordlattice {

namespace {

const Value& resolve(const Operand& o, const Tuple& t) {
  return o.is_attribute ? t.at(o.attribute) : o.constant;
}

std::string operand_text(const Operand& o) {
  return o.is_attribute ? "." + std::to_string(o.attribute) : to_string(o.constant);
}

std::size_t operand_max(const Operand& o) { return o.is_attribute ? o.attribute : 0; }

}  // namespace

bool Predicate::holds(const Tuple& t) const {
  switch (kind) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Eq: return resolve(lhs, t) == resolve(rhs, t);
    case Kind::Neq: return resolve(lhs, t) != resolve(rhs, t);
    case Kind::And:
      return std::all_of(kids.begin(), kids.end(), [&](const Predicate& k) { return k.holds(t); });
    case Kind::Or:
      return std::any_of(kids.begin(), kids.end(), [&](const Predicate& k) { return k.holds(t); });
    case Kind::Not: return !kids.front().holds(t);
  }
  return false;
}

std::size_t Predicate::max_attribute() const {
  std::size_t m = std::max(operand_max(lhs) * (kind == Kind::Eq || kind == Kind::Neq),
                           operand_max(rhs) * (kind == Kind::Eq || kind == Kind::Neq));
  for (const auto& k : kids) m = std::max(m, k.max_attribute());
  return m;
}

std::string to_string(const Predicate& p) {
  using K = Predicate::Kind;
  switch (p.kind) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Eq: return operand_text(p.lhs) + " = " + operand_text(p.rhs);
    case K::Neq: return operand_text(p.lhs) + " != " + operand_text(p.rhs);
    case K::Not: return "not (" + to_string(p.kids.front()) + ")";
    case K::And:
    case K::Or: {
      if (p.kids.empty()) return p.kind == K::And ? "true" : "false";
      std::string sep = p.kind == K::And ? " and " : " or ";
      std::string out;
      for (std::size_t i = 0; i < p.kids.size(); ++i) {
        if (i) out += sep;
        out += "(" + to_string(p.kids[i]) + ")";
      }
      return out;
    }
  }
  return "";
}

}  // namespace ordlattice
