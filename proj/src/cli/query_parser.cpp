#include "ordlattice/cli/query_parser.hpp"

#include <cctype>

#include "ordlattice/errors.hpp"

namespace ordlattice::cli {

namespace {

enum class Tok { Ident, Number, String, Attr, LParen, RParen, LBrack, RBrack, Comma, Eq, Neq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::String: return "string";
    case Tok::Attr: return "attribute";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Comma: return "','";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t k) {
    for (; k > 0; --k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), l, cl});
      advance(1);
    };
    if (c == '(') single(Tok::LParen);
    else if (c == ')') single(Tok::RParen);
    else if (c == '[') single(Tok::LBrack);
    else if (c == ']') single(Tok::RBrack);
    else if (c == ',') single(Tok::Comma);
    else if (c == '=') single(Tok::Eq);
    else if (c == '!') {
      if (i + 1 >= s.size() || s[i + 1] != '=') throw ParseError("expected '!='", l, cl);
      out.push_back({Tok::Neq, "!=", l, cl});
      advance(2);
    } else if (c == '.') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) throw ParseError("expected an attribute number after '.'", l, cl);
      out.push_back({Tok::Attr, s.substr(i + 1, j - i - 1), l, cl});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, s.substr(i, j - i), l, cl});
      advance(j - i);
    } else if (c == '"') {
      std::string text;
      std::size_t j = i + 1;
      for (; j < s.size() && s[j] != '"'; ++j) {
        if (s[j] == '\\' && j + 1 < s.size()) ++j;
        text += s[j];
      }
      if (j >= s.size()) throw ParseError("unterminated string", l, cl);
      out.push_back({Tok::String, text, l, cl});
      advance(j + 1 - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), l, cl});
      advance(j - i);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ParsedQuery top() {
    ParsedQuery out;
    if (is_call("accum")) {
      advance();
      expect(Tok::LParen);
      std::tie(out.accumulator, out.accumulator_args) = accumulator();
      expect(Tok::Comma);
      out.kind = ParsedQuery::Kind::Accum;
      out.query = query();
      expect(Tok::RParen);
    } else if (is_call("groupby")) {
      advance();
      expect(Tok::LParen);
      while (peek().kind == Tok::Number) {
        out.group_attrs.push_back(position());
        expect(Tok::Comma);
      }
      if (out.group_attrs.empty()) fail("groupby needs at least one grouping position");
      std::tie(out.accumulator, out.accumulator_args) = accumulator();
      expect(Tok::Comma);
      out.kind = ParsedQuery::Kind::GroupBy;
      out.query = query();
      expect(Tok::RParen);
    } else {
      out.query = query();
    }
    expect(Tok::End);
    return out;
  }

  std::pair<std::string, std::vector<AccumArg>> accumulator_only() {
    auto a = accumulator();
    expect(Tok::End);
    return a;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }

  const Token& expect(Tok k) {
    if (peek().kind != k)
      fail(std::string("expected ") + describe(k) + ", found " +
           (peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'"));
    return advance();
  }

  bool is_call(const char* name) const {
    return peek().kind == Tok::Ident && peek().text == name && peek(1).kind == Tok::LParen;
  }

  std::uint64_t number() {
    const Token& t = expect(Tok::Number);
    if (!is_canonical_natural(t.text)) throw ParseError("number out of range: " + t.text, t.line, t.column);
    return Value(t.text).natural();
  }

  std::size_t position() {
    std::size_t l = peek().line, c = peek().column;
    std::uint64_t v = number();
    if (v == 0) throw ParseError("attribute positions are 1-based", l, c);
    return static_cast<std::size_t>(v);
  }

  Value scalar() {
    if (peek().kind == Tok::Number) return Value(number());
    if (peek().kind == Tok::String) return Value(advance().text);
    fail("expected a number or a string");
  }

  Tuple tuple() {
    expect(Tok::LBrack);
    Tuple t;
    if (peek().kind != Tok::RBrack) {
      t.values.push_back(scalar());
      while (peek().kind == Tok::Comma) {
        advance();
        t.values.push_back(scalar());
      }
    }
    expect(Tok::RBrack);
    return t;
  }

  std::pair<std::string, std::vector<AccumArg>> accumulator() {
    std::string name = expect(Tok::Ident).text;
    std::vector<AccumArg> args;
    if (peek().kind == Tok::LParen) {
      advance();
      if (peek().kind != Tok::RParen) {
        for (;;) {
          AccumArg a;
          if (peek().kind == Tok::LBrack) {
            a.is_tuple = true;
            a.tuple = tuple();
          } else {
            a.scalar = scalar();
          }
          args.push_back(std::move(a));
          if (peek().kind != Tok::Comma) break;
          advance();
        }
      }
      expect(Tok::RParen);
    }
    return {name, args};
  }

  Query query() {
    if (peek().kind == Tok::LBrack) return q::singleton(tuple());
    if (peek().kind != Tok::Ident) fail("expected a query");
    if (peek(1).kind != Tok::LParen) return q::rel(advance().text);
    const Token& op = advance();
    expect(Tok::LParen);
    Query out;
    const std::string& f = op.text;
    if (f == "chain") {
      out = q::chain(number());
    } else if (f == "sel") {
      Predicate p = disjunction();
      expect(Tok::Comma);
      out = q::select(std::move(p), query());
    } else if (f == "proj") {
      std::vector<std::size_t> attrs;
      while (peek().kind == Tok::Number) {
        attrs.push_back(position());
        expect(Tok::Comma);
      }
      out = q::project(std::move(attrs), query());
    } else if (f == "dedup") {
      out = q::dedup(query());
    } else if (f == "union" || f == "dirprod" || f == "lexprod" || f == "concat") {
      Query a = query();
      expect(Tok::Comma);
      Query b = query();
      out = f == "union" ? q::unite(a, b) : f == "dirprod" ? q::dirprod(a, b)
                                          : f == "lexprod" ? q::lexprod(a, b) : q::concat(a, b);
    } else {
      throw ParseError("unknown operator " + f, op.line, op.column);
    }
    expect(Tok::RParen);
    return out;
  }

  bool keyword(const char* w) const { return peek().kind == Tok::Ident && peek().text == w; }

  Predicate disjunction() {
    std::vector<Predicate> parts{conjunction()};
    while (keyword("or")) {
      advance();
      parts.push_back(conjunction());
    }
    return parts.size() == 1 ? std::move(parts.front()) : Predicate::disj(std::move(parts));
  }

  Predicate conjunction() {
    std::vector<Predicate> parts{negation()};
    while (keyword("and")) {
      advance();
      parts.push_back(negation());
    }
    return parts.size() == 1 ? std::move(parts.front()) : Predicate::conj(std::move(parts));
  }

  Predicate negation() {
    if (keyword("not")) {
      advance();
      return Predicate::negate(negation());
    }
    return atom();
  }

  Predicate atom() {
    if (peek().kind == Tok::LParen) {
      advance();
      Predicate p = disjunction();
      expect(Tok::RParen);
      return p;
    }
    if (keyword("true")) {
      advance();
      return Predicate::always();
    }
    if (keyword("false")) {
      advance();
      return Predicate::never();
    }
    Operand a = operand();
    bool equal = peek().kind == Tok::Eq;
    if (!equal && peek().kind != Tok::Neq) fail("expected '=' or '!='");
    advance();
    Operand b = operand();
    return equal ? Predicate::eq(std::move(a), std::move(b)) : Predicate::neq(std::move(a), std::move(b));
  }

  Operand operand() {
    if (peek().kind == Tok::Attr) {
      const Token& t = advance();
      if (!is_canonical_natural(t.text) || Value(t.text).natural() == 0)
        throw ParseError("bad attribute position ." + t.text, t.line, t.column);
      return Operand::attr(static_cast<std::size_t>(Value(t.text).natural()));
    }
    if (peek().kind == Tok::Number || peek().kind == Tok::String) return Operand::value(scalar());
    fail("expected an attribute (.i) or a constant");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedQuery parse_query_text(const std::string& text) { return Parser(text).top(); }

Query parse_query(const std::string& text) {
  ParsedQuery p = parse_query_text(text);
  if (p.kind != ParsedQuery::Kind::Plain) throw ParseError("expected a plain query without accumulation");
  return p.query;
}

std::pair<std::string, std::vector<AccumArg>> parse_accumulator_spec(const std::string& text) {
  return Parser(text).accumulator_only();
}

}  // namespace ordlattice::cli
