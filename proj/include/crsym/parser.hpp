#pragma once

// Polynomial expressions in z1..zn, their conjugates zb1..zbn and w.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/')? unary)*        juxtaposition multiplies
//   unary   := ('-' | '+') unary | power
//   power   := atom ('^' integer)?
//   atom    := integer | 'i' | z<k> | zb<k> | w | '(' expr ')'
//            | conj(expr) | Re(expr) | Im(expr) | abs2(expr)
//
// Division is only by nonzero constants. Internally an expression is a
// MixedPoly whose u-exponent counts powers of w.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crsym/errors.hpp"
#include "crsym/ring.hpp"

namespace crsym {

namespace detail {

struct Token {
  enum class Kind { number, ident, op, lparen, rparen, comma, end } kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (c == '(') {
      out.push_back({Token::Kind::lparen, "(", i++});
    } else if (c == ')') {
      out.push_back({Token::Kind::rparen, ")", i++});
    } else if (c == ',') {
      out.push_back({Token::Kind::comma, ",", i++});
    } else if (std::string_view("+-*/^").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::op, std::string(1, c), i++});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::Kind::end, "", s.size()});
  return out;
}

// Index k of z<k> / zb<k>, or nullopt for any other identifier.
inline std::optional<std::size_t> variable_index(const std::string& id, bool& conjugated) {
  std::size_t start;
  if (id.size() > 2 && id.compare(0, 2, "zb") == 0 && std::isdigit(static_cast<unsigned char>(id[2]))) {
    conjugated = true;
    start = 2;
  } else if (id.size() > 1 && id[0] == 'z' && std::isdigit(static_cast<unsigned char>(id[1]))) {
    conjugated = false;
    start = 1;
  } else {
    return std::nullopt;
  }
  for (std::size_t j = start; j < id.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(id[j]))) return std::nullopt;
  if (id[start] == '0') return std::nullopt;
  return std::stoul(id.substr(start));
}

inline std::size_t max_variable_index(const std::vector<Token>& toks) {
  std::size_t m = 0;
  bool conj = false;
  for (const auto& t : toks)
    if (t.kind == Token::Kind::ident)
      if (auto k = variable_index(t.text, conj)) m = std::max(m, *k);
  return m;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t n) : toks_(std::move(toks)), n_(n) {}

  MixedPoly parse() {
    MixedPoly r = expr();
    if (peek().kind != Token::Kind::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return r;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }
  bool at_op(char c) const { return peek().kind == Token::Kind::op && peek().text[0] == c; }

  bool starts_atom() const {
    auto k = peek().kind;
    return k == Token::Kind::number || k == Token::Kind::ident || k == Token::Kind::lparen;
  }

  MixedPoly expr() {
    MixedPoly r = term();
    while (at_op('+') || at_op('-')) {
      const bool minus = next().text[0] == '-';
      MixedPoly t = term();
      if (minus) r -= t;
      else r += t;
    }
    return r;
  }

  MixedPoly term() {
    MixedPoly r = unary();
    for (;;) {
      if (at_op('*')) {
        next();
        r = r * unary();
      } else if (at_op('/')) {
        const std::size_t pos = next().pos;
        MixedPoly d = unary();
        auto c = as_constant(d);
        if (!c) throw ParseError("division by a non-constant polynomial", pos);
        if (c->is_zero()) throw ParseError("division by zero", pos);
        r *= c->inverse();
      } else if (starts_atom()) {
        r = r * power();
      } else {
        return r;
      }
    }
  }

  MixedPoly unary() {
    if (at_op('-')) {
      next();
      return unary() * GaussRat(-1);
    }
    if (at_op('+')) {
      next();
      return unary();
    }
    return power();
  }

  MixedPoly power() {
    MixedPoly base = atom();
    if (!at_op('^')) return base;
    next();
    const Token& t = next();
    if (t.kind != Token::Kind::number) throw ParseError("exponent must be a nonnegative integer", t.pos);
    if (t.text.size() > 4) throw ParseError("exponent too large", t.pos);
    return base.pow(static_cast<unsigned>(std::stoul(t.text)));
  }

  MixedPoly atom() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Kind::number:
        return MixedPoly::constant(n_, GaussRat(Rat(mpz_class(t.text))));
      case Token::Kind::lparen: {
        MixedPoly r = expr();
        expect_rparen(t.pos);
        return r;
      }
      case Token::Kind::ident:
        return identifier(t);
      default:
        throw ParseError(t.kind == Token::Kind::end ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
    }
  }

  MixedPoly identifier(const Token& t) {
    if (t.text == "i") return MixedPoly::constant(n_, GaussRat::i());
    if (t.text == "w") return MixedPoly(n_, MixedKey{MultiIndex(n_), MultiIndex(n_), 1}, 1);
    bool conj_var = false;
    if (auto k = variable_index(t.text, conj_var)) {
      if (*k > n_) throw ParseError("variable " + t.text + " exceeds dimension " + std::to_string(n_), t.pos);
      MultiIndex e = MultiIndex::unit(n_, *k - 1);
      return conj_var ? MixedPoly(n_, MixedKey{MultiIndex(n_), e, 0}, 1) : MixedPoly(n_, MixedKey{e, MultiIndex(n_), 0}, 1);
    }
    if (t.text == "conj" || t.text == "Re" || t.text == "Im" || t.text == "abs2") {
      MixedPoly a = single_argument(t);
      if (has_w(a)) throw ParseError(t.text + " of an expression involving w is not supported", t.pos);
      MixedPoly c = crsym::conj(a);
      if (t.text == "conj") return c;
      if (t.text == "Re") return (a + c) * GaussRat(Rat(1, 2));
      if (t.text == "Im") return (a - c) * GaussRat(Rat(0), Rat(-1, 2));  // 1/(2i)
      return a * c;
    }
    throw ParseError("unknown identifier '" + t.text + "'", t.pos);
  }

  MixedPoly single_argument(const Token& fn) {
    if (peek().kind != Token::Kind::lparen) throw ParseError(fn.text + " expects '('", peek().pos);
    const std::size_t open = next().pos;
    if (peek().kind == Token::Kind::rparen) throw ParseError(fn.text + " expects 1 argument, got 0", peek().pos);
    MixedPoly a = expr();
    if (peek().kind == Token::Kind::comma) throw ParseError(fn.text + " expects 1 argument, got more", peek().pos);
    expect_rparen(open);
    return a;
  }

  void expect_rparen(std::size_t open) {
    if (peek().kind != Token::Kind::rparen)
      throw ParseError("expected ')' to close '(' at position " + std::to_string(open), peek().pos);
    next();
  }

  static bool has_w(const MixedPoly& p) {
    for (const auto& [k, c] : p.terms())
      if (k.u != 0) return true;
    return false;
  }

  std::optional<GaussRat> as_constant(const MixedPoly& p) const {
    if (p.is_zero()) return GaussRat{};
    if (p.size() != 1) return std::nullopt;
    const auto& [k, c] = *p.terms().begin();
    if (k.total_degree() != 0) return std::nullopt;
    return c;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::size_t n_;
};

}  // namespace detail

// Parses s in n variables; n = 0 infers it from the largest index used.
// The u-exponent of each term is the power of w.
inline MixedPoly parse_expression(std::string_view s, std::size_t n = 0) {
  auto toks = detail::tokenize(s);
  const std::size_t used = detail::max_variable_index(toks);
  if (n == 0) n = std::max<std::size_t>(used, 1);
  return detail::Parser(std::move(toks), n).parse();
}

// A real polynomial in z, zb (no w).
inline RealPoly parse_real(std::string_view s, std::size_t n = 0) {
  MixedPoly p = parse_expression(s, n);
  for (const auto& [k, c] : p.terms())
    if (k.u != 0) throw ParseError("w is not allowed in a defining polynomial", 0);
  return RealPoly(p);
}

// A holomorphic polynomial in z and w (no zb).
inline HoloPoly parse_holo(std::string_view s, std::size_t n = 0) {
  MixedPoly p = parse_expression(s, n);
  HoloPoly h(p.nvars());
  for (const auto& [k, c] : p.terms()) {
    if (!k.zb.is_zero()) throw ParseError("conjugate variables are not allowed in a holomorphic polynomial", 0);
    h.add_term({k.z, k.u}, c);
  }
  return h;
}

}  // namespace crsym
