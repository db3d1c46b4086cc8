#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intcl/errors.hpp"
#include "intcl/ideal.hpp"
#include "intcl/matrix.hpp"
#include "intcl/polynomial.hpp"
#include "intcl/ring.hpp"

namespace intcl {

namespace detail {

enum class Tok { ident, number, symbol, newline, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (c == '\n') {
      out.push_back({Tok::newline, "\n", line, col});
      advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::number, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("+-*/^()[],=").find(c) != std::string_view::npos) {
      out.push_back({Tok::symbol, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_symbol(char c) const { return peek().kind == Tok::symbol && peek().text[0] == c; }
  bool at_end_of_statement() const { return peek().kind == Tok::newline || peek().kind == Tok::end; }

  // Newlines inside brackets do not end a statement.
  void skip_newlines_in_brackets() {
    if (depth_ > 0)
      while (peek().kind == Tok::newline) ++pos_;
  }

  void expect_symbol(char c) {
    skip_newlines_in_brackets();
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'");
    if (c == '(' || c == '[') ++depth_;
    if ((c == ')' || c == ']') && depth_ > 0) --depth_;
    next();
    skip_newlines_in_brackets();
  }

  bool accept_symbol(char c) {
    skip_newlines_in_brackets();
    if (!at_symbol(c)) return false;
    expect_symbol(c);
    return true;
  }

  std::string expect_ident() {
    if (peek().kind != Tok::ident) fail("expected identifier");
    return next().text;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    std::string found = t.kind == Tok::end ? "end of input" : t.kind == Tok::newline ? "end of line" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + found, t.line, t.col);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

class PolyParser {
 public:
  PolyParser(TokenStream& ts, RingPtr ring) : ts_(ts), ring_(std::move(ring)) {}

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      ts_.skip_newlines_in_brackets();
      if (ts_.accept_symbol('+')) acc += term();
      else if (ts_.accept_symbol('-')) acc -= term();
      else break;
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (ts_.accept_symbol('*')) {
        acc *= unary();
      } else if (ts_.at_symbol('/')) {
        const Token at = ts_.peek();
        ts_.expect_symbol('/');
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("division only by a nonzero constant", at.line, at.col);
        acc = acc.scaled(ring_->inverse(d.leading_coefficient()));
      } else {
        break;
      }
    }
    const auto& t = ts_.peek();
    if (t.kind == Tok::ident || t.kind == Tok::number || (t.kind == Tok::symbol && t.text == "("))
      ts_.fail("implicit multiplication is not allowed; expected an operator");
    return acc;
  }

  Polynomial unary() {
    if (ts_.accept_symbol('-')) return -unary();
    if (ts_.accept_symbol('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (ts_.accept_symbol('^')) {
      if (ts_.peek().kind != Tok::number) ts_.fail("expected a nonnegative integer exponent");
      const Token t = ts_.next();
      if (t.text.size() > 6) throw ParseError("exponent too large", t.line, t.col);
      base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  Polynomial atom() {
    const Token t = ts_.peek();
    if (t.kind == Tok::number) {
      ts_.next();
      return Polynomial::constant(ring_, Coefficient(mpz_class(t.text)));
    }
    if (t.kind == Tok::ident) {
      ts_.next();
      auto i = ring_->index_of(t.text);
      if (!i) throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
      return Polynomial::variable(ring_, *i);
    }
    if (ts_.at_symbol('(')) {
      ts_.expect_symbol('(');
      Polynomial p = expr();
      ts_.expect_symbol(')');
      return p;
    }
    ts_.fail("expected a number, variable or '('");
  }

  TokenStream& ts_;
  RingPtr ring_;
};

}  // namespace detail

/// Parses a single polynomial such as "x^2 - 1/2*x*y + 3" over `ring`.
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  detail::TokenStream ts(detail::tokenize(text));
  detail::PolyParser p(ts, ring);
  Polynomial f = p.expr();
  if (ts.peek().kind != detail::Tok::end) ts.fail("unexpected trailing input");
  return f;
}

/// Comma-separated polynomial list.
inline std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  detail::TokenStream ts(detail::tokenize(text));
  detail::PolyParser p(ts, ring);
  std::vector<Polynomial> out{p.expr()};
  while (ts.accept_symbol(',')) out.push_back(p.expr());
  if (ts.peek().kind != detail::Tok::end) ts.fail("unexpected trailing input");
  return out;
}

/// A parsed problem: one ring (with optional relations), named ideals and
/// named matrices. Ideal generator order is preserved as written.
struct ProblemFile {
  Ring ring{PolynomialRing::make({"x"})};
  std::vector<std::string> ideal_names;
  std::map<std::string, Ideal> ideals;
  std::vector<std::string> matrix_names;
  std::map<std::string, PolyMatrix> matrices;

  const Ideal& ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw PreconditionError("no ideal named '" + name + "'");
    return it->second;
  }
  const PolyMatrix& matrix(const std::string& name) const {
    auto it = matrices.find(name);
    if (it == matrices.end()) throw PreconditionError("no matrix named '" + name + "'");
    return it->second;
  }
};

/// Grammar, one statement per line (brackets may span lines, '#' comments):
///   ring Q[x,y,...] [order=grevlex|lex]      (or GF(p)[...])
///   rel = f1, f2, ...
///   ideal NAME = f1, f2, ...
///   matrix NAME = [[f11, f12, ...], [f21, ...], ...]
inline ProblemFile parse_problem(std::string_view text) {
  using detail::Tok;
  detail::TokenStream ts(detail::tokenize(text));
  std::optional<RingPtr> ring;
  std::vector<Polynomial> relations;
  ProblemFile pf;
  std::map<std::string, std::vector<Polynomial>> ideal_gens;
  std::set<std::string> names;

  auto end_statement = [&] {
    if (!ts.at_end_of_statement()) ts.fail("expected end of statement");
    if (ts.peek().kind == Tok::newline) ts.next();
  };
  auto need_ring = [&](const detail::Token& at) -> const RingPtr& {
    if (!ring) throw ParseError("ring must be declared first", at.line, at.col);
    return *ring;
  };
  auto declare = [&](const detail::Token& at, const std::string& name) {
    if (!names.insert(name).second) throw ParseError("duplicate name '" + name + "'", at.line, at.col);
  };

  while (ts.peek().kind != Tok::end) {
    if (ts.peek().kind == Tok::newline) {
      ts.next();
      continue;
    }
    const detail::Token kw = ts.peek();
    if (kw.kind != Tok::ident) ts.fail("expected a statement keyword");
    ts.next();
    if (kw.text == "ring") {
      if (ring) throw ParseError("ring declared twice", kw.line, kw.col);
      std::uint64_t characteristic = 0;
      const detail::Token field = ts.peek();
      std::string fname = ts.expect_ident();
      if (fname == "GF") {
        ts.expect_symbol('(');
        if (ts.peek().kind != Tok::number) ts.fail("expected a prime");
        characteristic = std::stoull(ts.next().text);
        ts.expect_symbol(')');
      } else if (fname != "Q" && fname != "QQ") {
        throw ParseError("unknown coefficient field '" + fname + "'", field.line, field.col);
      }
      ts.expect_symbol('[');
      std::vector<std::string> vars;
      std::set<std::string> seen;
      do {
        const detail::Token v = ts.peek();
        std::string name = ts.expect_ident();
        if (!seen.insert(name).second) throw ParseError("duplicate variable '" + name + "'", v.line, v.col);
        vars.push_back(name);
      } while (ts.accept_symbol(','));
      ts.expect_symbol(']');
      MonomialOrder order = MonomialOrder::grevlex();
      if (ts.peek().kind == Tok::ident && ts.peek().text == "order") {
        ts.next();
        ts.expect_symbol('=');
        const detail::Token o = ts.peek();
        std::string oname = ts.expect_ident();
        if (oname == "grevlex") order = MonomialOrder::grevlex();
        else if (oname == "lex") order = MonomialOrder::lex();
        else throw ParseError("unknown order '" + oname + "'", o.line, o.col);
      }
      try {
        ring = PolynomialRing::make(vars, order, characteristic);
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), kw.line, kw.col);
      }
      end_statement();
    } else if (kw.text == "rel") {
      const auto& r = need_ring(kw);
      ts.expect_symbol('=');
      if (ts.at_end_of_statement()) ts.fail("empty relation list");
      detail::PolyParser p(ts, r);
      relations.push_back(p.expr());
      while (ts.accept_symbol(',')) relations.push_back(p.expr());
      end_statement();
    } else if (kw.text == "ideal") {
      const auto& r = need_ring(kw);
      const detail::Token at = ts.peek();
      std::string name = ts.expect_ident();
      declare(at, name);
      ts.expect_symbol('=');
      if (ts.at_end_of_statement()) ts.fail("empty ideal body");
      detail::PolyParser p(ts, r);
      std::vector<Polynomial> gens{p.expr()};
      while (ts.accept_symbol(',')) gens.push_back(p.expr());
      ideal_gens.emplace(name, std::move(gens));
      pf.ideal_names.push_back(name);
      end_statement();
    } else if (kw.text == "matrix") {
      const auto& r = need_ring(kw);
      const detail::Token at = ts.peek();
      std::string name = ts.expect_ident();
      declare(at, name);
      ts.expect_symbol('=');
      detail::PolyParser p(ts, r);
      std::vector<std::vector<Polynomial>> rows;
      ts.expect_symbol('[');
      do {
        const detail::Token rt = ts.peek();
        ts.expect_symbol('[');
        std::vector<Polynomial> row{p.expr()};
        while (ts.accept_symbol(',')) row.push_back(p.expr());
        ts.expect_symbol(']');
        if (!rows.empty() && row.size() != rows.front().size())
          throw ParseError("matrix rows have different lengths", rt.line, rt.col);
        rows.push_back(std::move(row));
      } while (ts.accept_symbol(','));
      ts.expect_symbol(']');
      pf.matrices.emplace(name, PolyMatrix::from_rows(r, rows));
      pf.matrix_names.push_back(name);
      end_statement();
    } else {
      throw ParseError("unknown statement '" + kw.text + "'", kw.line, kw.col);
    }
  }
  if (!ring) throw ParseError("missing ring declaration", 1, 1);
  pf.ring = Ring(*ring, relations);
  for (auto& [name, gens] : ideal_gens) pf.ideals.emplace(name, Ideal(pf.ring, gens));
  return pf;
}

}  // namespace intcl
