/*
   Copyright 2026 The acfqe authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "acfqe/parser.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "acfqe/errors.hpp"

namespace acfqe {

namespace {

enum class Tok {
  Ident,
  Int,
  KwExists,
  KwForall,
  LParen,
  RParen,
  Bang,
  Amp,
  Pipe,
  Eq,
  Neq,
  Plus,
  Minus,
  Star,
  Caret,
  Dot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::string s) { out.push_back({kind, std::move(s), line, column}); };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      if (word == "exists") {
        push(Tok::KwExists, std::move(word));
      } else if (word == "forall") {
        push(Tok::KwForall, std::move(word));
      } else {
        push(Tok::Ident, std::move(word));
      }
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Int, std::string(text.substr(i, j - i)));
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    switch (c) {
      case '(':
        push(Tok::LParen, "(");
        break;
      case ')':
        push(Tok::RParen, ")");
        break;
      case '!':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          push(Tok::Neq, "!=");
          column += 2;
          i += 2;
          continue;
        }
        push(Tok::Bang, "!");
        break;
      case '&':
        push(Tok::Amp, "&");
        break;
      case '|':
        push(Tok::Pipe, "|");
        break;
      case '=':
        push(Tok::Eq, "=");
        break;
      case '+':
        push(Tok::Plus, "+");
        break;
      case '-':
        push(Tok::Minus, "-");
        break;
      case '*':
        push(Tok::Star, "*");
        break;
      case '^':
        push(Tok::Caret, "^");
        break;
      case '.':
        push(Tok::Dot, ".");
        break;
      default:
        throw ParseError(line, column, std::string("unexpected character '") + c + "'");
    }
    ++column;
    ++i;
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

constexpr std::uint32_t kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::vector<Token> tokens, VarTablePtr table, BaseDomain base)
      : tokens_(std::move(tokens)), table_(std::move(table)), base_(std::move(base)) {}

  /// Register quantified names ahead of time so the table is final before
  /// any polynomial is built.
  void collect_binders() {
    std::vector<VarTable::Entry> extra;
    for (std::size_t i = 0; i + 1 < tokens_.size(); ++i) {
      if (tokens_[i].kind != Tok::KwExists && tokens_[i].kind != Tok::KwForall) continue;
      const Token& name = tokens_[i + 1];
      if (name.kind != Tok::Ident) continue;  // reported during the parse proper
      if (table_->find(name.text)) continue;
      bool pending = false;
      for (const auto& e : extra) pending = pending || e.name == name.text;
      if (!pending) extra.push_back({name.text, VarTable::Kind::Variable});
    }
    if (!extra.empty()) table_ = table_->extended(std::move(extra));
  }

  Formula parse_formula_toplevel() {
    Formula f = parse_formula();
    expect(Tok::End, "end of input");
    return f;
  }

  Polynomial parse_polynomial_toplevel() {
    require_scope_ = false;  // bare polynomials: any known identifier is fine
    Polynomial p = parse_poly();
    expect(Tok::End, "end of input");
    return p;
  }

  const VarTablePtr& table() const { return table_; }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const Token& at, const std::string& msg) {
    throw ParseError(at.line, at.column, msg);
  }
  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what);
    ++pos_;
  }

  Formula parse_formula() {
    if (peek().kind == Tok::KwExists || peek().kind == Tok::KwForall) {
      const bool is_exists = advance().kind == Tok::KwExists;
      if (peek().kind != Tok::Ident) {
        fail(peek(), std::string("expected variable name after '") +
                         (is_exists ? "exists'" : "forall'"));
      }
      const Token name = advance();
      const auto id = table_->find(name.text);
      if (!id) fail(name, "unknown identifier '" + name.text + "'");  // unreachable after collect
      if (table_->kind(*id) == VarTable::Kind::Parameter) {
        fail(name, "cannot quantify over parameter '" + name.text + "'");
      }
      expect(Tok::Dot, "'.' after quantified variable");
      scope_.push_back(*id);
      Formula body = parse_formula();
      scope_.pop_back();
      return is_exists ? Formula::exists(*id, std::move(body), table_)
                       : Formula::forall(*id, std::move(body), table_);
    }
    return parse_disj();
  }

  Formula parse_disj() {
    std::vector<Formula> parts{parse_conj()};
    while (accept(Tok::Pipe)) parts.push_back(parse_conj());
    return Formula::disjunction(std::move(parts));
  }

  Formula parse_conj() {
    std::vector<Formula> parts{parse_neg()};
    while (accept(Tok::Amp)) parts.push_back(parse_neg());
    return Formula::conjunction(std::move(parts));
  }

  Formula parse_neg() {
    if (accept(Tok::Bang)) return Formula::negation(parse_neg());
    if (peek().kind == Tok::LParen) {
      // '(' opens either a parenthesized subformula or a parenthesized
      // polynomial inside an atom; try the atom reading first and fall back.
      const std::size_t saved = pos_;
      try {
        return parse_atom();
      } catch (const ParseError&) {
        pos_ = saved;
      }
      expect(Tok::LParen, "'('");
      Formula f = parse_formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    return parse_atom();
  }

  Formula parse_atom() {
    Polynomial lhs = parse_poly();
    const Token rel = peek();
    if (rel.kind != Tok::Eq && rel.kind != Tok::Neq) fail(rel, "expected '=' or '!='");
    ++pos_;
    Polynomial rhs = parse_poly();
    Formula eq = Formula::atom(lhs - rhs);
    return rel.kind == Tok::Eq ? eq : Formula::negation(std::move(eq));
  }

  Polynomial parse_poly() {
    bool negate = accept(Tok::Minus);
    Polynomial acc = parse_term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept(Tok::Plus)) {
        acc = acc + parse_term();
      } else if (accept(Tok::Minus)) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (accept(Tok::Star)) acc = acc * parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        advance();
        return Polynomial::constant(base_, table_, mpq_class(mpz_class(t.text)));
      }
      case Tok::Ident: {
        advance();
        const auto id = table_->find(t.text);
        if (!id) fail(t, "unknown identifier '" + t.text + "'");
        if (require_scope_ && table_->kind(*id) == VarTable::Kind::Variable && !in_scope(*id)) {
          fail(t, "variable '" + t.text + "' used outside its quantifier");
        }
        Polynomial v = Polynomial::variable(base_, table_, *id);
        if (accept(Tok::Caret)) {
          const Token& e = peek();
          if (e.kind != Tok::Int) fail(e, "expected integer exponent");
          advance();
          mpz_class exp(e.text);
          if (exp > kMaxExponent) fail(e, "exponent too large");
          return v.pow(static_cast<std::uint32_t>(exp.get_ui()));
        }
        return v;
      }
      case Tok::LParen: {
        advance();
        Polynomial p = parse_poly();
        expect(Tok::RParen, "')'");
        return p;
      }
      default:
        fail(t, "expected polynomial");
    }
  }

  bool in_scope(VarId id) const {
    for (VarId v : scope_) {
      if (v == id) return true;
    }
    return false;
  }

  std::vector<Token> tokens_;
  VarTablePtr table_;
  BaseDomain base_;
  std::size_t pos_ = 0;
  bool require_scope_ = true;
  std::vector<VarId> scope_;
};

}  // namespace

ParsedFormula parse_formula(std::string_view text, VarTablePtr table, const BaseDomain& base) {
  Parser parser(tokenize(text), std::move(table), base);
  parser.collect_binders();
  Formula f = parser.parse_formula_toplevel();
  return ParsedFormula{std::move(f), parser.table()};
}

Polynomial parse_polynomial(std::string_view text, const VarTablePtr& table,
                            const BaseDomain& base) {
  Parser parser(tokenize(text), table, base);
  return parser.parse_polynomial_toplevel();
}

}  // namespace acfqe
