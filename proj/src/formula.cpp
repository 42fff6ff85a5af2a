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

#include "acfqe/formula.hpp"

#include <algorithm>
#include <optional>

#include "acfqe/errors.hpp"

namespace acfqe {

struct Formula::Node {
  Kind kind;
  std::optional<Polynomial> poly;  // Atom
  std::vector<Formula> children;   // Not (1), And, Or; quantifier body
  VarId var = 0;                   // Exists / Forall
  VarTablePtr table;               // Exists / Forall, optional naming context
};

Formula Formula::truth() {
  static const Formula instance{std::make_shared<const Node>(Node{Kind::True, std::nullopt, {}, 0, nullptr})};
  return instance;
}

Formula Formula::falsity() {
  static const Formula instance{std::make_shared<const Node>(Node{Kind::False, std::nullopt, {}, 0, nullptr})};
  return instance;
}

Formula Formula::atom(Polynomial lhs) {
  if (lhs.is_zero()) return truth();
  if (lhs.is_constant() && lhs.base().is_unit(lhs.constant_value())) return falsity();
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(lhs), {}, 0, nullptr}));
}

Formula Formula::negation(Formula f) {
  switch (f.kind()) {
    case Kind::True:
      return falsity();
    case Kind::False:
      return truth();
    default:
      return Formula(std::make_shared<const Node>(Node{Kind::Not, std::nullopt, {std::move(f)}, 0, nullptr}));
  }
}

namespace {

void push_unique(std::vector<Formula>& kids, Formula f) {
  for (const auto& k : kids) {
    if (k == f) return;
  }
  kids.push_back(std::move(f));
}

}  // namespace

Formula Formula::conjunction(std::vector<Formula> fs) {
  std::vector<Formula> kids;
  for (auto& f : fs) {
    switch (f.kind()) {
      case Kind::False:
        return falsity();
      case Kind::True:
        break;
      case Kind::And:
        for (const auto& k : f.children()) push_unique(kids, k);
        break;
      default:
        push_unique(kids, std::move(f));
    }
  }
  if (kids.empty()) return truth();
  if (kids.size() == 1) return kids.front();
  return Formula(std::make_shared<const Node>(Node{Kind::And, std::nullopt, std::move(kids), 0, nullptr}));
}

Formula Formula::disjunction(std::vector<Formula> fs) {
  std::vector<Formula> kids;
  for (auto& f : fs) {
    switch (f.kind()) {
      case Kind::True:
        return truth();
      case Kind::False:
        break;
      case Kind::Or:
        for (const auto& k : f.children()) push_unique(kids, k);
        break;
      default:
        push_unique(kids, std::move(f));
    }
  }
  if (kids.empty()) return falsity();
  if (kids.size() == 1) return kids.front();
  return Formula(std::make_shared<const Node>(Node{Kind::Or, std::nullopt, std::move(kids), 0, nullptr}));
}

Formula Formula::exists(VarId var, Formula body, VarTablePtr table) {
  return Formula(std::make_shared<const Node>(Node{Kind::Exists, std::nullopt, {std::move(body)}, var, std::move(table)}));
}

Formula Formula::forall(VarId var, Formula body, VarTablePtr table) {
  return Formula(std::make_shared<const Node>(Node{Kind::Forall, std::nullopt, {std::move(body)}, var, std::move(table)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Polynomial& Formula::atom_poly() const {
  if (node_->kind != Kind::Atom) throw UsageError("atom_poly on non-atom");
  return *node_->poly;
}

const std::vector<Formula>& Formula::children() const { return node_->children; }

VarId Formula::bound_var() const {
  if (node_->kind != Kind::Exists && node_->kind != Kind::Forall) {
    throw UsageError("bound_var on non-quantifier");
  }
  return node_->var;
}

const Formula& Formula::body() const {
  if (node_->kind != Kind::Exists && node_->kind != Kind::Forall) {
    throw UsageError("body on non-quantifier");
  }
  return node_->children.front();
}

bool Formula::is_quantifier_free() const {
  switch (kind()) {
    case Kind::Exists:
    case Kind::Forall:
      return false;
    default:
      return std::all_of(node_->children.begin(), node_->children.end(),
                         [](const Formula& f) { return f.is_quantifier_free(); });
  }
}

namespace {

void collect_free(const Formula& f, std::set<VarId>& bound, std::set<VarId>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (VarId v : f.atom_poly().variables()) {
        if (bound.find(v) == bound.end()) out.insert(v);
      }
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const VarId v = f.bound_var();
      const bool was_bound = bound.count(v) > 0;
      bound.insert(v);
      collect_free(f.body(), bound, out);
      if (!was_bound) bound.erase(v);
      break;
    }
    default:
      for (const auto& k : f.children()) collect_free(k, bound, out);
  }
}

}  // namespace

std::set<VarId> Formula::free_variables() const {
  std::set<VarId> bound, out;
  collect_free(*this, bound, out);
  return out;
}

VarTablePtr Formula::table() const {
  switch (kind()) {
    case Kind::Atom:
      return atom_poly().table();
    default: {
      VarTablePtr best = node_->table;
      for (const auto& k : node_->children) {
        VarTablePtr t = k.table();
        if (t && (!best || t->size() > best->size())) best = t;
      }
      return best;
    }
  }
}

bool Formula::operator==(const Formula& rhs) const {
  if (node_ == rhs.node_) return true;
  if (kind() != rhs.kind()) return false;
  switch (kind()) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Atom:
      return atom_poly() == rhs.atom_poly();
    case Kind::Exists:
    case Kind::Forall:
      return bound_var() == rhs.bound_var() && body() == rhs.body();
    default: {
      const auto& a = children();
      const auto& b = rhs.children();
      return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
    }
  }
}

namespace {

/// Wrap in parentheses when the child cannot stand bare in this context.
std::string render_child(const Formula& f, bool allow_or) {
  switch (f.kind()) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return "(" + f.render() + ")";
    case Formula::Kind::Or:
      return allow_or ? f.render() : "(" + f.render() + ")";
    default:
      return f.render();
  }
}

}  // namespace

std::string Formula::render() const {
  switch (kind()) {
    case Kind::True:
      return "0 = 0";
    case Kind::False:
      return "0 != 0";
    case Kind::Atom:
      return atom_poly().render() + " = 0";
    case Kind::Not: {
      const Formula& inner = children().front();
      if (inner.kind() == Kind::Atom) return inner.atom_poly().render() + " != 0";
      return "!(" + inner.render() + ")";
    }
    case Kind::And: {
      std::string out;
      for (const auto& k : children()) {
        if (!out.empty()) out += " & ";
        out += render_child(k, /*allow_or=*/false);
      }
      return out;
    }
    case Kind::Or: {
      std::string out;
      for (const auto& k : children()) {
        if (!out.empty()) out += " | ";
        out += render_child(k, /*allow_or=*/true);
      }
      return out;
    }
    case Kind::Exists:
    case Kind::Forall: {
      VarTablePtr t = table();
      if (!t) throw UsageError("cannot render a quantifier without a table");
      const char* word = kind() == Kind::Exists ? "exists " : "forall ";
      return word + t->name(bound_var()) + ". " + body().render();
    }
  }
  throw UsageError("corrupt formula node");
}

Formula to_nnf(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Atom:
      return f;
    case Formula::Kind::And: {
      std::vector<Formula> kids;
      for (const auto& k : f.children()) kids.push_back(to_nnf(k));
      return Formula::conjunction(std::move(kids));
    }
    case Formula::Kind::Or: {
      std::vector<Formula> kids;
      for (const auto& k : f.children()) kids.push_back(to_nnf(k));
      return Formula::disjunction(std::move(kids));
    }
    case Formula::Kind::Exists:
      return Formula::exists(f.bound_var(), to_nnf(f.body()));
    case Formula::Kind::Forall:
      return Formula::forall(f.bound_var(), to_nnf(f.body()));
    case Formula::Kind::Not: {
      const Formula& inner = f.children().front();
      switch (inner.kind()) {
        case Formula::Kind::True:
          return Formula::falsity();
        case Formula::Kind::False:
          return Formula::truth();
        case Formula::Kind::Atom:
          return f;  // literal
        case Formula::Kind::Not:
          return to_nnf(inner.children().front());
        case Formula::Kind::And: {
          std::vector<Formula> kids;
          for (const auto& k : inner.children()) kids.push_back(to_nnf(Formula::negation(k)));
          return Formula::disjunction(std::move(kids));
        }
        case Formula::Kind::Or: {
          std::vector<Formula> kids;
          for (const auto& k : inner.children()) kids.push_back(to_nnf(Formula::negation(k)));
          return Formula::conjunction(std::move(kids));
        }
        case Formula::Kind::Exists:
          return Formula::forall(inner.bound_var(), to_nnf(Formula::negation(inner.body())));
        case Formula::Kind::Forall:
          return Formula::exists(inner.bound_var(), to_nnf(Formula::negation(inner.body())));
      }
      throw UsageError("corrupt formula node");
    }
  }
  throw UsageError("corrupt formula node");
}

namespace {

struct PrenexState {
  VarTablePtr table;
  std::set<VarId> used;  // free variables plus binders consumed so far
};

Formula rename_apart(const Formula& f, PrenexState& st, std::map<VarId, VarId>& env) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return f;
    case Formula::Kind::Atom: {
      Polynomial p = f.atom_poly();
      if (p.table()->size() < st.table->size()) p = p.with_table(st.table);
      return Formula::atom(p.rename(env));
    }
    case Formula::Kind::Not:
      return Formula::negation(rename_apart(f.children().front(), st, env));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> kids;
      for (const auto& k : f.children()) kids.push_back(rename_apart(k, st, env));
      return f.kind() == Formula::Kind::And ? Formula::conjunction(std::move(kids))
                                            : Formula::disjunction(std::move(kids));
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const VarId v = f.bound_var();
      VarId use = v;
      if (st.used.count(v) > 0) {
        const std::string fresh = st.table->fresh_name(st.table->name(v));
        st.table = st.table->extended({{fresh, VarTable::Kind::Variable}});
        use = static_cast<VarId>(st.table->size() - 1);
      }
      st.used.insert(use);
      const bool had = env.count(v) > 0;
      const VarId saved = had ? env[v] : 0;
      env[v] = use;
      Formula body = rename_apart(f.body(), st, env);
      if (had) {
        env[v] = saved;
      } else {
        env.erase(v);
      }
      return f.kind() == Formula::Kind::Exists ? Formula::exists(use, std::move(body))
                                               : Formula::forall(use, std::move(body));
    }
  }
  throw UsageError("corrupt formula node");
}

struct Prefix {
  std::vector<std::pair<Formula::Kind, VarId>> entries;
};

Formula pull_quantifiers(const Formula& f, Prefix& prefix) {
  switch (f.kind()) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      prefix.entries.emplace_back(f.kind(), f.bound_var());
      return pull_quantifiers(f.body(), prefix);
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> kids;
      for (const auto& k : f.children()) kids.push_back(pull_quantifiers(k, prefix));
      return f.kind() == Formula::Kind::And ? Formula::conjunction(std::move(kids))
                                            : Formula::disjunction(std::move(kids));
    }
    default:
      return f;  // NNF: negations sit on atoms only
  }
}

}  // namespace

PrenexResult to_prenex(const Formula& f, VarTablePtr table) {
  if (!table) throw UsageError("to_prenex requires a variable table");
  PrenexState st{std::move(table), f.free_variables()};
  std::map<VarId, VarId> env;
  Formula renamed = rename_apart(to_nnf(f), st, env);
  Prefix prefix;
  Formula matrix = pull_quantifiers(renamed, prefix);
  Formula out = std::move(matrix);
  for (std::size_t i = prefix.entries.size(); i-- > 0;) {
    const auto& [kind, var] = prefix.entries[i];
    out = kind == Formula::Kind::Exists ? Formula::exists(var, std::move(out))
                                        : Formula::forall(var, std::move(out));
  }
  return PrenexResult{std::move(out), std::move(st.table)};
}

}  // namespace acfqe
