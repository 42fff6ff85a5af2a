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

#ifndef ACFQE_FORMULA_HPP
#define ACFQE_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "acfqe/polynomial.hpp"

namespace acfqe {

/// First-order formula over ring atoms. An atom stores one polynomial p and
/// means p = 0; inequations are Not(Atom). Values are immutable trees shared
/// by pointer; all construction goes through the smart constructors, which
/// fold constants:
///   - Atom(0) is True;
///   - Atom(c) for a unit constant c is False (units vanish in no model;
///     non-unit integer constants stay symbolic, their truth depends on the
///     characteristic);
///   - connectives fold True/False and flatten nested And/Or.
/// Quantifiers never fold, so shapes like Exists(t, True) survive.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Exists, Forall };

  Formula() : Formula(truth()) {}

  static Formula truth();
  static Formula falsity();
  static Formula atom(Polynomial lhs);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  /// `table` is only needed when the body contains no atoms (so the bound
  /// name could not be recovered for rendering); it is remembered otherwise
  /// too but never required.
  static Formula exists(VarId var, Formula body, VarTablePtr table = nullptr);
  static Formula forall(VarId var, Formula body, VarTablePtr table = nullptr);

  Kind kind() const;
  /// Atom only.
  const Polynomial& atom_poly() const;
  /// Not (one entry), And, Or.
  const std::vector<Formula>& children() const;
  /// Exists / Forall.
  VarId bound_var() const;
  const Formula& body() const;

  bool is_quantifier_free() const;
  std::set<VarId> free_variables() const;
  /// Table of the widest atom; null for formulas without atoms.
  VarTablePtr table() const;

  bool operator==(const Formula& rhs) const;
  bool operator!=(const Formula& rhs) const { return !(*this == rhs); }

  /// Canonical text in the input grammar; parse(render(f)) == f.
  std::string render() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Negation normal form: negations pushed onto atoms, quantifiers dualized.
Formula to_nnf(const Formula& f);

struct PrenexResult {
  Formula formula;
  /// Table extended with any variables minted while renaming binders apart.
  VarTablePtr table;
};

/// Prenex form over an NNF matrix: quantifiers pulled to an outer prefix
/// left-to-right, binders renamed apart from each other and from free
/// variables. Free variables are untouched.
PrenexResult to_prenex(const Formula& f, VarTablePtr table);

}  // namespace acfqe

#endif  // ACFQE_FORMULA_HPP
