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

#ifndef ACFQE_POLYNOMIAL_HPP
#define ACFQE_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "acfqe/base_domain.hpp"
#include "acfqe/vartable.hpp"

namespace acfqe {

/// Exponent vector indexed by VarTable position, trailing zeros stripped.
/// The trimmed form is canonical across table extensions: a monomial means
/// the same thing over any extension of the table it was built with.
using Monomial = std::vector<std::uint32_t>;

std::uint32_t monomial_degree(const Monomial& m);

/// Graded lexicographic, descending: higher total degree first, ties broken
/// lexicographically in table order with larger exponents first. Map
/// iteration therefore starts at the leading term.
struct MonomialOrderDesc {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct PseudoDivision;

/// Sparse exact multivariate polynomial over a BaseDomain. Canonical form:
/// no stored coefficient is zero, coefficients are domain-reduced, and the
/// term map is ordered; structural equality coincides with semantic equality.
/// Immutable in practice: all operations return new values.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpq_class, MonomialOrderDesc>;

  static Polynomial zero(const BaseDomain& base, VarTablePtr table);
  static Polynomial constant(const BaseDomain& base, VarTablePtr table, const mpq_class& value);
  static Polynomial variable(const BaseDomain& base, VarTablePtr table, VarId var);
  /// Single term c * prod vars[i]^exps[i].
  static Polynomial term(const BaseDomain& base, VarTablePtr table, const mpq_class& coeff,
                         const Monomial& exponents);

  const BaseDomain& base() const { return base_; }
  const VarTablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero polynomial gives 0).
  mpq_class constant_value() const;
  bool is_one() const { return is_constant() && constant_value() == 1; }

  std::uint32_t total_degree() const;
  std::uint32_t degree(VarId var) const;
  bool contains(VarId var) const { return degree(var) > 0; }
  std::set<VarId> variables() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial pow(std::uint32_t e) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  /// Total order on polynomials over one ring: compares term sequences,
  /// leading terms first. Used for tie-breaks and canonical sorting.
  static int compare(const Polynomial& a, const Polynomial& b);

  /// Coefficients of x^0..x^d as polynomials free of x; [zero] when f = 0.
  std::vector<Polynomial> as_univariate(VarId x) const;
  /// Coefficient of x^degree(x); zero polynomial when f = 0.
  Polynomial leading_coefficient(VarId x) const;
  /// Coefficient of x^k.
  Polynomial coefficient_of(VarId x, std::uint32_t k) const;

  /// Map each occurring variable through `to` (identity where absent).
  Polynomial rename(const std::map<VarId, VarId>& to) const;

  /// Same terms over an extension of this polynomial's table.
  Polynomial with_table(VarTablePtr table) const;

  /// Exact-division test in the coefficient ring: true iff *this divides
  /// other with a quotient whose coefficients stay in the domain.
  bool divides(const Polynomial& other) const;

  /// The quotient other / *this when the division is exact, else nothing.
  std::optional<Polynomial> divide_exact(const Polynomial& other) const;

  /// Canonical text, graded-lex descending (e.g. "x^2 + x*y - 3").
  std::string render() const;

  /// Pseudo-division of f by g in x using only ring operations: with
  /// delta = max(deg_x f - deg_x g + 1, 0), lc_x(g)^delta * f = q*g + r and
  /// deg_x r < deg_x g. Requires deg_x g > 0.
  static PseudoDivision pseudo_divide(const Polynomial& f, const Polynomial& g, VarId x);
  static Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g, VarId x);

 private:
  Polynomial(BaseDomain base, VarTablePtr table) : base_(std::move(base)), table_(std::move(table)) {}

  void insert_term(Monomial m, const mpq_class& c);
  static void require_compatible(const Polynomial& a, const Polynomial& b);
  /// Multiply by c * x_var^e (shift-and-scale helper used by division).
  Polynomial times_term(const mpq_class& c, const Monomial& m) const;

  BaseDomain base_;
  VarTablePtr table_;
  TermMap terms_;
};

struct PseudoDivision {
  Polynomial quotient;
  Polynomial remainder;
  std::uint32_t power;  // lc(g)^power * f = quotient * g + remainder
};

}  // namespace acfqe

#endif  // ACFQE_POLYNOMIAL_HPP
