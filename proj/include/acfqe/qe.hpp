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

#ifndef ACFQE_QE_HPP
#define ACFQE_QE_HPP

#include "acfqe/dnf.hpp"
#include "acfqe/formula.hpp"

namespace acfqe {

/// One DNF piece read as a constraint system in a distinguished variable:
/// every eqs entry means "= 0", ineq means "!= 0" (1 when absent).
struct Conjunct {
  std::vector<Polynomial> eqs;
  Polynomial ineq;
};

/// Quantifier elimination for one existential over one conjunct: returns a
/// quantifier-free formula free of x that is equivalent to (exists x) c over
/// every algebraically closed field, under every assignment of the remaining
/// variables. Uses only ring operations on coefficients (pseudo-division,
/// never inversion), so the result is characteristic-neutral.
///
/// The recursion: x-free parts split off as side conjuncts; with no x-bearing
/// equation left, (exists x) ineq(x) != 0 becomes "some x-coefficient of ineq
/// is nonzero". Otherwise pick the equation a of minimal positive x-degree d
/// with leading coefficient c_d and branch on it:
///   A: c_d = 0, with a's leading term removed;
///   B: c_d != 0; other equations reduce to pseudo-remainders by a; alone,
///      a root of a avoiding ineq exists iff prem(ineq^d, a, x) != 0, since
///      under c_d != 0, a | ineq^d exactly when every root of a kills ineq.
/// The measure (sum of x-degrees of eqs, x-degree of ineq) drops
/// lexicographically in every recursive call.
Formula eliminate_one(VarId x, const Conjunct& c);

struct QeResult {
  CanonicalDNF dnf;
  /// Table extended by prenex renaming; polynomials in `dnf` use it.
  VarTablePtr table;

  Formula formula() const { return dnf.to_formula(); }
};

/// Full quantifier elimination: prenex, then eliminate innermost-out. A
/// universal block is handled as the negation of an existential one. Each
/// existential step expands the matrix to CanonicalDNF, distributes the
/// quantifier over the disjunction and runs eliminate_one per piece. The
/// result has no quantifiers and free variables within the input's.
/// Throws ResourceError (naming the cap) when limits are exceeded.
QeResult eliminate_all(const Formula& f, const BaseDomain& base, VarTablePtr table,
                       const QeLimits& limits = QeLimits{});

}  // namespace acfqe

#endif  // ACFQE_QE_HPP
