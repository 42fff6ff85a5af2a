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

#include "acfqe/qe.hpp"

#include <algorithm>

#include "acfqe/errors.hpp"

namespace acfqe {

namespace {

/// Disjunction "some x-coefficient of p is nonzero"; False when p = 0.
Formula some_coefficient_nonzero(const Polynomial& p, VarId x) {
  std::vector<Formula> parts;
  if (!p.is_zero()) {
    for (const auto& coeff : p.as_univariate(x)) {
      parts.push_back(Formula::negation(Formula::atom(coeff)));
    }
  }
  return Formula::disjunction(std::move(parts));
}

/// Divide out factors of the branch pivot. Everything emitted under the
/// hypothesis c_d != 0 keeps its pointwise truth when scaled by powers of
/// c_d, so the lc^delta growth of pseudo-division can be cancelled again.
Polynomial strip_pivot_factor(Polynomial p, const Polynomial& pivot) {
  if (pivot.is_constant() && pivot.base().is_unit(pivot.constant_value())) return p;
  for (int guard = 0; guard < 256 && !p.is_zero(); ++guard) {
    auto quotient = pivot.divide_exact(p);
    if (!quotient) break;
    p = std::move(*quotient);
  }
  return p;
}

}  // namespace

Formula eliminate_one(VarId x, const Conjunct& c) {
  const BaseDomain& base = c.ineq.base();
  const VarTablePtr& table = c.ineq.table();

  // (0) x-free equations and an x-free inequation constrain only the other
  // variables; split them off and recurse on the x-bearing core.
  std::vector<Formula> side;
  std::vector<Polynomial> xeqs;
  for (const auto& e : c.eqs) {
    if (e.degree(x) > 0) {
      xeqs.push_back(e);
    } else {
      side.push_back(Formula::atom(e));
    }
  }
  Polynomial ineq = c.ineq;
  if (ineq.degree(x) == 0) {
    if (!ineq.is_one()) side.push_back(Formula::negation(Formula::atom(ineq)));
    ineq = Polynomial::constant(base, table, 1);
  }

  Formula core;
  if (xeqs.empty()) {
    // (1) No equation mentions x: over an infinite field a nonzero
    // polynomial has a nonroot, so only "ineq is not the zero polynomial
    // in x" remains.
    core = ineq.is_one() ? Formula::truth() : some_coefficient_nonzero(ineq, x);
  } else {
    // (2) Pick the equation of minimal positive x-degree, earliest in
    // canonical order on ties.
    std::size_t pick = 0;
    for (std::size_t i = 1; i < xeqs.size(); ++i) {
      const std::uint32_t di = xeqs[i].degree(x);
      const std::uint32_t dp = xeqs[pick].degree(x);
      if (di < dp || (di == dp && Polynomial::compare(xeqs[i], xeqs[pick]) < 0)) pick = i;
    }
    const Polynomial a = xeqs[pick];
    const std::uint32_t d = a.degree(x);
    const Polynomial cd = a.leading_coefficient(x);

    // Branch A: the leading coefficient vanishes, so a loses its top term.
    Monomial xd(x + 1, 0);
    xd[x] = d;
    std::vector<Polynomial> lowered = xeqs;
    lowered[pick] = a - cd * Polynomial::term(base, table, 1, xd);
    Formula branch_a = Formula::conjunction(
        {Formula::atom(cd), eliminate_one(x, Conjunct{std::move(lowered), ineq})});

    // Branch B: the leading coefficient is a unit, so a has degree exactly d.
    Formula inner;
    if (xeqs.size() > 1) {
      std::vector<Polynomial> reduced;
      reduced.push_back(a);
      for (std::size_t i = 0; i < xeqs.size(); ++i) {
        if (i == pick) continue;
        reduced.push_back(strip_pivot_factor(Polynomial::pseudo_remainder(xeqs[i], a, x), cd));
      }
      inner = eliminate_one(x, Conjunct{std::move(reduced), ineq});
    } else if (ineq.degree(x) == 0) {
      // a is the only constraint; over an algebraically closed field a
      // degree-d >= 1 polynomial has a root.
      inner = Formula::negation(Formula::atom(ineq));
    } else {
      // On roots of a (with c_d != 0) the inequation agrees with its
      // pseudo-remainder by a, so reduce before raising to the d-th power;
      // a | reduced^d exactly when every root of a kills the inequation.
      Polynomial reduced =
          strip_pivot_factor(Polynomial::pseudo_remainder(ineq, a, x), cd);
      Polynomial witness =
          strip_pivot_factor(Polynomial::pseudo_remainder(reduced.pow(d), a, x), cd);
      inner = some_coefficient_nonzero(witness, x);
    }
    Formula branch_b =
        Formula::conjunction({Formula::negation(Formula::atom(cd)), std::move(inner)});

    core = Formula::disjunction({std::move(branch_a), std::move(branch_b)});
  }

  side.push_back(std::move(core));
  return Formula::conjunction(std::move(side));
}

QeResult eliminate_all(const Formula& f, const BaseDomain& base, VarTablePtr table,
                       const QeLimits& limits) {
  PrenexResult prenex = to_prenex(f, std::move(table));
  table = prenex.table;

  std::vector<std::pair<Formula::Kind, VarId>> prefix;
  Formula current = prenex.formula;
  while (current.kind() == Formula::Kind::Exists || current.kind() == Formula::Kind::Forall) {
    prefix.emplace_back(current.kind(), current.bound_var());
    current = current.body();
  }

  for (std::size_t i = prefix.size(); i-- > 0;) {
    const auto& [kind, var] = prefix[i];
    const bool universal = kind == Formula::Kind::Forall;
    Formula target = universal ? Formula::negation(current) : current;
    CanonicalDNF dnf = to_canonical_dnf(target, base, table, limits);
    std::vector<Formula> eliminated;
    for (const auto& piece : dnf.pieces()) {
      eliminated.push_back(eliminate_one(var, Conjunct{piece.closed, piece.open}));
    }
    Formula step = Formula::disjunction(std::move(eliminated));
    current = universal ? Formula::negation(std::move(step)) : std::move(step);
  }

  return QeResult{to_canonical_dnf(current, base, table, limits), table};
}

}  // namespace acfqe
