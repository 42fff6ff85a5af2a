#ifndef ACFQE_TESTS_TEST_SUPPORT_HPP
#define ACFQE_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "acfqe/parser.hpp"
#include "acfqe/polynomial.hpp"

namespace acfqe::testing {

inline VarTablePtr make_table(const std::vector<std::string>& params,
                              const std::vector<std::string>& vars = {}) {
  std::vector<VarTable::Entry> entries;
  for (const auto& n : params) entries.push_back({n, VarTable::Kind::Parameter});
  for (const auto& n : vars) entries.push_back({n, VarTable::Kind::Variable});
  return VarTable::create(std::move(entries));
}

/// Random sparse polynomial with per-variable degree <= max_deg and small
/// integer coefficients (rational ones over base Q when `rational_coeffs`).
inline Polynomial random_poly(std::mt19937_64& rng, const BaseDomain& base,
                              const VarTablePtr& table, std::uint32_t max_deg,
                              std::uint32_t max_terms, bool rational_coeffs = false) {
  Polynomial out = Polynomial::zero(base, table);
  const std::uint32_t nterms = 1 + rng() % max_terms;
  for (std::uint32_t t = 0; t < nterms; ++t) {
    Monomial m(table->size(), 0);
    for (std::size_t v = 0; v < table->size(); ++v) {
      m[v] = static_cast<std::uint32_t>(rng() % (max_deg + 1));
    }
    const long num = static_cast<long>(rng() % 9) - 4;
    mpq_class c(num);
    if (rational_coeffs && base.kind() == BaseDomain::Kind::Rationals) {
      c = mpq_class(num, 1 + static_cast<long>(rng() % 3));
      c.canonicalize();
    }
    out = out + Polynomial::term(base, table, c, m);
  }
  return out;
}

inline Polynomial poly_of(const std::string& text, const VarTablePtr& table,
                          const BaseDomain& base) {
  return parse_polynomial(text, table, base);
}

/// Random polynomial drawing only from the given variables.
inline Polynomial random_poly_in(std::mt19937_64& rng, const BaseDomain& base,
                                 const VarTablePtr& table, const std::vector<VarId>& vars,
                                 std::uint32_t max_deg, std::uint32_t max_terms) {
  Polynomial out = Polynomial::zero(base, table);
  const std::uint32_t nterms = 1 + rng() % max_terms;
  for (std::uint32_t t = 0; t < nterms; ++t) {
    Monomial m(table->size(), 0);
    for (VarId v : vars) m[v] = static_cast<std::uint32_t>(rng() % (max_deg + 1));
    const long num = static_cast<long>(rng() % 9) - 4;
    out = out + Polynomial::term(base, table, num, m);
  }
  return out;
}

/// Random quantifier-free formula over the given variables.
inline Formula random_qf(std::mt19937_64& rng, const BaseDomain& base, const VarTablePtr& table,
                         const std::vector<VarId>& vars, std::uint32_t max_deg,
                         std::uint32_t atoms_left, std::uint32_t depth) {
  if (depth == 0 || atoms_left <= 1) {
    Formula atom = Formula::atom(random_poly_in(rng, base, table, vars, max_deg, 3));
    return rng() % 3 == 0 ? Formula::negation(std::move(atom)) : atom;
  }
  switch (rng() % 4) {
    case 0: {
      Formula atom = Formula::atom(random_poly_in(rng, base, table, vars, max_deg, 3));
      return rng() % 3 == 0 ? Formula::negation(std::move(atom)) : atom;
    }
    case 1:
      return Formula::negation(
          random_qf(rng, base, table, vars, max_deg, atoms_left, depth - 1));
    case 2:
      return Formula::conjunction({
          random_qf(rng, base, table, vars, max_deg, atoms_left / 2, depth - 1),
          random_qf(rng, base, table, vars, max_deg, atoms_left - atoms_left / 2, depth - 1),
      });
    default:
      return Formula::disjunction({
          random_qf(rng, base, table, vars, max_deg, atoms_left / 2, depth - 1),
          random_qf(rng, base, table, vars, max_deg, atoms_left - atoms_left / 2, depth - 1),
      });
  }
}

/// Random prenex formula: a quantifier prefix over the quantified variables
/// actually drawn, then a random matrix over params plus those variables.
inline Formula random_prenex(std::mt19937_64& rng, const BaseDomain& base,
                             const VarTablePtr& table, const std::vector<VarId>& params,
                             const std::vector<VarId>& qvars, std::uint32_t max_deg,
                             std::uint32_t max_atoms) {
  const std::size_t nq = rng() % (qvars.size() + 1);
  std::vector<VarId> scope = params;
  std::vector<std::pair<bool, VarId>> prefix;  // (is_exists, var)
  for (std::size_t i = 0; i < nq; ++i) {
    prefix.emplace_back(rng() % 2 == 0, qvars[i]);
    scope.push_back(qvars[i]);
  }
  Formula f = random_qf(rng, base, table, scope, max_deg, max_atoms, 3);
  for (std::size_t i = prefix.size(); i-- > 0;) {
    f = prefix[i].first ? Formula::exists(prefix[i].second, std::move(f), table)
                        : Formula::forall(prefix[i].second, std::move(f), table);
  }
  return f;
}

/// Random formula with arbitrarily nested quantifiers, scope-respecting (so
/// the rendered text re-parses). Pool variables are quantified at most once
/// per branch.
inline Formula random_nested(std::mt19937_64& rng, const BaseDomain& base,
                             const VarTablePtr& table, const std::vector<VarId>& params,
                             std::vector<VarId> pool, std::vector<VarId> scope,
                             std::uint32_t depth) {
  std::vector<VarId> usable = params;
  usable.insert(usable.end(), scope.begin(), scope.end());
  if (depth == 0) {
    if (usable.empty()) return rng() % 2 == 0 ? Formula::truth() : Formula::falsity();
    Formula atom = Formula::atom(random_poly_in(rng, base, table, usable, 2, 2));
    return rng() % 3 == 0 ? Formula::negation(std::move(atom)) : atom;
  }
  const std::uint32_t roll = rng() % 10;
  if (roll < 3 && !usable.empty()) {
    Formula atom = Formula::atom(random_poly_in(rng, base, table, usable, 2, 2));
    return rng() % 3 == 0 ? Formula::negation(std::move(atom)) : atom;
  }
  if (roll < 4) {
    return Formula::negation(
        random_nested(rng, base, table, params, pool, scope, depth - 1));
  }
  if (roll < 6) {
    return Formula::conjunction({random_nested(rng, base, table, params, pool, scope, depth - 1),
                                 random_nested(rng, base, table, params, pool, scope, depth - 1)});
  }
  if (roll < 8) {
    return Formula::disjunction({random_nested(rng, base, table, params, pool, scope, depth - 1),
                                 random_nested(rng, base, table, params, pool, scope, depth - 1)});
  }
  if (pool.empty()) {
    return random_nested(rng, base, table, params, pool, scope, depth - 1);
  }
  const std::size_t pick = rng() % pool.size();
  const VarId var = pool[pick];
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  scope.push_back(var);
  Formula body = random_nested(rng, base, table, params, pool, scope, depth - 1);
  return rng() % 2 == 0 ? Formula::exists(var, std::move(body), table)
                        : Formula::forall(var, std::move(body), table);
}

}  // namespace acfqe::testing

#endif  // ACFQE_TESTS_TEST_SUPPORT_HPP
