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

#include "acfqe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "acfqe/errors.hpp"

namespace acfqe {

std::string Point::render(const VarTablePtr& table) const {
  std::string out = field->tag() + ":";
  bool first = true;
  for (const auto& [var, value] : assignment) {
    out += first ? " " : ", ";
    first = false;
    out += table->name(var) + " = " + value.render();
  }
  if (first) out += " (no parameters)";
  return out;
}

void OracleConfig::validate() const {
  if (primes.empty()) throw UsageError("oracle config: no primes");
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw UsageError("oracle config: " + std::to_string(p) + " is not prime");
  }
  if (base_ext < 1 || witness_cap < 1 || sample_cap < 1) {
    throw UsageError("oracle config: caps must be >= 1");
  }
}

bool eval_qf_at_point(const Formula& f, const Point& pt) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      return evaluate(f.atom_poly(), pt.assignment, pt.field).is_zero();
    case Formula::Kind::Not:
      return !eval_qf_at_point(f.children().front(), pt);
    case Formula::Kind::And:
      return std::all_of(f.children().begin(), f.children().end(),
                         [&](const Formula& k) { return eval_qf_at_point(k, pt); });
    case Formula::Kind::Or:
      return std::any_of(f.children().begin(), f.children().end(),
                         [&](const Formula& k) { return eval_qf_at_point(k, pt); });
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      throw UsageError("eval_qf_at_point: formula has quantifiers");
  }
  throw UsageError("corrupt formula node");
}

namespace {

// ---------------------------------------------------------------------------
// Specialized matrix representation: once the point's parameter values are
// substituted, each atom is a sparse polynomial in the quantified variables
// with field coefficients, cheap to specialize one variable at a time.

struct FPoly {
  // monomials over quantifier slots (slot i = i-th prefix variable)
  std::map<Monomial, FieldElem, MonomialOrderDesc> terms;

  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }
  bool constant_is_zero() const { return terms.empty(); }
};

struct Skeleton {
  enum class K { True, False, Atom, Not, And, Or };
  K kind = K::True;
  std::size_t atom = 0;
  std::vector<Skeleton> kids;
};

Skeleton build_skeleton(const Formula& f, std::vector<Polynomial>& atom_polys) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return {Skeleton::K::True, 0, {}};
    case Formula::Kind::False:
      return {Skeleton::K::False, 0, {}};
    case Formula::Kind::Atom: {
      atom_polys.push_back(f.atom_poly());
      return {Skeleton::K::Atom, atom_polys.size() - 1, {}};
    }
    case Formula::Kind::Not: {
      Skeleton s{Skeleton::K::Not, 0, {}};
      s.kids.push_back(build_skeleton(f.children().front(), atom_polys));
      return s;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      Skeleton s{f.kind() == Formula::Kind::And ? Skeleton::K::And : Skeleton::K::Or, 0, {}};
      for (const auto& k : f.children()) s.kids.push_back(build_skeleton(k, atom_polys));
      return s;
    }
    default:
      throw UsageError("brute_decide: quantifier inside the matrix");
  }
}

bool eval_skeleton(const Skeleton& s, const std::vector<bool>& atom_truth) {
  switch (s.kind) {
    case Skeleton::K::True:
      return true;
    case Skeleton::K::False:
      return false;
    case Skeleton::K::Atom:
      return atom_truth[s.atom];
    case Skeleton::K::Not:
      return !eval_skeleton(s.kids.front(), atom_truth);
    case Skeleton::K::And:
      return std::all_of(s.kids.begin(), s.kids.end(),
                         [&](const Skeleton& k) { return eval_skeleton(k, atom_truth); });
    case Skeleton::K::Or:
      return std::any_of(s.kids.begin(), s.kids.end(),
                         [&](const Skeleton& k) { return eval_skeleton(k, atom_truth); });
  }
  throw UsageError("corrupt skeleton");
}

FPoly specialize_at_point(const Polynomial& poly, const Point& pt,
                          const std::map<VarId, std::size_t>& slot_of) {
  FPoly out;
  for (const auto& [mono, coeff] : poly.terms()) {
    FieldElem value = map_coefficient(poly.base(), coeff, pt.field);
    Monomial slots;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      const VarId var = static_cast<VarId>(i);
      auto slot = slot_of.find(var);
      if (slot != slot_of.end()) {
        if (slots.size() <= slot->second) slots.resize(slot->second + 1, 0);
        slots[slot->second] += mono[i];
      } else {
        auto assigned = pt.assignment.find(var);
        if (assigned == pt.assignment.end()) {
          throw UsageError("brute_decide: no value for variable '" + poly.table()->name(var) +
                           "'");
        }
        value = value * assigned->second.pow(mono[i]);
      }
    }
    while (!slots.empty() && slots.back() == 0) slots.pop_back();
    auto it = out.terms.find(slots);
    if (it == out.terms.end()) {
      if (!value.is_zero()) out.terms.emplace(std::move(slots), std::move(value));
    } else {
      it->second = it->second + value;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

FPoly embed_fpoly(const FPoly& poly, const FieldDescPtr& target) {
  FPoly out;
  for (const auto& [mono, coeff] : poly.terms) out.terms.emplace(mono, embed(coeff, target));
  return out;
}

FPoly substitute_slot(const FPoly& poly, std::size_t slot, const FieldElem& value) {
  FPoly out;
  for (const auto& [mono, coeff] : poly.terms) {
    FieldElem c = coeff;
    Monomial rest = mono;
    if (slot < rest.size() && rest[slot] > 0) {
      c = c * value.pow(rest[slot]);
      rest[slot] = 0;
      while (!rest.empty() && rest.back() == 0) rest.pop_back();
    }
    if (c.is_zero()) continue;
    auto it = out.terms.find(rest);
    if (it == out.terms.end()) {
      out.terms.emplace(std::move(rest), std::move(c));
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

constexpr std::uint64_t kBoundSaturation = 1ull << 32;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kBoundSaturation / b) return kBoundSaturation;
  return a * b;
}

struct SearchPlan {
  std::vector<Formula::Kind> quants;  // Exists / Forall per level
  std::vector<std::size_t> slots;     // monomial slot per level
  std::vector<std::uint64_t> mu;      // relative extension range per level
  Skeleton skeleton;
  std::vector<FPoly> atoms;           // specialized at the point
  std::uint64_t p = 0;
  std::uint32_t witness_cap = 0;
  std::uint64_t budget = 0;
  std::uint64_t evals = 0;
};

bool search(SearchPlan& plan, std::size_t level, const std::vector<FPoly>& atoms,
            const FieldDescPtr& field) {
  if (level == plan.quants.size()) {
    if (++plan.evals > plan.budget) {
      throw ResourceError("enumeration", "witness search exceeded its evaluation budget");
    }
    std::vector<bool> truth(atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (!atoms[i].is_constant()) throw UsageError("witness search left a variable unassigned");
      truth[i] = atoms[i].constant_is_zero();
    }
    return eval_skeleton(plan.skeleton, truth);
  }

  const bool existential = plan.quants[level] == Formula::Kind::Exists;
  for (std::uint64_t e = 1; e <= plan.mu[level]; ++e) {
    const std::uint64_t degree = static_cast<std::uint64_t>(field->k) * e;
    FieldDescPtr target = ff_extension(plan.p, static_cast<std::uint32_t>(degree),
                                       std::max<std::uint32_t>(plan.witness_cap, field->k));
    std::vector<FPoly> lifted;
    lifted.reserve(atoms.size());
    for (const auto& a : atoms) lifted.push_back(e == 1 ? a : embed_fpoly(a, target));
    const std::uint64_t count = target->size();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const FieldElem value = FieldElem::from_index(target, idx);
      std::vector<FPoly> next;
      next.reserve(lifted.size());
      for (const auto& a : lifted) next.push_back(substitute_slot(a, plan.slots[level], value));
      const bool verdict = search(plan, level + 1, next, target);
      if (existential && verdict) return true;
      if (!existential && !verdict) return false;
    }
  }
  return !existential;
}

}  // namespace

Truth brute_decide(const Formula& f, const Point& pt, const OracleConfig& cfg) {
  cfg.validate();
  if (!pt.field) throw UsageError("brute_decide: point without a field");

  // Peel the quantifier prefix; prenex lazily if quantifiers hide deeper.
  Formula work = f;
  std::vector<std::pair<Formula::Kind, VarId>> prefix;
  for (;;) {
    prefix.clear();
    Formula matrix = work;
    while (matrix.kind() == Formula::Kind::Exists || matrix.kind() == Formula::Kind::Forall) {
      prefix.emplace_back(matrix.kind(), matrix.bound_var());
      matrix = matrix.body();
    }
    if (matrix.is_quantifier_free()) {
      work = matrix;
      break;
    }
    VarTablePtr table = f.table();
    if (!table) throw UsageError("brute_decide: cannot prenex a formula without atoms");
    work = to_prenex(f, table).formula;
  }
  const Formula& matrix = work;

  std::vector<Polynomial> atom_polys;
  Skeleton skeleton = build_skeleton(matrix, atom_polys);

  // Variables that never occur decide nothing; drop their quantifiers.
  std::vector<std::pair<Formula::Kind, VarId>> active;
  for (const auto& [kind, var] : prefix) {
    std::uint32_t d = 0;
    for (const auto& p : atom_polys) d = std::max(d, p.degree(var));
    if (d > 0) active.emplace_back(kind, var);
  }

  if (active.empty()) {
    std::vector<bool> truth(atom_polys.size());
    for (std::size_t i = 0; i < atom_polys.size(); ++i) {
      truth[i] = evaluate(atom_polys[i], pt.assignment, pt.field).is_zero();
    }
    return eval_skeleton(skeleton, truth) ? Truth::True : Truth::False;
  }

  const std::size_t n = active.size();
  std::vector<std::uint64_t> atom_degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : atom_polys) {
      atom_degree[i] = std::max<std::uint64_t>(atom_degree[i], p.degree(active[i].second));
    }
  }

  // Degree bound per level: own atom degree times 2*d for each inner
  // variable (eliminating an inner variable can at worst square-and-double
  // degrees, resultant-style).
  std::vector<std::uint64_t> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t b = atom_degree[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      b = saturating_mul(b, std::max<std::uint64_t>(2 * atom_degree[j], 1));
    }
    bound[i] = b;
  }

  const std::uint64_t p = pt.field->p;
  const std::uint32_t m = pt.field->k;
  std::vector<std::uint64_t> mu(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    // smallest e with p^{m e} > bound: a field that large has a nonroot of
    // any nonzero polynomial of degree <= bound
    std::uint64_t e = 1;
    long double sz = std::pow(static_cast<long double>(p), static_cast<long double>(m));
    while (sz <= static_cast<long double>(bound[i]) && e < 64) {
      ++e;
      sz *= std::pow(static_cast<long double>(p), static_cast<long double>(m));
    }
    mu[i] = std::max<std::uint64_t>(bound[i], e);
  }

  // Worst-case tower degree against the witness cap.
  std::uint64_t tower = m;
  for (std::size_t i = 0; i < n; ++i) tower = saturating_mul(tower, mu[i]);
  if (tower > cfg.witness_cap) return Truth::Inconclusive;

  // Projected enumeration size (max-branch estimate) against the budget.
  const std::uint64_t budget = saturating_mul(cfg.sample_cap, kEnumerationMultiplier);
  long double estimate = 1.0L;
  std::uint64_t branch_degree = m;
  for (std::size_t i = 0; i < n; ++i) {
    long double level_size = 0.0L;
    for (std::uint64_t e = 1; e <= mu[i]; ++e) {
      level_size += std::pow(static_cast<long double>(p),
                             static_cast<long double>(branch_degree * e));
    }
    estimate *= level_size;
    branch_degree = saturating_mul(branch_degree, mu[i]);
    if (estimate > static_cast<long double>(budget)) {
      throw ResourceError("enumeration", "witness search would exceed its evaluation budget");
    }
  }

  SearchPlan plan;
  std::map<VarId, std::size_t> slot_of;
  for (std::size_t i = 0; i < n; ++i) {
    plan.quants.push_back(active[i].first);
    plan.slots.push_back(i);
    slot_of.emplace(active[i].second, i);
  }
  plan.mu = mu;
  plan.skeleton = std::move(skeleton);
  plan.p = p;
  plan.witness_cap = cfg.witness_cap;
  plan.budget = budget;

  std::vector<FPoly> atoms;
  atoms.reserve(atom_polys.size());
  for (const auto& poly : atom_polys) atoms.push_back(specialize_at_point(poly, pt, slot_of));

  return search(plan, 0, atoms, pt.field) ? Truth::True : Truth::False;
}

namespace {

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

}  // namespace

std::string Report::render(const VarTablePtr& table, std::size_t max_examples) const {
  std::string out = std::string("verdict: ") + verdict_name(verdict) + "\n";
  out += "points tested: " + std::to_string(points_tested) + "\n";
  out += "definite comparisons: " + std::to_string(definite_comparisons) + "\n";
  if (skipped_points > 0) out += "skipped points: " + std::to_string(skipped_points) + "\n";
  const std::size_t shown = std::min(max_examples, counterexamples.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& ce = counterexamples[i];
    out += "counterexample: " + ce.point.render(table) +
           ": lhs = " + (ce.lhs_truth ? "true" : "false") +
           ", rhs = " + (ce.rhs_truth ? "true" : "false") + "\n";
  }
  if (counterexamples.size() > shown) {
    out += "(and " + std::to_string(counterexamples.size() - shown) + " more counterexamples)\n";
  }
  return out;
}

Report equiv_check(const Formula& lhs, const Formula& rhs, const BaseDomain& base,
                   const VarTablePtr& table, const OracleConfig& cfg) {
  cfg.validate();
  if (!table) throw UsageError("equiv_check requires a variable table");

  PrenexResult left = to_prenex(lhs, table);
  PrenexResult right = to_prenex(rhs, left.table);
  const VarTablePtr& full = right.table;

  for (const Formula* f : {&left.formula, &right.formula}) {
    for (VarId v : f->free_variables()) {
      if (full->kind(v) != VarTable::Kind::Parameter) {
        throw UsageError("equiv_check: free non-parameter variable '" + full->name(v) + "'");
      }
    }
  }
  const std::vector<VarId> params = full->parameters();

  Report report;
  std::mt19937_64 rng(cfg.seed);

  for (std::uint64_t p : cfg.primes) {
    for (std::uint32_t m = 1; m <= cfg.base_ext; ++m) {
      FieldDescPtr field = ff_extension(p, m);
      const std::uint64_t fsize = field->size();
      long double total = std::pow(static_cast<long double>(fsize),
                                   static_cast<long double>(params.size()));
      const bool exhaustive = total <= static_cast<long double>(cfg.sample_cap);
      const std::uint64_t count =
          exhaustive ? static_cast<std::uint64_t>(total + 0.5L) : cfg.sample_cap;

      for (std::uint64_t i = 0; i < count; ++i) {
        Point pt{field, {}};
        if (exhaustive) {
          std::uint64_t rest = i;
          for (VarId v : params) {
            pt.assignment.emplace(v, FieldElem::from_index(field, rest % fsize));
            rest /= fsize;
          }
        } else {
          for (VarId v : params) {
            pt.assignment.emplace(v, FieldElem::from_index(field, uniform_index(rng, fsize)));
          }
        }
        ++report.points_tested;
        Truth a, b;
        try {
          a = brute_decide(left.formula, pt, cfg);
          b = brute_decide(right.formula, pt, cfg);
        } catch (const EvalError&) {
          ++report.skipped_points;
          continue;
        } catch (const ResourceError&) {
          continue;  // point stays indefinite; reported via the counters
        }
        if (a == Truth::Inconclusive || b == Truth::Inconclusive) continue;
        ++report.definite_comparisons;
        if (a != b) {
          report.counterexamples.push_back(
              Counterexample{std::move(pt), a == Truth::True, b == Truth::True});
        }
      }
    }
  }

  if (!report.counterexamples.empty()) {
    report.verdict = Verdict::Fail;
  } else if (report.definite_comparisons > 0) {
    report.verdict = Verdict::Pass;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

}  // namespace acfqe
