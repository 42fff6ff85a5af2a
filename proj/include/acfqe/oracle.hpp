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

#ifndef ACFQE_ORACLE_HPP
#define ACFQE_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "acfqe/finite_field.hpp"
#include "acfqe/formula.hpp"

namespace acfqe {

/// A parameter assignment into one finite field: the desk-scale stand-in for
/// a point with values in an algebraically closed field.
struct Point {
  FieldDescPtr field;
  std::map<VarId, FieldElem> assignment;

  std::string render(const VarTablePtr& table) const;
};

struct OracleConfig {
  std::vector<std::uint64_t> primes{2, 3, 5};
  /// Points are drawn from F_{p^m} for m = 1..base_ext.
  std::uint32_t base_ext = 2;
  /// Maximum total extension degree (over F_p) for quantifier search.
  std::uint32_t witness_cap = 8;
  /// Per-field point budget for equiv_check (exhaustive up to here, then
  /// seeded-random sampling); also scales brute_decide's enumeration budget.
  std::uint64_t sample_cap = 10000;
  std::uint64_t seed = 0;

  void validate() const;
};

/// brute_decide may enumerate at most sample_cap * this many candidate
/// assignments before giving up with a resource error.
inline constexpr std::uint64_t kEnumerationMultiplier = 16;

enum class Truth { True, False, Inconclusive };

/// Truth of a quantifier-free formula at a point: atoms by evaluation in the
/// field, connectives by truth tables. UsageError when the point misses a
/// free variable; EvalError on denominator collisions.
bool eval_qf_at_point(const Formula& f, const Point& pt);

/// Truth of a prenex formula at a point, by exhaustive witness search over
/// the extension tower of the point's field F_q:
///
///   - a quantified variable with per-variable atom degree d gets the bound
///     B = d * prod over inner variables of max(2 d_inner, 1), a
///     resultant-style cap on the degrees elimination can reach in it;
///   - the variable ranges over every extension of relative degree
///     e = 1..mu with mu = max(B, smallest e with q^e > B); roots live
///     within relative degree B, and any field with more than B elements
///     has a point avoiding a nonzero degree-<=B polynomial;
///   - when the worst-case tower m * prod mu exceeds witness_cap the verdict
///     is Inconclusive rather than a guess.
///
/// Within the cap the search is exhaustive, so definite answers are sound in
/// both directions; a found witness is sound regardless.
/// Throws ResourceError("enumeration") when the projected search exceeds
/// sample_cap * kEnumerationMultiplier assignments.
Truth brute_decide(const Formula& f, const Point& pt, const OracleConfig& cfg);

struct Counterexample {
  Point point;
  bool lhs_truth;
  bool rhs_truth;
};

enum class Verdict { Pass, Fail, Inconclusive };

struct Report {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Counterexample> counterexamples;
  std::uint64_t points_tested = 0;
  std::uint64_t definite_comparisons = 0;
  /// Points skipped because a coefficient did not map into the field.
  std::uint64_t skipped_points = 0;

  /// Deterministic multi-line text; at most `max_examples` counterexamples.
  std::string render(const VarTablePtr& table, std::size_t max_examples = 10) const;
};

/// Sampled equivalence of two formulas over every declared parameter: for
/// each prime and each extension degree up to base_ext, enumerate points
/// (exhaustively up to sample_cap, then seeded-random), compare brute_decide
/// verdicts, and report disagreements as counterexamples. Verdict Pass needs
/// at least one definite comparison and no disagreement. With a fixed seed
/// the report is byte-identical across runs.
Report equiv_check(const Formula& lhs, const Formula& rhs, const BaseDomain& base,
                   const VarTablePtr& table, const OracleConfig& cfg);

}  // namespace acfqe

#endif  // ACFQE_ORACLE_HPP
