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

#ifndef ACFQE_CHEVALLEY_HPP
#define ACFQE_CHEVALLEY_HPP

#include <string_view>

#include "acfqe/qe.hpp"

namespace acfqe {

/// A finitely presented algebra R[gens]/(rels) over R = base[params].
/// The base ring is always a free polynomial ring (quotient coefficient
/// rings are rejected at construction by this very shape).
class Presentation {
 public:
  /// `table` must list the params (Parameter kind) and gens (Variable kind);
  /// every relation may use only declared names.
  Presentation(BaseDomain base, VarTablePtr table, std::vector<VarId> params,
               std::vector<VarId> gens, std::vector<Polynomial> rels);

  /// Line-oriented text form:
  ///   base z | q | fp <prime>
  ///   params <idents...>
  ///   gens <idents...>
  ///   rel <poly>            (repeatable)
  /// '#' starts a comment; blank lines are skipped; base defaults to z.
  static Presentation parse(std::string_view text);

  const BaseDomain& base() const { return base_; }
  const VarTablePtr& table() const { return table_; }
  const std::vector<VarId>& params() const { return params_; }
  const std::vector<VarId>& gens() const { return gens_; }
  const std::vector<Polynomial>& rels() const { return rels_; }

 private:
  BaseDomain base_;
  VarTablePtr table_;
  std::vector<VarId> params_;
  std::vector<VarId> gens_;
  std::vector<Polynomial> rels_;
};

/// The existential sentence asserting a parameter point lifts along
/// Spec(R[gens]/(rels)) -> Spec(R): exists gens, every relation vanishes.
/// Shape: Exists(t_1, ... Exists(t_n, And_j Atom(f_j)) ...).
Formula image_formula(const Presentation& p);

/// Finite union of pieces D(b) cap V(a_1..a_k) in the parameters only.
class ConstructibleSet {
 public:
  ConstructibleSet(CanonicalDNF dnf, std::vector<VarId> params);

  const CanonicalDNF& dnf() const { return dnf_; }
  const std::vector<VarId>& params() const { return params_; }
  Formula to_formula() const { return dnf_.to_formula(); }

  bool operator==(const ConstructibleSet& rhs) const { return dnf_ == rhs.dnf_; }

 private:
  CanonicalDNF dnf_;
  std::vector<VarId> params_;
};

/// The image of Spec(R[gens]/(rels)) -> Spec(R) as a constructible set:
/// quantifier elimination applied to the image formula. Resource errors from
/// the eliminator propagate.
ConstructibleSet chevalley_image(const Presentation& p, const QeLimits& limits = QeLimits{});

/// Syntactic boolean algebra on constructible sets over one parameter ring;
/// no semantic emptiness detection is attempted. UsageError when the
/// operands' rings differ.
ConstructibleSet constructible_union(const ConstructibleSet& a, const ConstructibleSet& b);
ConstructibleSet constructible_intersect(const ConstructibleSet& a, const ConstructibleSet& b);
ConstructibleSet constructible_complement(const ConstructibleSet& a);

}  // namespace acfqe

#endif  // ACFQE_CHEVALLEY_HPP
