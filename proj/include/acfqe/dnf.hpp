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

#ifndef ACFQE_DNF_HPP
#define ACFQE_DNF_HPP

#include <cstddef>
#include <vector>

#include "acfqe/formula.hpp"

namespace acfqe {

/// Caps on normal-form growth. DNF expansion is worst-case exponential by
/// nature; hitting a cap raises ResourceError naming it rather than looping.
struct QeLimits {
  std::size_t max_pieces = 10000;
  std::uint32_t max_degree = 256;
};

/// One disjunct (open != 0) /\ (closed_1 = 0) /\ ... /\ (closed_k = 0).
/// open == 1 encodes "no inequation".
struct DnfPiece {
  Polynomial open;
  std::vector<Polynomial> closed;

  bool operator==(const DnfPiece& rhs) const {
    return open == rhs.open && closed == rhs.closed;
  }
};

/// Finite union of pieces D(b) /\ V(a_1, ..., a_k): the canonical
/// quantifier-free form. No pieces denotes False; the single piece (1, [])
/// denotes True. Within a piece the closed list is sorted and duplicate-free;
/// the piece list is duplicate-free in insertion order, with a piece dropped
/// when another piece has the identical closed set and an open slot dividing
/// its open slot.
class CanonicalDNF {
 public:
  CanonicalDNF(BaseDomain base, VarTablePtr table);

  static CanonicalDNF truth(const BaseDomain& base, const VarTablePtr& table);
  static CanonicalDNF falsity(const BaseDomain& base, const VarTablePtr& table);

  const BaseDomain& base() const { return base_; }
  const VarTablePtr& table() const { return table_; }
  const std::vector<DnfPiece>& pieces() const { return pieces_; }

  bool is_false() const { return pieces_.empty(); }
  bool is_true() const;

  /// Normalize and insert one piece; a piece that is syntactically
  /// unsatisfiable (zero open slot, or a unit constant in the closed list)
  /// is dropped.
  void add_piece(Polynomial open, std::vector<Polynomial> closed,
                 const QeLimits& limits = QeLimits{});

  /// All variables occurring in any piece polynomial.
  std::set<VarId> variables() const;

  Formula to_formula() const;

  bool operator==(const CanonicalDNF& rhs) const {
    return base_ == rhs.base_ && pieces_ == rhs.pieces_;
  }

 private:
  BaseDomain base_;
  VarTablePtr table_;
  std::vector<DnfPiece> pieces_;
};

/// Expand a quantifier-free formula into CanonicalDNF. Conjoined inequations
/// merge by the integral-domain rule (b != 0 and c != 0 iff b*c != 0).
/// UsageError on quantifiers; ResourceError on cap overflow.
CanonicalDNF to_canonical_dnf(const Formula& f, const BaseDomain& base, const VarTablePtr& table,
                              const QeLimits& limits = QeLimits{});

}  // namespace acfqe

#endif  // ACFQE_DNF_HPP
