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

#include "acfqe/dnf.hpp"

#include <algorithm>

#include "acfqe/errors.hpp"

namespace acfqe {

CanonicalDNF::CanonicalDNF(BaseDomain base, VarTablePtr table)
    : base_(std::move(base)), table_(std::move(table)) {
  if (!table_) throw UsageError("CanonicalDNF requires a variable table");
}

CanonicalDNF CanonicalDNF::truth(const BaseDomain& base, const VarTablePtr& table) {
  CanonicalDNF out(base, table);
  out.add_piece(Polynomial::constant(base, table, 1), {});
  return out;
}

CanonicalDNF CanonicalDNF::falsity(const BaseDomain& base, const VarTablePtr& table) {
  return CanonicalDNF(base, table);
}

bool CanonicalDNF::is_true() const {
  return pieces_.size() == 1 && pieces_.front().open.is_one() && pieces_.front().closed.empty();
}

void CanonicalDNF::add_piece(Polynomial open, std::vector<Polynomial> closed,
                             const QeLimits& limits) {
  // Zero inequation: the piece is unsatisfiable.
  if (open.is_zero()) return;
  // A unit constant carries no constraint; other constants stay (their truth
  // depends on the characteristic, e.g. 2 != 0 over base Z).
  if (open.is_constant() && base_.is_unit(open.constant_value())) {
    open = Polynomial::constant(base_, table_, 1);
  }
  std::vector<Polynomial> kept;
  for (auto& a : closed) {
    if (a.is_zero()) continue;  // 0 = 0 is vacuous
    if (a.is_constant()) {
      if (base_.is_unit(a.constant_value())) return;  // unit = 0 never holds
      // non-unit integer constant: keep, satisfiable in dividing characteristic
    }
    if (a.total_degree() > limits.max_degree) {
      throw ResourceError("max-degree", "piece polynomial exceeds the degree cap");
    }
    kept.push_back(std::move(a));
  }
  if (open.total_degree() > limits.max_degree) {
    throw ResourceError("max-degree", "piece polynomial exceeds the degree cap");
  }
  std::sort(kept.begin(), kept.end(),
            [](const Polynomial& a, const Polynomial& b) { return Polynomial::compare(a, b) > 0; });
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  DnfPiece piece{std::move(open), std::move(kept)};
  for (const auto& existing : pieces_) {
    if (existing == piece) return;
    // Same closed set and existing.open | piece.open: the existing piece
    // contains this one.
    if (existing.closed == piece.closed && existing.open.divides(piece.open)) return;
  }
  // The new piece may in turn subsume earlier ones.
  pieces_.erase(std::remove_if(pieces_.begin(), pieces_.end(),
                               [&](const DnfPiece& existing) {
                                 return existing.closed == piece.closed &&
                                        piece.open.divides(existing.open);
                               }),
                pieces_.end());
  pieces_.push_back(std::move(piece));
  if (pieces_.size() > limits.max_pieces) {
    throw ResourceError("max-pieces", "piece count exceeds the cap");
  }
}

std::set<VarId> CanonicalDNF::variables() const {
  std::set<VarId> out;
  for (const auto& piece : pieces_) {
    for (VarId v : piece.open.variables()) out.insert(v);
    for (const auto& a : piece.closed) {
      for (VarId v : a.variables()) out.insert(v);
    }
  }
  return out;
}

Formula CanonicalDNF::to_formula() const {
  std::vector<Formula> disjuncts;
  for (const auto& piece : pieces_) {
    std::vector<Formula> parts;
    if (!piece.open.is_one()) parts.push_back(Formula::negation(Formula::atom(piece.open)));
    for (const auto& a : piece.closed) parts.push_back(Formula::atom(a));
    disjuncts.push_back(Formula::conjunction(std::move(parts)));
  }
  return Formula::disjunction(std::move(disjuncts));
}

namespace {

/// Recursive expansion over an NNF formula whose negations sit on atoms.
CanonicalDNF expand(const Formula& f, const BaseDomain& base, const VarTablePtr& table,
                    const QeLimits& limits) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return CanonicalDNF::truth(base, table);
    case Formula::Kind::False:
      return CanonicalDNF::falsity(base, table);
    case Formula::Kind::Atom: {
      CanonicalDNF out(base, table);
      out.add_piece(Polynomial::constant(base, table, 1), {f.atom_poly()}, limits);
      return out;
    }
    case Formula::Kind::Not: {
      const Formula& inner = f.children().front();
      if (inner.kind() != Formula::Kind::Atom) {
        throw UsageError("to_canonical_dnf: input not in negation normal form");
      }
      CanonicalDNF out(base, table);
      out.add_piece(inner.atom_poly(), {}, limits);
      return out;
    }
    case Formula::Kind::Or: {
      CanonicalDNF out(base, table);
      for (const auto& k : f.children()) {
        CanonicalDNF part = expand(k, base, table, limits);
        for (const auto& piece : part.pieces()) out.add_piece(piece.open, piece.closed, limits);
      }
      return out;
    }
    case Formula::Kind::And: {
      CanonicalDNF acc = CanonicalDNF::truth(base, table);
      for (const auto& k : f.children()) {
        CanonicalDNF part = expand(k, base, table, limits);
        CanonicalDNF next(base, table);
        for (const auto& a : acc.pieces()) {
          for (const auto& b : part.pieces()) {
            std::vector<Polynomial> closed = a.closed;
            closed.insert(closed.end(), b.closed.begin(), b.closed.end());
            next.add_piece(a.open * b.open, std::move(closed), limits);
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      throw UsageError("to_canonical_dnf: formula has quantifiers");
  }
  throw UsageError("corrupt formula node");
}

}  // namespace

CanonicalDNF to_canonical_dnf(const Formula& f, const BaseDomain& base, const VarTablePtr& table,
                              const QeLimits& limits) {
  if (!f.is_quantifier_free()) throw UsageError("to_canonical_dnf: formula has quantifiers");
  return expand(to_nnf(f), base, table, limits);
}

}  // namespace acfqe
