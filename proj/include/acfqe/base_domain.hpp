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

#ifndef ACFQE_BASE_DOMAIN_HPP
#define ACFQE_BASE_DOMAIN_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace acfqe {

bool is_prime(std::uint64_t n);

/// The computable coefficient domain a polynomial ring is built over:
/// the integers, the rationals, or a prime field F_p.
///
/// Coefficients are carried as mpq_class everywhere; the domain decides the
/// canonical representative (integers keep denominator 1, prime-field values
/// live in [0, p)). Rationals are kept reduced with positive denominator,
/// which mpq_class canonicalization already guarantees.
class BaseDomain {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static BaseDomain integers() { return BaseDomain(Kind::Integers, 0); }
  static BaseDomain rationals() { return BaseDomain(Kind::Rationals, 0); }
  static BaseDomain prime_field(std::uint64_t p);

  Kind kind() const { return kind_; }
  /// Characteristic: p for PrimeField, 0 otherwise.
  std::uint64_t characteristic() const { return p_; }

  /// Canonical representative of a coefficient in this domain.
  mpq_class reduce(const mpq_class& value) const;

  /// True when the constant is a unit of the domain: +-1 over Z, any nonzero
  /// value over Q or F_p. A unit constant is nonzero in every model, whatever
  /// the characteristic; other integer constants stay symbolic.
  bool is_unit(const mpq_class& value) const;

  std::string describe() const;

  bool operator==(const BaseDomain& other) const {
    return kind_ == other.kind_ && p_ == other.p_;
  }
  bool operator!=(const BaseDomain& other) const { return !(*this == other); }

 private:
  BaseDomain(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

}  // namespace acfqe

#endif  // ACFQE_BASE_DOMAIN_HPP
