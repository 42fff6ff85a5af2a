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

#ifndef ACFQE_FINITE_FIELD_HPP
#define ACFQE_FINITE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "acfqe/polynomial.hpp"

namespace acfqe {

/// Description of F_{p^k} as F_p[x]/(modulus). The modulus is the first
/// monic irreducible of degree k when candidates x^k + c_{k-1} x^{k-1} +
/// ... + c_0 are ordered by the tuple (c_{k-1}, ..., c_0); construction is
/// fully deterministic. For k = 1 the modulus is x.
struct FieldDesc {
  std::uint64_t p = 0;
  std::uint32_t k = 0;
  std::vector<std::uint32_t> modulus;  // little-endian, size k+1, monic

  /// p^k; throws ResourceError if it does not fit in 64 bits.
  std::uint64_t size() const;
  std::string describe() const;  // "F_4 = F_2[x]/(x^2 + x + 1)"
  std::string tag() const;       // "F_2^2" style short name
};

using FieldDescPtr = std::shared_ptr<const FieldDesc>;

inline constexpr std::uint32_t kDefaultExtensionCap = 16;

/// Deterministic construction of F_{p^k}; results are cached so equal
/// parameters yield pointer-identical descriptors. Verifies irreducibility
/// of the chosen modulus by gcd with x^{p^d} - x for d = 1..k/2 and the
/// identity x^{p^k} = x.
FieldDescPtr ff_extension(std::uint64_t p, std::uint32_t k,
                          std::uint32_t max_k = kDefaultExtensionCap);

/// Element of F_{p^k}: residue of a univariate polynomial of degree < k.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldDescPtr field, std::vector<std::uint32_t> rep);

  static FieldElem zero(const FieldDescPtr& field);
  static FieldElem one(const FieldDescPtr& field);
  /// Scalar c mod p embedded as a constant.
  static FieldElem from_integer(const FieldDescPtr& field, const mpz_class& c);
  /// The element whose coefficients are the base-p digits of index (the
  /// canonical enumeration: indices 0 .. p^k - 1).
  static FieldElem from_index(const FieldDescPtr& field, std::uint64_t index);
  std::uint64_t index() const;

  const FieldDescPtr& field() const { return field_; }
  bool is_zero() const;

  FieldElem operator+(const FieldElem& rhs) const;
  FieldElem operator-(const FieldElem& rhs) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& rhs) const;
  FieldElem inverse() const;
  FieldElem pow(const mpz_class& e) const;

  bool operator==(const FieldElem& rhs) const;
  bool operator!=(const FieldElem& rhs) const { return !(*this == rhs); }

  /// Deterministic text form, polynomial in the generator "g".
  std::string render() const;

 private:
  static void require_same_field(const FieldElem& a, const FieldElem& b);

  FieldDescPtr field_;
  std::vector<std::uint32_t> rep_;  // little-endian, size k, reduced mod modulus
};

/// Field embedding F_{p^d} -> F_{p^k} for d | k, sending the source
/// generator to the first root (in enumeration order) of the source modulus
/// in the target field. Deterministic; identity when fields coincide.
FieldElem embed(const FieldElem& value, const FieldDescPtr& target);

/// All elements of the field in canonical enumeration order.
std::vector<FieldElem> enumerate_field(const FieldDescPtr& field);

/// Ring-homomorphism evaluation of a polynomial: every variable occurring in
/// f must be assigned; coefficients map via the base domain (integers reduce
/// mod p; rationals need an invertible denominator; a prime-field base must
/// match the characteristic).
FieldElem evaluate(const Polynomial& f, const std::map<VarId, FieldElem>& assignment,
                   const FieldDescPtr& field);

/// Coefficient image in the field; EvalError on denominator collisions,
/// UsageError on characteristic mismatch.
FieldElem map_coefficient(const BaseDomain& base, const mpq_class& c, const FieldDescPtr& field);

}  // namespace acfqe

#endif  // ACFQE_FINITE_FIELD_HPP
