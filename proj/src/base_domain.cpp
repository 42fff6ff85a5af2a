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

#include "acfqe/base_domain.hpp"

#include "acfqe/errors.hpp"

namespace acfqe {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

BaseDomain BaseDomain::prime_field(std::uint64_t p) {
  if (!is_prime(p)) {
    throw UsageError("prime field characteristic must be prime, got " + std::to_string(p));
  }
  return BaseDomain(Kind::PrimeField, p);
}

mpq_class BaseDomain::reduce(const mpq_class& value) const {
  switch (kind_) {
    case Kind::Integers:
      if (value.get_den() != 1) {
        throw UsageError("non-integer coefficient over base Z: " + value.get_str());
      }
      return value;
    case Kind::Rationals:
      return value;  // mpq_class keeps reduced form with positive denominator
    case Kind::PrimeField: {
      if (value.get_den() != 1) {
        throw UsageError("non-integer coefficient over prime field: " + value.get_str());
      }
      mpz_class r;
      mpz_class p(static_cast<unsigned long>(p_));
      mpz_fdiv_r(r.get_mpz_t(), value.get_num().get_mpz_t(), p.get_mpz_t());
      return mpq_class(r);
    }
  }
  throw UsageError("corrupt BaseDomain");
}

bool BaseDomain::is_unit(const mpq_class& value) const {
  if (value == 0) return false;
  switch (kind_) {
    case Kind::Integers:
      return value == 1 || value == -1;
    case Kind::Rationals:
    case Kind::PrimeField:
      return true;  // nonzero, and reduction already yielded the canonical rep
  }
  return false;
}

std::string BaseDomain::describe() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "F_" + std::to_string(p_);
  }
  return "?";
}

}  // namespace acfqe
