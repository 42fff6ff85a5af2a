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

#include "acfqe/finite_field.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "acfqe/errors.hpp"

namespace acfqe {

namespace {

using FpPoly = std::vector<std::uint32_t>;  // little-endian coefficients mod p

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p); p prime, a != 0 mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw EvalError("element not invertible mod " + std::to_string(p));
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = static_cast<std::uint32_t>((out[i] + b[i]) % p);
  fp_trim(out);
  return out;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] = static_cast<std::uint32_t>((out[i] + p - b[i]) % p);
  }
  fp_trim(out);
  return out;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  FpPoly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
  fp_trim(out);
  return out;
}

/// Remainder of a mod m; m monic.
FpPoly fp_rem(FpPoly a, const FpPoly& m, std::uint64_t p) {
  fp_trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        const std::uint64_t sub = lead * m[i] % p;
        a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
      }
    }
    a.pop_back();
    fp_trim(a);
    if (a.size() <= dm) break;
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
  return fp_rem(fp_mul(a, b, p), m, p);
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint64_t p) {
  FpPoly acc{1};
  base = fp_rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1u) acc = fp_mulmod(acc, base, m, p);
    e >>= 1u;
    if (e > 0) base = fp_mulmod(base, base, m, p);
  }
  return acc;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    // make b monic so fp_rem applies
    const std::uint64_t inv = mod_inverse(b.back(), p);
    FpPoly bm(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      bm[i] = static_cast<std::uint32_t>(b[i] * inv % p);
    }
    a = fp_rem(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

/// x^{p^d} mod m via d successive Frobenius powers.
FpPoly frobenius_power_of_x(std::uint32_t d, const FpPoly& m, std::uint64_t p) {
  FpPoly y{0, 1};  // x
  for (std::uint32_t i = 0; i < d; ++i) y = fp_powmod(std::move(y), p, m, p);
  return y;
}

bool is_irreducible(const FpPoly& f, std::uint64_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  if (k == 1) return true;
  // A reducible f of degree k has an irreducible factor of degree d <= k/2,
  // hence a common factor with x^{p^d} - x.
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    FpPoly g = fp_sub(frobenius_power_of_x(d, f, p), FpPoly{0, 1}, p);
    FpPoly common = fp_gcd(f, std::move(g), p);
    if (common.size() > 1) return false;
  }
  // Sanity: every degree-k irreducible divides x^{p^k} - x.
  FpPoly frob = fp_sub(frobenius_power_of_x(k, f, p), FpPoly{0, 1}, p);
  return frob.empty();
}

struct FieldKey {
  std::uint64_t p;
  std::uint32_t k;
  bool operator<(const FieldKey& o) const { return std::tie(p, k) < std::tie(o.p, o.k); }
};

std::mutex g_field_mutex;
std::map<FieldKey, FieldDescPtr> g_field_cache;
std::map<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>
    g_embed_root_cache;

}  // namespace

std::uint64_t FieldDesc::size() const {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (n > UINT64_MAX / p) throw ResourceError("field-size", "field size exceeds 64 bits");
    n *= p;
  }
  return n;
}

std::string FieldDesc::tag() const {
  return k == 1 ? "F_" + std::to_string(p) : "F_" + std::to_string(p) + "^" + std::to_string(k);
}

std::string FieldDesc::describe() const {
  std::string mod;
  for (std::size_t i = modulus.size(); i-- > 0;) {
    if (modulus[i] == 0) continue;
    if (!mod.empty()) mod += " + ";
    if (i == 0) {
      mod += std::to_string(modulus[i]);
    } else {
      if (modulus[i] != 1) mod += std::to_string(modulus[i]) + "*";
      mod += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return tag() + " = F_" + std::to_string(p) + "[x]/(" + mod + ")";
}

FieldDescPtr ff_extension(std::uint64_t p, std::uint32_t k, std::uint32_t max_k) {
  if (!is_prime(p)) throw UsageError("field characteristic must be prime, got " + std::to_string(p));
  if (p >= (1ull << 31)) throw UsageError("prime too large");
  if (k < 1) throw UsageError("extension degree must be >= 1");
  if (k > max_k) {
    throw ResourceError("extension-cap", "extension degree " + std::to_string(k) +
                                             " exceeds cap " + std::to_string(max_k));
  }

  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto it = g_field_cache.find(FieldKey{p, k});
  if (it != g_field_cache.end()) return it->second;

  // Scan monic candidates x^k + c_{k-1} x^{k-1} + ... + c_0; the counter's
  // base-p digits supply (c_0, ..., c_{k-1}) with c_{k-1} most significant.
  FpPoly modulus;
  for (std::uint64_t n = 0;; ++n) {
    FpPoly f(k + 1, 0);
    f[k] = 1;
    std::uint64_t rest = n;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (rest != 0) throw UsageError("no irreducible modulus found");  // unreachable: they exist
    if (is_irreducible(f, p)) {
      modulus = std::move(f);
      break;
    }
  }

  auto desc = std::make_shared<FieldDesc>();
  desc->p = p;
  desc->k = k;
  desc->modulus = std::move(modulus);
  g_field_cache.emplace(FieldKey{p, k}, desc);
  return desc;
}

FieldElem::FieldElem(FieldDescPtr field, std::vector<std::uint32_t> rep)
    : field_(std::move(field)), rep_(std::move(rep)) {
  if (!field_) throw UsageError("FieldElem without field");
  rep_ = fp_rem(std::move(rep_), field_->modulus, field_->p);
  rep_.resize(field_->k, 0);
}

FieldElem FieldElem::zero(const FieldDescPtr& field) {
  return FieldElem(field, {});
}

FieldElem FieldElem::one(const FieldDescPtr& field) {
  return FieldElem(field, {1});
}

FieldElem FieldElem::from_integer(const FieldDescPtr& field, const mpz_class& c) {
  mpz_class r, p(static_cast<unsigned long>(field->p));
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  return FieldElem(field, {static_cast<std::uint32_t>(r.get_ui())});
}

FieldElem FieldElem::from_index(const FieldDescPtr& field, std::uint64_t index) {
  std::vector<std::uint32_t> rep(field->k, 0);
  for (std::uint32_t i = 0; i < field->k; ++i) {
    rep[i] = static_cast<std::uint32_t>(index % field->p);
    index /= field->p;
  }
  if (index != 0) throw UsageError("element index out of range");
  return FieldElem(field, std::move(rep));
}

std::uint64_t FieldElem::index() const {
  std::uint64_t out = 0;
  for (std::size_t i = rep_.size(); i-- > 0;) out = out * field_->p + rep_[i];
  return out;
}

bool FieldElem::is_zero() const {
  return std::all_of(rep_.begin(), rep_.end(), [](std::uint32_t c) { return c == 0; });
}

void FieldElem::require_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field_ != b.field_) throw UsageError("field elements from different fields");
}

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
  require_same_field(*this, rhs);
  return FieldElem(field_, fp_add(rep_, rhs.rep_, field_->p));
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const {
  require_same_field(*this, rhs);
  return FieldElem(field_, fp_sub(rep_, rhs.rep_, field_->p));
}

FieldElem FieldElem::operator-() const {
  return FieldElem(field_, fp_sub({}, rep_, field_->p));
}

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
  require_same_field(*this, rhs);
  return FieldElem(field_, fp_mulmod(rep_, rhs.rep_, field_->modulus, field_->p));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw EvalError("inverse of zero in " + field_->tag());
  // extended Euclid over F_p[x] on (rep, modulus)
  const std::uint64_t p = field_->p;
  FpPoly r0 = field_->modulus, r1 = rep_;
  fp_trim(r1);
  FpPoly s0{}, s1{1};
  while (!r1.empty()) {
    // divide r0 by r1: make r1 monic, track quotient
    const std::uint64_t inv = mod_inverse(r1.back(), p);
    FpPoly r1m(r1.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
      r1m[i] = static_cast<std::uint32_t>(r1[i] * inv % p);
    }
    // long division r0 = q * r1m + rem
    FpPoly rem = r0;
    FpPoly q;
    fp_trim(rem);
    if (rem.size() >= r1m.size()) {
      q.assign(rem.size() - r1m.size() + 1, 0);
      while (rem.size() >= r1m.size() && !rem.empty()) {
        const std::uint64_t lead = rem.back();
        const std::size_t shift = rem.size() - r1m.size();
        q[shift] = static_cast<std::uint32_t>(lead);
        for (std::size_t i = 0; i < r1m.size(); ++i) {
          const std::uint64_t sub = lead * r1m[i] % p;
          rem[i + shift] = static_cast<std::uint32_t>((rem[i + shift] + p - sub) % p);
        }
        fp_trim(rem);
      }
    }
    // q was computed against the monic r1m; scale back: r0 = (q*inv^{-1})... the
    // quotient against r1 is q * inv, since r1 = r1m / inv.
    FpPoly q_scaled(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      q_scaled[i] = static_cast<std::uint32_t>(q[i] * inv % p);
    }
    FpPoly s2 = fp_sub(s0, fp_mul(q_scaled, s1, p), p);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = std::move(s2);
  }
  // r0 = gcd (a nonzero constant since modulus is irreducible)
  if (r0.size() != 1) throw EvalError("inverse failed: gcd not constant");
  const std::uint64_t scale = mod_inverse(r0[0], p);
  FpPoly out(s0.size());
  for (std::size_t i = 0; i < s0.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(s0[i] * scale % p);
  }
  return FieldElem(field_, std::move(out));
}

FieldElem FieldElem::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem acc = one(field_);
  FieldElem sq = *this;
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = acc * sq;
    n >>= 1;
    if (n > 0) sq = sq * sq;
  }
  return acc;
}

bool FieldElem::operator==(const FieldElem& rhs) const {
  return field_ == rhs.field_ && rep_ == rhs.rep_;
}

std::string FieldElem::render() const {
  std::string out;
  for (std::size_t i = rep_.size(); i-- > 0;) {
    if (rep_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(rep_[i]);
    } else {
      if (rep_[i] != 1) out += std::to_string(rep_[i]) + "*";
      out += i == 1 ? "g" : "g^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

FieldElem embed(const FieldElem& value, const FieldDescPtr& target) {
  const FieldDescPtr& source = value.field();
  if (source == target) return value;
  if (source->p != target->p || source->k == 0 || target->k % source->k != 0) {
    throw UsageError("no embedding " + source->tag() + " -> " + target->tag());
  }
  std::vector<std::uint32_t> root_rep;
  {
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto key = std::make_tuple(source->p, source->k, target->k);
    auto it = g_embed_root_cache.find(key);
    if (it != g_embed_root_cache.end()) root_rep = it->second;
  }
  if (root_rep.empty()) {
    // First root of the source modulus in the target field, in enumeration
    // order; exists because the subfield of size p^d is unique.
    const std::uint64_t n = target->size();
    bool found = false;
    for (std::uint64_t i = 0; i < n; ++i) {
      FieldElem candidate = FieldElem::from_index(target, i);
      FieldElem acc = FieldElem::zero(target);
      for (std::size_t j = source->modulus.size(); j-- > 0;) {
        acc = acc * candidate + FieldElem::from_integer(target, source->modulus[j]);
      }
      if (acc.is_zero()) {
        root_rep.resize(target->k, 0);
        std::uint64_t idx = i;
        for (std::uint32_t j = 0; j < target->k; ++j) {
          root_rep[j] = static_cast<std::uint32_t>(idx % target->p);
          idx /= target->p;
        }
        found = true;
        break;
      }
    }
    if (!found) throw UsageError("embedding root not found (corrupt modulus?)");
    std::lock_guard<std::mutex> lock(g_field_mutex);
    g_embed_root_cache.emplace(std::make_tuple(source->p, source->k, target->k), root_rep);
  }
  const FieldElem root(target, root_rep);
  // Horner over the source coefficients: sum rep[i] * g^i maps to
  // sum rep[i] * root^i.
  std::vector<std::uint32_t> digits(source->k, 0);
  std::uint64_t idx = value.index();
  for (std::uint32_t i = 0; i < source->k; ++i) {
    digits[i] = static_cast<std::uint32_t>(idx % source->p);
    idx /= source->p;
  }
  FieldElem acc = FieldElem::zero(target);
  for (std::size_t i = digits.size(); i-- > 0;) {
    acc = acc * root + FieldElem::from_integer(target, digits[i]);
  }
  return acc;
}

std::vector<FieldElem> enumerate_field(const FieldDescPtr& field) {
  const std::uint64_t n = field->size();
  std::vector<FieldElem> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(FieldElem::from_index(field, i));
  return out;
}

FieldElem map_coefficient(const BaseDomain& base, const mpq_class& c, const FieldDescPtr& field) {
  switch (base.kind()) {
    case BaseDomain::Kind::Integers:
      return FieldElem::from_integer(field, c.get_num());
    case BaseDomain::Kind::Rationals: {
      FieldElem den = FieldElem::from_integer(field, c.get_den());
      if (den.is_zero()) {
        throw EvalError("denominator " + c.get_den().get_str() + " vanishes in " + field->tag());
      }
      return FieldElem::from_integer(field, c.get_num()) * den.inverse();
    }
    case BaseDomain::Kind::PrimeField:
      if (base.characteristic() != field->p) {
        throw UsageError("base " + base.describe() + " does not map into " + field->tag());
      }
      return FieldElem::from_integer(field, c.get_num());
  }
  throw UsageError("corrupt BaseDomain");
}

FieldElem evaluate(const Polynomial& f, const std::map<VarId, FieldElem>& assignment,
                   const FieldDescPtr& field) {
  for (VarId v : f.variables()) {
    if (assignment.find(v) == assignment.end()) {
      throw UsageError("evaluate: no value for variable '" + f.table()->name(v) + "'");
    }
  }
  FieldElem acc = FieldElem::zero(field);
  for (const auto& [m, c] : f.terms()) {
    FieldElem term = map_coefficient(f.base(), c, field);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      const FieldElem& v = assignment.at(static_cast<VarId>(i));
      if (v.field() != field) throw UsageError("evaluate: assignment in a different field");
      term = term * v.pow(m[i]);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace acfqe
