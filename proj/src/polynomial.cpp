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

#include "acfqe/polynomial.hpp"

#include <algorithm>
#include <optional>

#include "acfqe/errors.hpp"

namespace acfqe {

std::uint32_t monomial_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

namespace {

Monomial trim(Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(std::move(out));
}

bool monomial_divisible(const Monomial& num, const Monomial& den) {
  if (den.size() > num.size()) return false;
  for (std::size_t i = 0; i < den.size(); ++i) {
    if (den[i] > num[i]) return false;
  }
  return true;
}

Monomial monomial_quotient(const Monomial& num, const Monomial& den) {
  Monomial out = num;
  for (std::size_t i = 0; i < den.size(); ++i) out[i] -= den[i];
  return trim(std::move(out));
}

/// Coefficient division in the domain; nullopt when the quotient leaves it.
std::optional<mpq_class> coeff_div(const BaseDomain& base, const mpq_class& a, const mpq_class& b) {
  switch (base.kind()) {
    case BaseDomain::Kind::Integers: {
      mpq_class q = a / b;
      if (q.get_den() != 1) return std::nullopt;
      return q;
    }
    case BaseDomain::Kind::Rationals:
      return mpq_class(a / b);
    case BaseDomain::Kind::PrimeField: {
      mpz_class p(static_cast<unsigned long>(base.characteristic()));
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), b.get_num().get_mpz_t(), p.get_mpz_t()) == 0) {
        return std::nullopt;
      }
      return base.reduce(mpq_class(a.get_num() * inv));
    }
  }
  return std::nullopt;
}

}  // namespace

bool MonomialOrderDesc::operator()(const Monomial& a, const Monomial& b) const {
  const std::uint32_t da = monomial_degree(a);
  const std::uint32_t db = monomial_degree(b);
  if (da != db) return da > db;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t ea = i < a.size() ? a[i] : 0;
    const std::uint32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

Polynomial Polynomial::zero(const BaseDomain& base, VarTablePtr table) {
  return Polynomial(base, std::move(table));
}

Polynomial Polynomial::constant(const BaseDomain& base, VarTablePtr table, const mpq_class& value) {
  Polynomial out(base, std::move(table));
  out.insert_term({}, value);
  return out;
}

Polynomial Polynomial::variable(const BaseDomain& base, VarTablePtr table, VarId var) {
  if (!table || var >= table->size()) throw UsageError("variable id outside table");
  Polynomial out(base, std::move(table));
  Monomial m(var + 1, 0);
  m[var] = 1;
  out.insert_term(std::move(m), 1);
  return out;
}

Polynomial Polynomial::term(const BaseDomain& base, VarTablePtr table, const mpq_class& coeff,
                            const Monomial& exponents) {
  if (table && exponents.size() > table->size()) throw UsageError("exponent vector outside table");
  Polynomial out(base, std::move(table));
  out.insert_term(trim(exponents), coeff);
  return out;
}

void Polynomial::insert_term(Monomial m, const mpq_class& c) {
  mpq_class r = base_.reduce(c);
  if (r == 0) return;
  m = trim(std::move(m));
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(r));
  } else {
    it->second = base_.reduce(it->second + r);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.base_ != b.base_) {
    throw UsageError("polynomial operands over different base domains (" + a.base_.describe() +
                     " vs " + b.base_.describe() + ")");
  }
  if (!VarTable::prefix_compatible(a.table_, b.table_)) {
    throw UsageError("polynomial operands over unrelated variable tables");
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

mpq_class Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw UsageError("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : monomial_degree(terms_.begin()->first);
}

std::uint32_t Polynomial::degree(VarId var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) {
    if (var < m.size()) d = std::max(d, m[var]);
  }
  return d;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) out.insert(static_cast<VarId>(i));
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(base_, table_);
  for (const auto& [m, c] : terms_) out.insert_term(m, -c);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  require_compatible(*this, rhs);
  Polynomial out(base_, VarTable::longer(table_, rhs.table_));
  out.terms_ = terms_;
  for (const auto& [m, c] : rhs.terms_) out.insert_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  require_compatible(*this, rhs);
  Polynomial out(base_, VarTable::longer(table_, rhs.table_));
  out.terms_ = terms_;
  for (const auto& [m, c] : rhs.terms_) out.insert_term(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_compatible(*this, rhs);
  Polynomial out(base_, VarTable::longer(table_, rhs.table_));
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      out.insert_term(monomial_mul(ma, mb), ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial acc = constant(base_, table_, 1);
  Polynomial sq = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * sq;
    e >>= 1u;
    if (e > 0) sq = sq * sq;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return base_ == rhs.base_ && terms_ == rhs.terms_;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  MonomialOrderDesc before;
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return before(ia->first, ib->first) ? 1 : -1;
    const int c = cmp(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

std::vector<Polynomial> Polynomial::as_univariate(VarId x) const {
  if (!table_ || x >= table_->size()) throw UsageError("as_univariate: unknown variable");
  const std::uint32_t d = degree(x);
  std::vector<Polynomial> out(d + 1, zero(base_, table_));
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = x < m.size() ? m[x] : 0;
    Monomial rest = m;
    if (x < rest.size()) rest[x] = 0;
    out[e].insert_term(trim(std::move(rest)), c);
  }
  return out;
}

Polynomial Polynomial::leading_coefficient(VarId x) const {
  return coefficient_of(x, degree(x));
}

Polynomial Polynomial::coefficient_of(VarId x, std::uint32_t k) const {
  if (!table_ || x >= table_->size()) throw UsageError("coefficient_of: unknown variable");
  Polynomial out = zero(base_, table_);
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = x < m.size() ? m[x] : 0;
    if (e != k) continue;
    Monomial rest = m;
    if (x < rest.size()) rest[x] = 0;
    out.insert_term(trim(std::move(rest)), c);
  }
  return out;
}

Polynomial Polynomial::rename(const std::map<VarId, VarId>& to) const {
  Polynomial out(base_, table_);
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      VarId target = static_cast<VarId>(i);
      auto it = to.find(target);
      if (it != to.end()) target = it->second;
      if (!table_ || target >= table_->size()) throw UsageError("rename target outside table");
      if (nm.size() <= target) nm.resize(target + 1, 0);
      nm[target] += m[i];
    }
    out.insert_term(std::move(nm), c);
  }
  return out;
}

Polynomial Polynomial::with_table(VarTablePtr table) const {
  if (!VarTable::prefix_compatible(table_, table) || table->size() < table_->size()) {
    throw UsageError("with_table: not an extension of the current table");
  }
  Polynomial out(base_, std::move(table));
  out.terms_ = terms_;
  return out;
}

bool Polynomial::divides(const Polynomial& other) const {
  return divide_exact(other).has_value();
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& other) const {
  require_compatible(*this, other);
  if (is_zero()) {
    if (other.is_zero()) return other;
    return std::nullopt;
  }
  Polynomial quotient = zero(base_, VarTable::longer(table_, other.table()));
  Polynomial r = other;
  while (!r.is_zero()) {
    const auto& [mr, cr] = *r.terms_.begin();
    const auto& [md, cd] = *terms_.begin();
    if (!monomial_divisible(mr, md)) return std::nullopt;
    auto q = coeff_div(base_, cr, cd);
    if (!q) return std::nullopt;
    const Monomial qm = monomial_quotient(mr, md);
    r = r - times_term(*q, qm);
    quotient.insert_term(qm, *q);
  }
  return quotient;
}

Polynomial Polynomial::times_term(const mpq_class& c, const Monomial& m) const {
  Polynomial out(base_, table_);
  for (const auto& [tm, tc] : terms_) out.insert_term(monomial_mul(tm, m), tc * c);
  return out;
}

std::string Polynomial::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body;
    if (a != 1 || m.empty()) body = a.get_str();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += table_->name(static_cast<VarId>(i));
      if (m[i] > 1) body += "^" + std::to_string(m[i]);
    }
    out += body;
  }
  return out;
}

PseudoDivision Polynomial::pseudo_divide(const Polynomial& f, const Polynomial& g,
                                                     VarId x) {
  require_compatible(f, g);
  const std::uint32_t dg = g.degree(x);
  if (dg == 0) throw UsageError("pseudo_divide: divisor has degree 0 in the chosen variable");
  const VarTablePtr table = VarTable::longer(f.table(), g.table());
  const std::uint32_t df = f.degree(x);
  const std::uint32_t delta = df >= dg ? df - dg + 1 : 0;
  const Polynomial lc = g.leading_coefficient(x);

  Polynomial r = f;
  Polynomial q = zero(f.base(), table);
  std::uint32_t steps = 0;
  while (!r.is_zero() && r.degree(x) >= dg) {
    const std::uint32_t dr = r.degree(x);
    Polynomial t = r.leading_coefficient(x);
    Monomial shift(x + 1, 0);
    shift[x] = dr - dg;
    t = t.times_term(1, shift);
    r = lc * r - t * g;
    q = lc * q + t;
    ++steps;
  }
  // Degree can drop by more than one per step; pad so the identity uses
  // exactly lc^delta.
  if (steps < delta) {
    const Polynomial pad = lc.pow(delta - steps);
    r = pad * r;
    q = pad * q;
  }
  return PseudoDivision{std::move(q), std::move(r), delta};
}

Polynomial Polynomial::pseudo_remainder(const Polynomial& f, const Polynomial& g, VarId x) {
  return pseudo_divide(f, g, x).remainder;
}

}  // namespace acfqe
