#include "acfqe/finite_field.hpp"

#include <random>
#include <set>

#include "acfqe/errors.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace acfqe;
using acfqe::testing::make_table;

TEST_CASE("prime field and the first extensions use the documented moduli") {
  auto f5 = ff_extension(5, 1);
  CHECK(f5->size() == 5);
  CHECK(f5->modulus == std::vector<std::uint32_t>{0, 1});  // modulus x

  auto f4 = ff_extension(2, 2);
  CHECK(f4->size() == 4);
  CHECK(f4->modulus == std::vector<std::uint32_t>{1, 1, 1});  // x^2 + x + 1

  auto f9 = ff_extension(3, 2);
  CHECK(f9->size() == 9);
  for (const auto& e : enumerate_field(f9)) {
    CHECK(e.pow(9) == e);
  }
  // deterministic: same parameters give the identical descriptor
  CHECK(ff_extension(3, 2) == f9);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(ff_extension(4, 1), UsageError);      // not prime
  CHECK_THROWS_AS(ff_extension(2, 0), UsageError);      // degree < 1
  CHECK_THROWS_AS(ff_extension(2, 20), ResourceError);  // beyond the cap
}

TEST_CASE("field algebra across the small tower") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      auto field = ff_extension(p, k);
      auto elems = enumerate_field(field);

      std::set<std::uint64_t> indices;
      for (const auto& e : elems) indices.insert(e.index());
      CHECK(indices.size() == field->size());  // p^k distinct elements

      mpz_class order = 1;
      for (std::uint32_t i = 0; i < k; ++i) order *= static_cast<unsigned long>(p);

      for (const auto& e : elems) {
        CHECK(e.pow(order) == e);  // e^{p^k} = e
        if (!e.is_zero()) {
          FieldElem inv = e.inverse();
          CHECK(e * inv == FieldElem::one(field));
          CHECK(inv * e == FieldElem::one(field));
        }
      }

      // Frobenius x -> x^p is a ring endomorphism.
      std::mt19937_64 rng(17);
      for (int i = 0; i < 40; ++i) {
        FieldElem a = FieldElem::from_index(field, rng() % field->size());
        FieldElem b = FieldElem::from_index(field, rng() % field->size());
        const mpz_class pe = static_cast<unsigned long>(p);
        CHECK((a + b).pow(pe) == a.pow(pe) + b.pow(pe));
        CHECK((a * b).pow(pe) == a.pow(pe) * b.pow(pe));
      }
    }
  }
}

TEST_CASE("evaluate on the documented examples") {
  const BaseDomain z = BaseDomain::integers();
  auto t = make_table({"x"});
  const VarId x = 0;

  auto f5 = ff_extension(5, 1);
  Polynomial poly = Polynomial::variable(z, t, x) * Polynomial::variable(z, t, x) +
                    Polynomial::constant(z, t, 1);
  CHECK(evaluate(poly, {{x, FieldElem::from_integer(f5, 2)}}, f5).is_zero());

  auto f7 = ff_extension(7, 1);
  CHECK(evaluate(Polynomial::constant(z, t, 7), {}, f7).is_zero());

  // alpha^2 + alpha + 1 = 0 in F_4, so alpha^2 + 1 = alpha
  auto f4 = ff_extension(2, 2);
  FieldElem alpha(f4, {0, 1});
  CHECK(evaluate(poly, {{x, alpha}}, f4) == alpha);
}

TEST_CASE("evaluate maps coefficients through the base domain") {
  auto t = make_table({"x"});
  auto f5 = ff_extension(5, 1);

  const BaseDomain q = BaseDomain::rationals();
  Polynomial half = Polynomial::constant(q, t, mpq_class(1, 2));
  CHECK(evaluate(half, {}, f5) == FieldElem::from_integer(f5, 3));  // 2^{-1} = 3 mod 5

  auto f2 = ff_extension(2, 1);
  CHECK_THROWS_AS(evaluate(half, {}, f2), EvalError);  // denominator vanishes

  const BaseDomain f3 = BaseDomain::prime_field(3);
  Polynomial c = Polynomial::constant(f3, t, 2);
  CHECK_THROWS_AS(evaluate(c, {}, f5), UsageError);  // characteristic mismatch

  const BaseDomain z = BaseDomain::integers();
  Polynomial vx = Polynomial::variable(z, t, 0);
  CHECK_THROWS_AS(evaluate(vx, {}, f5), UsageError);  // unassigned variable
}

TEST_CASE("evaluate is a ring homomorphism at random points") {
  const BaseDomain z = BaseDomain::integers();
  auto t = make_table({"x", "y"});
  std::mt19937_64 rng(23);
  for (std::uint64_t p : {2ull, 5ull}) {
    for (std::uint32_t k = 1; k <= 2; ++k) {
      auto field = ff_extension(p, k);
      for (int i = 0; i < 30; ++i) {
        Polynomial f = acfqe::testing::random_poly(rng, z, t, 3, 4);
        Polynomial g = acfqe::testing::random_poly(rng, z, t, 3, 4);
        Polynomial h = acfqe::testing::random_poly(rng, z, t, 3, 4);
        std::map<VarId, FieldElem> pt{
            {0, FieldElem::from_index(field, rng() % field->size())},
            {1, FieldElem::from_index(field, rng() % field->size())},
        };
        CHECK(evaluate(f * g + h, pt, field) ==
              evaluate(f, pt, field) * evaluate(g, pt, field) + evaluate(h, pt, field));
      }
    }
  }
}

TEST_CASE("embeddings preserve arithmetic and compose with enumeration") {
  auto f2 = ff_extension(2, 1);
  auto f4 = ff_extension(2, 2);
  auto f16 = ff_extension(2, 4);

  for (const auto& a : enumerate_field(f4)) {
    for (const auto& b : enumerate_field(f4)) {
      CHECK(embed(a, f16) + embed(b, f16) == embed(a + b, f16));
      CHECK(embed(a, f16) * embed(b, f16) == embed(a * b, f16));
    }
  }
  CHECK(embed(FieldElem::one(f2), f16) == FieldElem::one(f16));
  CHECK(embed(FieldElem::zero(f2), f16).is_zero());

  auto f8 = ff_extension(2, 3);
  CHECK_THROWS_AS(embed(FieldElem::one(f4), f8), UsageError);  // 2 does not divide 3

  // index round-trip
  for (const auto& e : enumerate_field(f8)) {
    CHECK(FieldElem::from_index(f8, e.index()) == e);
  }
}
