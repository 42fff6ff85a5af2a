#include "acfqe/dnf.hpp"

#include <algorithm>
#include <random>

#include "acfqe/errors.hpp"
#include "acfqe/oracle.hpp"
#include "acfqe/parser.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace acfqe;
using acfqe::testing::make_table;

namespace {

const BaseDomain kZ = BaseDomain::integers();

CanonicalDNF dnf_of(const std::string& text, const VarTablePtr& t, const BaseDomain& base = kZ) {
  auto [f, table] = parse_formula(text, t, base);
  return to_canonical_dnf(f, base, table);
}

/// Truth of a quantifier-free formula at every point of F_p^{params}.
std::vector<bool> truth_table(const Formula& f, const VarTablePtr& table, std::uint64_t p) {
  auto field = ff_extension(p, 1);
  const std::vector<VarId> params = table->parameters();
  std::vector<bool> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < params.size(); ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Point pt{field, {}};
    std::uint64_t rest = idx;
    for (VarId v : params) {
      pt.assignment.emplace(v, FieldElem::from_index(field, rest % p));
      rest /= p;
    }
    out.push_back(eval_qf_at_point(f, pt));
  }
  return out;
}

}  // namespace

TEST_CASE("documented pieces") {
  auto t = make_table({"a", "b"});
  Polynomial a = Polynomial::variable(kZ, t, 0);
  Polynomial b = Polynomial::variable(kZ, t, 1);
  Polynomial one = Polynomial::constant(kZ, t, 1);

  CanonicalDNF d1 = dnf_of("a != 0", t);
  REQUIRE(d1.pieces().size() == 1);
  CHECK(d1.pieces()[0].open == a);
  CHECK(d1.pieces()[0].closed.empty());

  // conjoined inequations merge by the integral-domain rule
  CanonicalDNF d2 = dnf_of("a != 0 & b != 0", t);
  REQUIRE(d2.pieces().size() == 1);
  CHECK(d2.pieces()[0].open == a * b);
  CHECK(d2.pieces()[0].closed.empty());

  CanonicalDNF d3 = dnf_of("!(a != 0 & b = 0)", t);
  REQUIRE(d3.pieces().size() == 2);
  CHECK(d3.pieces()[0].open == one);
  CHECK(d3.pieces()[0].closed == std::vector<Polynomial>{a});
  CHECK(d3.pieces()[1].open == b);
  CHECK(d3.pieces()[1].closed.empty());
}

TEST_CASE("truth-table equivalence of the negation example") {
  auto t = make_table({"a", "b"});
  auto [f, table] = parse_formula("!(a != 0 & b = 0)", t, kZ);
  Formula g = to_canonical_dnf(f, kZ, table).to_formula();
  for (std::uint64_t p : {2ull, 3ull}) {
    CHECK(truth_table(f, table, p) == truth_table(g, table, p));
  }
}

TEST_CASE("truth and falsity encodings") {
  auto t = make_table({"a"});
  CHECK(dnf_of("0 = 0", t).is_true());
  CHECK(dnf_of("0 != 0", t).is_false());
  // 0 in the open slot collapses the piece; (a != 0 & 0 != 0) has open a*0 = 0
  CHECK(dnf_of("a != 0 & 0 != 0", t).pieces().empty());
  CHECK(CanonicalDNF::truth(kZ, t).pieces().size() == 1);
  CHECK(CanonicalDNF::falsity(kZ, t).pieces().empty());
}

TEST_CASE("integer constants stay symbolic, units and field constants fold") {
  auto t = make_table({"a"});
  CanonicalDNF d = dnf_of("2 != 0", t);
  REQUIRE(d.pieces().size() == 1);
  CHECK(d.pieces()[0].open == Polynomial::constant(kZ, t, 2));

  CanonicalDNF closed2 = dnf_of("2 = 0", t);
  REQUIRE(closed2.pieces().size() == 1);
  CHECK(closed2.pieces()[0].closed == std::vector<Polynomial>{Polynomial::constant(kZ, t, 2)});

  const BaseDomain q = BaseDomain::rationals();
  CHECK(dnf_of("2 != 0", t, q).is_true());
  CHECK(dnf_of("2 = 0", t, q).is_false());

  const BaseDomain f3 = BaseDomain::prime_field(3);
  CHECK(dnf_of("3 = 0", t, f3).is_true());
  CHECK(dnf_of("4 != 0", t, f3).is_true());
}

TEST_CASE("pieces are deduplicated and subsumed when syntactically evident") {
  auto t = make_table({"a", "b"});
  // identical pieces collapse
  CanonicalDNF d1 = dnf_of("a = 0 | a = 0", t);
  CHECK(d1.pieces().size() == 1);

  // same closed set, open slot 1 divides a: the D(a) piece is subsumed
  CanonicalDNF d2 = dnf_of("(a != 0 & b = 0) | b = 0", t);
  REQUIRE(d2.pieces().size() == 1);
  CHECK(d2.pieces()[0].open.is_one());
  CHECK(d2.pieces()[0].closed == std::vector<Polynomial>{Polynomial::variable(kZ, t, 1)});

  // different closed sets stay side by side
  CanonicalDNF d3 = dnf_of("a != 0 | a = 0", t);
  CHECK(d3.pieces().size() == 2);
}

TEST_CASE("closed lists are sorted and duplicate-free") {
  auto t = make_table({"a", "b"});
  CanonicalDNF d = dnf_of("b = 0 & a = 0 & b = 0", t);
  REQUIRE(d.pieces().size() == 1);
  const auto& closed = d.pieces()[0].closed;
  REQUIRE(closed.size() == 2);
  CHECK(closed[0] == Polynomial::variable(kZ, t, 0));
  CHECK(closed[1] == Polynomial::variable(kZ, t, 1));
}

TEST_CASE("quantified input is rejected") {
  auto t = make_table({"a"});
  auto [f, table] = parse_formula("exists x. x = 0", t, kZ);
  CHECK_THROWS_AS(to_canonical_dnf(f, kZ, table), UsageError);
}

TEST_CASE("piece cap raises a resource error") {
  auto t = make_table({"a", "b", "c", "d"});
  auto [f, table] =
      parse_formula("(a = 0 | b = 0) & (c = 0 | d = 0) & (a = 1 | b = 1) & (c = 1 | d = 1)", t, kZ);
  QeLimits limits;
  limits.max_pieces = 3;
  CHECK_THROWS_AS(to_canonical_dnf(f, kZ, table, limits), ResourceError);
  try {
    to_canonical_dnf(f, kZ, table, limits);
  } catch (const ResourceError& e) {
    CHECK(e.cap() == "max-pieces");
  }
}

TEST_CASE("expansion preserves pointwise truth on random formulas") {
  auto t = make_table({"a", "b"});
  std::mt19937_64 rng(47);
  for (int i = 0; i < 120; ++i) {
    Formula f = acfqe::testing::random_qf(rng, kZ, t, {0, 1}, 2, 4, 3);
    Formula g = to_canonical_dnf(f, kZ, t).to_formula();
    for (std::uint64_t p : {2ull, 3ull}) {
      CHECK(truth_table(f, t, p) == truth_table(g, t, p));
    }
    // free variables do not grow
    auto fv = f.free_variables();
    for (VarId v : g.free_variables()) CHECK(fv.count(v) == 1);
  }
}

TEST_CASE("denotation is piece-order independent") {
  auto t = make_table({"a", "b"});
  std::mt19937_64 rng(53);
  for (int i = 0; i < 60; ++i) {
    Formula f = acfqe::testing::random_qf(rng, kZ, t, {0, 1}, 2, 4, 3);
    CanonicalDNF d = to_canonical_dnf(f, kZ, t);
    // rebuild the disjunction with pieces reversed
    std::vector<Formula> parts;
    for (auto it = d.pieces().rbegin(); it != d.pieces().rend(); ++it) {
      std::vector<Formula> conj;
      if (!it->open.is_one()) conj.push_back(Formula::negation(Formula::atom(it->open)));
      for (const auto& a : it->closed) conj.push_back(Formula::atom(a));
      parts.push_back(Formula::conjunction(std::move(conj)));
    }
    Formula reversed = Formula::disjunction(std::move(parts));
    for (std::uint64_t p : {2ull, 3ull}) {
      CHECK(truth_table(d.to_formula(), t, p) == truth_table(reversed, t, p));
    }
  }
}
