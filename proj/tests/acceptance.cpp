// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code; runtime limits are
// enforced where stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "acfqe/chevalley.hpp"
#include "acfqe/oracle.hpp"
#include "acfqe/parser.hpp"
#include "acfqe/qe.hpp"
#include "test_support.hpp"

using namespace acfqe;
using acfqe::testing::make_table;

namespace {

const BaseDomain kZ = BaseDomain::integers();

struct Criterion {
  int number;
  std::string name;
  double time_limit_s;  // 0 = no stated limit
  std::function<bool(std::string&)> run;
};

OracleConfig oracle_cfg(std::vector<std::uint64_t> primes, std::uint32_t base_ext = 2,
                        std::uint32_t witness_cap = 8) {
  OracleConfig cfg;
  cfg.primes = std::move(primes);
  cfg.base_ext = base_ext;
  cfg.witness_cap = witness_cap;
  cfg.sample_cap = 10000;
  cfg.seed = 0;
  return cfg;
}

bool criterion_localization(std::string& why) {
  Presentation loc = Presentation::parse("base z\nparams u\ngens t\nrel u*t - 1\n");
  ConstructibleSet image = chevalley_image(loc);
  const Polynomial u = Polynomial::variable(kZ, loc.table(), loc.params()[0]);
  if (image.dnf().pieces().size() != 1 || image.dnf().pieces()[0].open != u ||
      !image.dnf().pieces()[0].closed.empty()) {
    why = "image is not exactly the single piece (u, [])";
    return false;
  }
  auto [unot, table] = parse_formula("u != 0", loc.table(), kZ);
  Report report = equiv_check(image_formula(loc), unot, kZ, table, oracle_cfg({2, 3, 5, 7}));
  if (report.verdict != Verdict::Pass || !report.counterexamples.empty()) {
    why = "oracle: " + report.render(table);
    return false;
  }
  return true;
}

bool criterion_linear_image(std::string& why) {
  Presentation lin = Presentation::parse("base z\nparams a b\ngens t\nrel a*t + b\n");
  ConstructibleSet image = chevalley_image(lin);
  auto [expected, table] = parse_formula("a != 0 | (a = 0 & b = 0)", lin.table(), kZ);
  Report report = equiv_check(image.to_formula(), expected, kZ, table, oracle_cfg({2, 3, 5, 7}));
  if (report.verdict != Verdict::Pass || !report.counterexamples.empty()) {
    why = "image of (a t + b) disagrees with D(a) union V(a, b): " + report.render(table);
    return false;
  }
  Report against_input =
      equiv_check(image_formula(lin), image.to_formula(), kZ, table, oracle_cfg({2, 3, 5, 7}));
  if (against_input.verdict != Verdict::Pass || !against_input.counterexamples.empty()) {
    why = "image formula vs eliminated image: " + against_input.render(table);
    return false;
  }
  return true;
}

bool criterion_mixed_characteristic(std::string& why) {
  auto [f, table] = parse_formula("exists x. 2*x - 1 = 0", make_table({}), kZ);
  QeResult qe = eliminate_all(f, kZ, table);
  auto [two_ne, t2] = parse_formula("2 != 0", table, kZ);

  Report report = equiv_check(qe.formula(), two_ne, kZ, qe.table, oracle_cfg({2, 3, 5}));
  if (report.verdict != Verdict::Pass || !report.counterexamples.empty()) {
    why = "output vs (2 != 0): " + report.render(qe.table);
    return false;
  }
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    Point pt{ff_extension(p, 1), {}};
    const bool expected = p != 2;
    if (eval_qf_at_point(qe.formula(), pt) != expected) {
      why = "output has the wrong truth value over F_" + std::to_string(p);
      return false;
    }
    Truth direct = brute_decide(f, pt, oracle_cfg({2, 3, 5}));
    if (direct != (expected ? Truth::True : Truth::False)) {
      why = "brute force disagrees over F_" + std::to_string(p);
      return false;
    }
  }
  return true;
}

bool criterion_circle(std::string& why) {
  auto [f, table] = parse_formula("exists y. x*x + y*y - 1 = 0", make_table({"x"}), kZ);
  QeResult qe = eliminate_all(f, kZ, table);
  if (!qe.dnf.is_true()) {
    why = "elimination did not produce the single piece (1, [])";
    return false;
  }
  // every x over F_p admits y, confirmed pointwise with witness_cap >= 2
  OracleConfig cfg = oracle_cfg({2, 3, 5}, 1, 2);
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    auto field = ff_extension(p, 1);
    for (std::uint64_t i = 0; i < field->size(); ++i) {
      Point pt{field, {{*qe.table->find("x"), FieldElem::from_index(field, i)}}};
      if (brute_decide(f, pt, cfg) != Truth::True) {
        why = "no witness found at x = " + std::to_string(i) + " over F_" + std::to_string(p);
        return false;
      }
    }
  }
  return true;
}

bool criterion_fuzz_soundness(std::string& why) {
  auto t = make_table({"u", "v"}, {"x", "y"});
  std::mt19937_64 rng(2026);
  const OracleConfig cfg = oracle_cfg({2, 3, 5}, 2, 8);
  const int kCases = 200;
  for (int i = 0; i < kCases; ++i) {
    Formula f = acfqe::testing::random_prenex(rng, kZ, t, {0, 1}, {2, 3}, 3, 4);
    QeResult qe = eliminate_all(f, kZ, t);
    if (!qe.formula().is_quantifier_free()) {
      why = "case " + std::to_string(i) + ": output is not quantifier-free";
      return false;
    }
    Report report = equiv_check(f, qe.formula(), kZ, qe.table, cfg);
    if (!report.counterexamples.empty()) {
      why = "case " + std::to_string(i) + " (" + f.render() +
            "): " + report.render(qe.table);
      return false;
    }
  }
  return true;
}

bool criterion_pseudo_division(std::string& why) {
  auto t = make_table({"x", "y", "z"});
  std::mt19937_64 rng(424242);
  int done = 0;
  while (done < 1000) {
    Polynomial f = acfqe::testing::random_poly(rng, kZ, t, 5, 6);
    Polynomial g = acfqe::testing::random_poly(rng, kZ, t, 5, 6);
    const VarId x = static_cast<VarId>(rng() % 3);
    if (g.degree(x) == 0) continue;
    auto [q, r, power] = Polynomial::pseudo_divide(f, g, x);
    const Polynomial lc = g.leading_coefficient(x);
    if (!(lc.pow(power) * f - q * g - r).is_zero() || r.degree(x) >= g.degree(x)) {
      why = "pseudo-division identity failed for f=" + f.render() + ", g=" + g.render();
      return false;
    }
    ++done;
  }
  return true;
}

bool criterion_parser_roundtrip(std::string& why) {
  auto t = make_table({"u", "v"}, {"x", "y", "z"});
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 1000; ++i) {
    Formula f = acfqe::testing::random_nested(rng, kZ, t, {0, 1}, {2, 3, 4}, {}, 4);
    auto [reparsed, table] = parse_formula(f.render(), t, kZ);
    if (!(reparsed == f)) {
      why = "case " + std::to_string(i) + ": '" + f.render() + "' re-parsed differently";
      return false;
    }
  }
  return true;
}

bool criterion_field_algebra(std::string& why) {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      auto field = ff_extension(p, k);
      auto elems = enumerate_field(field);
      std::set<std::uint64_t> distinct;
      for (const auto& e : elems) distinct.insert(e.index());
      if (distinct.size() != field->size()) {
        why = field->tag() + ": enumeration is not p^k distinct elements";
        return false;
      }
      mpz_class order = 1;
      for (std::uint32_t i = 0; i < k; ++i) order *= static_cast<unsigned long>(p);
      const mpz_class frob = static_cast<unsigned long>(p);
      for (const auto& a : elems) {
        if (a.pow(order) != a) {
          why = field->tag() + ": e^(p^k) != e";
          return false;
        }
        if (!a.is_zero()) {
          if (a * a.inverse() != FieldElem::one(field) ||
              a.inverse() * a != FieldElem::one(field)) {
            why = field->tag() + ": inverse failed";
            return false;
          }
        }
        for (const auto& b : elems) {
          if ((a + b).pow(frob) != a.pow(frob) + b.pow(frob) ||
              (a * b).pow(frob) != a.pow(frob) * b.pow(frob)) {
            why = field->tag() + ": Frobenius is not a ring endomorphism";
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool criterion_boolean_laws(std::string& why) {
  auto t = make_table({"u", "v"});
  std::mt19937_64 rng(90210);
  auto member = [](const ConstructibleSet& s, const Point& pt) {
    return eval_qf_at_point(s.to_formula(), pt);
  };
  for (int i = 0; i < 50; ++i) {
    auto rand_set = [&] {
      Formula f = acfqe::testing::random_qf(rng, kZ, t, {0, 1}, 2, 3, 2);
      return ConstructibleSet(to_canonical_dnf(f, kZ, t), t->parameters());
    };
    ConstructibleSet a = rand_set(), b = rand_set(), c = rand_set();
    ConstructibleSet dc = constructible_complement(constructible_complement(a));
    ConstructibleSet dm_l = constructible_complement(constructible_union(a, b));
    ConstructibleSet dm_r =
        constructible_intersect(constructible_complement(a), constructible_complement(b));
    ConstructibleSet di_l = constructible_intersect(a, constructible_union(b, c));
    ConstructibleSet di_r =
        constructible_union(constructible_intersect(a, b), constructible_intersect(a, c));
    ConstructibleSet du_l = constructible_union(a, constructible_intersect(b, c));
    ConstructibleSet du_r =
        constructible_intersect(constructible_union(a, b), constructible_union(a, c));

    for (std::uint64_t p : {2ull, 3ull}) {
      auto field = ff_extension(p, 1);
      for (std::uint64_t i0 = 0; i0 < p; ++i0) {
        for (std::uint64_t i1 = 0; i1 < p; ++i1) {
          Point pt{field,
                   {{0, FieldElem::from_index(field, i0)}, {1, FieldElem::from_index(field, i1)}}};
          if (member(dc, pt) != member(a, pt)) {
            why = "double complement failed";
            return false;
          }
          if (member(dm_l, pt) != member(dm_r, pt)) {
            why = "De Morgan failed";
            return false;
          }
          if (member(di_l, pt) != member(di_r, pt) || member(du_l, pt) != member(du_r, pt)) {
            why = "distributivity failed";
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "localization image is exactly D(u)", 1.0, criterion_localization},
      {2, "linear image D(a) union V(a,b)", 5.0, criterion_linear_image},
      {3, "mixed characteristic (2x = 1)", 0.0, criterion_mixed_characteristic},
      {4, "circle projection is everything", 0.0, criterion_circle},
      {5, "QE soundness fuzz (200 prenex formulas)", 300.0, criterion_fuzz_soundness},
      {6, "pseudo-division identity (1000 pairs)", 10.0, criterion_pseudo_division},
      {7, "parser round-trip (1000 trees)", 0.0, criterion_parser_roundtrip},
      {8, "finite-field algebra (p^k <= 125)", 5.0, criterion_field_algebra},
      {9, "boolean algebra laws (50 sets)", 0.0, criterion_boolean_laws},
  };

  int failures = 0;
  for (auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = criterion.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && criterion.time_limit_s > 0 && seconds > criterion.time_limit_s) {
      ok = false;
      why = "runtime " + std::to_string(seconds) + " s exceeds " +
            std::to_string(criterion.time_limit_s) + " s";
    }
    std::printf("criterion %d (%s): %s [%.2f s]\n", criterion.number, criterion.name.c_str(),
                ok ? "PASS" : "FAIL", seconds);
    if (!ok) {
      std::printf("  -> %s\n", why.c_str());
      ++failures;
    }
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
