#include "fixtures.hpp"
#include "garside/conjugacy.hpp"
#include "garside/periodicity.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace garside;
using fixtures::el;

TEST_CASE("translation numbers: s1 s2 in B3 has INF = SUP = 2/3") {
  Element g = el(fixtures::b3(), "s1 s2");
  // the finite formula sees infs 0, 1, 2 at k = 1, 2, 3
  CHECK(summit_invariants(g).infs == 0);
  CHECK(summit_invariants(power(g, 2)).infs == 1);
  CHECK(summit_invariants(power(g, 3)).infs == 2);
  TranslationData t = translation_numbers(g);
  CHECK(t.t_inf == Rational(2, 3));
  CHECK(t.t_sup == Rational(2, 3));
  CHECK(t.t_len == Rational(0));
}

TEST_CASE("translation numbers: s1 in B3 and Delta powers") {
  TranslationData t = translation_numbers(el(fixtures::b3(), "s1"));
  CHECK(t.t_inf == Rational(0));
  CHECK(t.t_sup == Rational(1));
  CHECK(t.t_len == Rational(1));
  for (std::int64_t k : {-2, 0, 1, 3}) {
    TranslationData d = translation_numbers(fixtures::dpow(fixtures::t23(), k));
    CHECK(d.t_inf == Rational(k));
    CHECK(d.t_sup == Rational(k));
  }
}

TEST_CASE("is_periodic") {
  CHECK(is_periodic(el(fixtures::b3(), "s1 s2")));
  CHECK_FALSE(is_periodic(el(fixtures::b3(), "s1")));
  CHECK(is_periodic(Element::identity(fixtures::b3())));
  CHECK_FALSE(is_periodic(el(fixtures::z2(), "e1")));
}

TEST_CASE("periodicity_class on frozen examples") {
  SUBCASE("B3: s1 s2 is 2/3-periodic with a verified conjugator") {
    auto cls = periodicity_class(el(fixtures::b3(), "s1 s2"));
    REQUIRE(cls.has_value());
    CHECK(cls->p == 2);
    CHECK(cls->q == 3);
    CHECK(conjugate(power(el(fixtures::b3(), "s1 s2"), 3), cls->conjugator) ==
          fixtures::dpow(fixtures::b3(), 2));
  }
  SUBCASE("B4: both periodic families, with exact power identities") {
    Element delta4 = el(fixtures::b4(), "s1 s2 s3");
    CHECK(power(delta4, 4) == fixtures::dpow(fixtures::b4(), 2));
    auto c4 = periodicity_class(delta4);
    REQUIRE(c4.has_value());
    CHECK(c4->p == 1);
    CHECK(c4->q == 2);

    Element eps4 = el(fixtures::b4(), "s1 s2 s3 s1");
    CHECK(power(eps4, 3) == fixtures::dpow(fixtures::b4(), 2));
    auto ce = periodicity_class(eps4);
    REQUIRE(ce.has_value());
    CHECK(ce->p == 2);
    CHECK(ce->q == 3);
  }
  SUBCASE("torus: x is 1/a-periodic") {
    auto c2 = periodicity_class(el(fixtures::t22(), "x"));
    REQUIRE(c2.has_value());
    CHECK(c2->p == 1);
    CHECK(c2->q == 2);
    auto c3 = periodicity_class(el(fixtures::t33(), "x"));
    REQUIRE(c3.has_value());
    CHECK(c3->p == 1);
    CHECK(c3->q == 3);
  }
  SUBCASE("Z^2: (1,0) is not periodic") {
    CHECK_FALSE(periodicity_class(el(fixtures::z2(), "e1")));
  }
  SUBCASE("identity is 0/1-periodic") {
    auto cls = periodicity_class(Element::identity(fixtures::b4()));
    REQUIRE(cls.has_value());
    CHECK(cls->p == 0);
    CHECK(cls->q == 1);
  }
}

TEST_CASE("lens_profile values and zero pattern") {
  SUBCASE("B3: s1 s2 over k <= 6") {
    auto prof = lens_profile(el(fixtures::b3(), "s1 s2"), 6);
    CHECK(prof == std::vector<int>{1, 1, 0, 1, 1, 0});
  }
  SUBCASE("torus(2,2): x over k <= 4") {
    auto prof = lens_profile(el(fixtures::t22(), "x"), 4);
    CHECK(prof == std::vector<int>{1, 0, 1, 0});
  }
  SUBCASE("Delta is 0 everywhere") {
    auto prof = lens_profile(fixtures::dpow(fixtures::b3(), 1), 3);
    CHECK(prof == std::vector<int>{0, 0, 0});
  }
  SUBCASE("non-periodic inputs are a domain error") {
    CHECK_THROWS_AS(lens_profile(el(fixtures::b3(), "s1"), 3), std::domain_error);
  }
  SUBCASE("profile equals ceil(kp/q) - floor(kp/q)") {
    struct Case {
      TablePtr table;
      const char* word;
    };
    for (const auto& c : {Case{fixtures::b3(), "s1 s2"}, Case{fixtures::t33(), "x"},
                          Case{fixtures::t23(), "y"}}) {
      auto cls = periodicity_class(el(c.table, c.word));
      REQUIRE(cls.has_value());
      auto prof = lens_profile(el(c.table, c.word), 12);
      for (int k = 1; k <= 12; ++k) {
        Rational r(k * cls->p, cls->q);
        REQUIRE(prof[static_cast<std::size_t>(k - 1)] ==
                static_cast<int>(rational_ceil(r) - rational_floor(r)));
        REQUIRE((prof[static_cast<std::size_t>(k - 1)] == 0) == (k % cls->q == 0));
      }
    }
  }
}

TEST_CASE("delta_root_certificate") {
  Element g = el(fixtures::b3(), "s1 s2");
  SUBCASE("accepts (a,b) = (4,6) and certifies g^6 ~ Delta^4") {
    Element w = delta_root_certificate(g, 4, 6);
    CHECK(conjugate(power(g, 6), w) == fixtures::dpow(fixtures::b3(), 4));
    CHECK(conjugate(power(g, 3), w) == fixtures::dpow(fixtures::b3(), 2));
  }
  SUBCASE("direct conjugates of Delta powers certify with (c,1)") {
    std::mt19937_64 rng(3);
    for (const TablePtr& t : {fixtures::b3(), fixtures::t23()}) {
      for (int iter = 0; iter < 20; ++iter) {
        Element w = oracle::random_element(t, rng, 4, true);
        std::uniform_int_distribution<std::int64_t> pick_c(-3, 3);
        std::int64_t c = pick_c(rng);
        if (c == 0) continue;
        Element h = conjugate(Element::delta_power(t, c), w);
        Element cert = delta_root_certificate(h, c, 1);
        REQUIRE(conjugate(h, cert) == Element::delta_power(t, c));
      }
    }
  }
  SUBCASE("torus(2,2): (a,b) = (2,4) certifies x^4 ~ Delta^2 and x^2 = Delta") {
    Element x = el(fixtures::t22(), "x");
    Element w = delta_root_certificate(x, 2, 4);
    CHECK(conjugate(power(x, 4), w) == fixtures::dpow(fixtures::t22(), 2));
    CHECK(conjugate(power(x, 2), w) == fixtures::dpow(fixtures::t22(), 1));
  }
  SUBCASE("hypothesis violations are domain errors") {
    CHECK_THROWS_AS(delta_root_certificate(el(fixtures::b3(), "s1"), 1, 2), std::domain_error);
    CHECK_THROWS_AS(delta_root_certificate(g, 1, 2), std::domain_error);
    CHECK_THROWS_AS(delta_root_certificate(g, 2, 0), std::invalid_argument);
  }
  SUBCASE("negative root exponents work through inverses") {
    Element w = delta_root_certificate(g, -2, -3);
    CHECK(conjugate(power(g, -3), w) == fixtures::dpow(fixtures::b3(), -2));
  }
}

TEST_CASE("gcd_periodic_exponent") {
  Element g = el(fixtures::b3(), "s1 s2");
  SUBCASE("a = 6, b = 9 gives d = 3 with certificate g^3 ~ Delta^2") {
    auto [d, w] = gcd_periodic_exponent(g, 6, 9);
    CHECK(d == 3);
    CHECK(conjugate(power(g, 3), w) == fixtures::dpow(fixtures::b3(), 2));
  }
  SUBCASE("torus(3,3): x with a = 3, b = 6") {
    Element x = el(fixtures::t33(), "x");
    auto [d, w] = gcd_periodic_exponent(x, 3, 6);
    CHECK(d == 3);
    CHECK(conjugate(power(x, 3), w) == fixtures::dpow(fixtures::t33(), 1));
  }
  SUBCASE("a = b = q is idempotent") {
    auto [d, w] = gcd_periodic_exponent(g, 3, 3);
    CHECK(d == 3);
    CHECK(conjugate(power(g, 3), w) == fixtures::dpow(fixtures::b3(), 2));
  }
  SUBCASE("the failing exponent is identified") {
    CHECK_THROWS_WITH_AS(gcd_periodic_exponent(g, 2, 6), doctest::Contains("a = 2"),
                         std::domain_error);
    CHECK_THROWS_WITH_AS(gcd_periodic_exponent(g, 6, 2), doctest::Contains("b = 2"),
                         std::domain_error);
  }
}

TEST_CASE("is_central") {
  CHECK(is_central(fixtures::dpow(fixtures::b3(), 2)));
  CHECK_FALSE(is_central(fixtures::dpow(fixtures::b3(), 1)));
  CHECK_FALSE(is_central(el(fixtures::b3(), "s1")));
  CHECK(is_central(fixtures::dpow(fixtures::t33(), 1)));
  CHECK(is_central(el(fixtures::z2(), "e1")));
  CHECK(is_central(Element::identity(fixtures::b4())));
}

TEST_CASE("is_garside_element") {
  CHECK(is_garside_element(fixtures::dpow(fixtures::b3(), 2)));
  CHECK(is_garside_element(fixtures::dpow(fixtures::b3(), 1)));
  CHECK_FALSE(is_garside_element(el(fixtures::t22(), "x")));
  CHECK(is_garside_element(el(fixtures::z2(), "e1 e2")));
  CHECK(is_garside_element(el(fixtures::z2(), "e1^2 e2")));
  CHECK_FALSE(is_garside_element(el(fixtures::z2(), "e1")));
  CHECK_FALSE(is_garside_element(Element::identity(fixtures::b3())));
  CHECK_THROWS_AS(is_garside_element(el(fixtures::b3(), "s1^-1")), std::domain_error);
}

TEST_CASE("garside_element_from_central") {
  SUBCASE("B3: Delta^2 completes to itself") {
    CHECK(garside_element_from_central(fixtures::dpow(fixtures::b3(), 2)) ==
          fixtures::dpow(fixtures::b3(), 2));
  }
  SUBCASE("Z^2: Delta^-1 completes to Delta") {
    Element g = el(fixtures::z2(), "e1^-1 e2^-1");
    CHECK(g == fixtures::dpow(fixtures::z2(), -1));
    CHECK(garside_element_from_central(g) == fixtures::dpow(fixtures::z2(), 1));
  }
  SUBCASE("torus(2,2): Delta completes to itself") {
    CHECK(garside_element_from_central(fixtures::dpow(fixtures::t22(), 1)) ==
          fixtures::dpow(fixtures::t22(), 1));
  }
  SUBCASE("postcondition holds on random central elements") {
    std::mt19937_64 rng(55);
    for (const TablePtr& t : {fixtures::b3(), fixtures::b4(), fixtures::t33()}) {
      const std::int64_t m = t->central_exponent();
      std::uniform_int_distribution<std::int64_t> pick_k(-3, 3);
      for (int iter = 0; iter < 50; ++iter) {
        std::int64_t k = pick_k(rng);
        if (k == 0) continue;
        Element g = Element::delta_power(t, m * k);
        Element c = garside_element_from_central(g);
        REQUIRE(c.inf() >= 1);
        REQUIRE(is_garside_element(c));
        REQUIRE(is_central(c));
      }
    }
    // Z^l has a much richer center
    for (int iter = 0; iter < 50; ++iter) {
      Element g = oracle::random_element(fixtures::z3(), rng, 6, true);
      if (g.is_identity()) continue;
      Element c = garside_element_from_central(g);
      REQUIRE(c.inf() >= 1);
      REQUIRE(is_garside_element(c));
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(garside_element_from_central(el(fixtures::b3(), "s1")), std::domain_error);
    CHECK_THROWS_AS(garside_element_from_central(Element::identity(fixtures::b3())),
                    std::domain_error);
  }
}

TEST_CASE("commensurable") {
  SUBCASE("B3: s1 s2 against Delta gives (3, 2)") {
    auto r = commensurable(el(fixtures::b3(), "s1 s2"), fixtures::dpow(fixtures::b3(), 1), 10);
    REQUIRE(r.has_value());
    CHECK(r->first == 3);
    CHECK(r->second == 2);
  }
  SUBCASE("Z^2: (1,0) and (1,1) are not commensurable within bound 10") {
    CHECK_FALSE(commensurable(el(fixtures::z2(), "e1"), el(fixtures::z2(), "e1 e2"), 10));
  }
  SUBCASE("any element is (1,1)-commensurable with itself") {
    auto g = el(fixtures::b4(), "s1 s3 s2^-1");
    auto r = commensurable(g, g, 1);
    REQUIRE(r.has_value());
    CHECK(r->first == 1);
    CHECK(r->second == 1);
  }
  SUBCASE("non-periodic pairs fall back to bounded search") {
    auto r = commensurable(el(fixtures::z2(), "e1"), el(fixtures::z2(), "e1"), 3);
    REQUIRE(r.has_value());
    auto s = commensurable(el(fixtures::z2(), "e1"), el(fixtures::z2(), "e2"), 3);
    CHECK_FALSE(s.has_value());
  }
  SUBCASE("identity against a nontrivial element is never commensurable") {
    CHECK_FALSE(commensurable(Element::identity(fixtures::b3()), el(fixtures::b3(), "s1"), 5));
  }
  SUBCASE("bound must be positive") {
    CHECK_THROWS_AS(commensurable(el(fixtures::z2(), "e1"), el(fixtures::z2(), "e2"), 0),
                    std::invalid_argument);
  }
}

TEST_CASE("lens_profile rejects kmax < 1") {
  CHECK_THROWS_AS(lens_profile(fixtures::dpow(fixtures::b3(), 1), 0), std::invalid_argument);
}

// ---- property tests ------------------------------------------------------

namespace {

struct PeriodicPool {
  TablePtr table;
  std::vector<Element> elements;
};

std::vector<PeriodicPool> periodic_pools() {
  std::vector<PeriodicPool> pools;
  pools.push_back({fixtures::b3(),
                   {fixtures::el(fixtures::b3(), "s1 s2"), fixtures::dpow(fixtures::b3(), 1),
                    fixtures::dpow(fixtures::b3(), -2)}});
  pools.push_back({fixtures::b4(),
                   {fixtures::el(fixtures::b4(), "s1 s2 s3"), fixtures::dpow(fixtures::b4(), 1)}});
  pools.push_back({fixtures::t22(),
                   {fixtures::el(fixtures::t22(), "x"), fixtures::el(fixtures::t22(), "y"),
                    fixtures::el(fixtures::t22(), "x^2")}});
  pools.push_back({fixtures::t33(),
                   {fixtures::el(fixtures::t33(), "x"), fixtures::el(fixtures::t33(), "y"),
                    fixtures::el(fixtures::t33(), "x^2")}});
  pools.push_back({fixtures::t23(),
                   {fixtures::el(fixtures::t23(), "x"), fixtures::el(fixtures::t23(), "y"),
                    fixtures::dpow(fixtures::t23(), 1)}});
  pools.push_back({fixtures::z3(), {fixtures::dpow(fixtures::z3(), 1), fixtures::dpow(fixtures::z3(), -1)}});
  return pools;
}

}  // namespace

TEST_CASE("translation numbers are conjugacy invariants with bounded denominators") {
  for (const TablePtr& t : {fixtures::b3(), fixtures::b4(), fixtures::t23()}) {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 25; ++iter) {
      Element g = oracle::random_element(t, rng, 4, true);
      Element w = oracle::random_element(t, rng, 4, true);
      TranslationData a = translation_numbers(g);
      TranslationData b = translation_numbers(conjugate(g, w));
      REQUIRE(a.t_inf == b.t_inf);
      REQUIRE(a.t_sup == b.t_sup);
      REQUIRE(a.t_inf.denominator() <= t->delta_norm());
      REQUIRE(a.t_sup.denominator() <= t->delta_norm());
      REQUIRE(a.t_len >= Rational(0));
    }
  }
}

TEST_CASE("power scaling and the floor/ceiling bridge") {
  for (const TablePtr& t : {fixtures::b3(), fixtures::t23(), fixtures::z2()}) {
    std::mt19937_64 rng(62);
    for (int iter = 0; iter < 20; ++iter) {
      Element g = oracle::random_element(t, rng, 4, true);
      TranslationData a = translation_numbers(g);
      for (std::int64_t n : {2, 3}) {
        TranslationData b = translation_numbers(power(g, n));
        REQUIRE(b.t_inf == Rational(n) * a.t_inf);
        REQUIRE(b.t_sup == Rational(n) * a.t_sup);
      }
      SummitData s = summit_invariants(g);
      REQUIRE(s.infs == rational_floor(a.t_inf));
      REQUIRE(s.sups == rational_ceil(a.t_sup));
    }
  }
}

TEST_CASE("periodic elements: INF = SUP and integer scaling for negative powers") {
  for (const auto& pool : periodic_pools()) {
    for (const Element& r : pool.elements) {
      TranslationData t = translation_numbers(r);
      REQUIRE(t.t_inf == t.t_sup);
      for (std::int64_t k : {-1, -2, 3}) {
        TranslationData p = translation_numbers(power(r, k));
        REQUIRE(p.t_inf == Rational(k) * t.t_inf);
      }
    }
  }
}

TEST_CASE("root uniqueness: conjugates of Delta^l certify with (l, 1)") {
  for (const TablePtr& t : {fixtures::b3(), fixtures::b4(), fixtures::t33()}) {
    std::mt19937_64 rng(63);
    std::uniform_int_distribution<std::int64_t> pick_l(-3, 3);
    for (int iter = 0; iter < 40; ++iter) {
      std::int64_t l = pick_l(rng);
      if (l == 0) continue;
      Element w = oracle::random_element(t, rng, 3, true);
      Element g = conjugate(Element::delta_power(t, l), w);
      Element cert = delta_root_certificate(g, l, 1);
      REQUIRE(conjugate(g, cert) == Element::delta_power(t, l));
    }
  }
}

TEST_CASE("root non-uniqueness witness: x^a = y^a exactly but x !~ y") {
  for (int a : {2, 3}) {
    TablePtr t = garside::torus(a, a);
    Element x = el(t, "x");
    Element y = el(t, "y");
    CHECK(power(x, a) == power(y, a));
    CHECK_FALSE(is_conjugate(x, y));
  }
}

TEST_CASE("limit estimates bracket the formula values") {
  struct Case {
    TablePtr table;
    const char* word;
    Rational expect;
  };
  for (const auto& c : {Case{fixtures::b3(), "s1 s2", Rational(2, 3)},
                        Case{fixtures::b4(), "s1 s2 s3", Rational(1, 2)}}) {
    Element g = el(c.table, c.word);
    TranslationData t = translation_numbers(g);
    CHECK(t.t_inf == c.expect);
    CHECK(t.t_sup == c.expect);
    Element pw = Element::identity(c.table);
    for (int n = 1; n <= 16; ++n) {
      pw = multiply(pw, g);
      Rational inf_est(pw.inf(), n);
      Rational sup_est(pw.sup(), n);
      REQUIRE(t.t_inf - inf_est <= Rational(1, n));
      REQUIRE(inf_est <= t.t_inf);
      REQUIRE(sup_est - t.t_sup <= Rational(1, n));
      REQUIRE(t.t_sup <= sup_est);
    }
  }
}
