#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <string>
#include <vector>

#include "invar/poly.hpp"

using namespace invar;

namespace {

// Independent evaluation oracle: plug integer values into every variable.
Int eval_at(const Poly& f, const std::map<std::string, Int>& vals) {
  Int total = 0;
  for (const auto& [m, c] : f.terms()) {
    Int t = c;
    for (const auto& [v, e] : m.exponents()) {
      Int base = vals.at(v);
      for (int i = 0; i < e; ++i) t *= base;
    }
    total += t;
  }
  return total;
}

Poly random_poly(std::mt19937& rng, int nvars, int nterms, int maxexp) {
  std::uniform_int_distribution<int> coeff(-9, 9), var(1, nvars), exp(0, maxexp);
  Poly f;
  for (int t = 0; t < nterms; ++t) {
    std::vector<std::pair<std::string, int>> exps;
    for (int v = 1; v <= nvars; ++v) {
      int e = exp(rng);
      if (e > 0) exps.emplace_back("x" + std::to_string(v), e);
    }
    f = f + Poly::term(coeff(rng), Monomial(exps));
  }
  return f;
}

}  // namespace

TEST_CASE("monomial ordering and product") {
  Monomial a({{"x1", 2}});
  Monomial b({{"x1", 1}, {"x2", 1}});
  CHECK(a.degree() == 2);
  CHECK((a * b).degree() == 4);
  CHECK((a * b).exponent("x1") == 3);
  CHECK((a * b).exponent("x2") == 1);
  CHECK(a.exponent("x3") == 0);
}

TEST_CASE("ring axioms against evaluation oracle") {
  std::mt19937 rng(17);
  std::map<std::string, Int> vals{{"x1", 3}, {"x2", -2}, {"x3", 5}};
  for (int trial = 0; trial < 30; ++trial) {
    Poly f = random_poly(rng, 3, 4, 3);
    Poly g = random_poly(rng, 3, 4, 3);
    Poly h = random_poly(rng, 3, 4, 3);
    CHECK(eval_at(f + g, vals) == eval_at(f, vals) + eval_at(g, vals));
    CHECK(eval_at(f * g, vals) == eval_at(f, vals) * eval_at(g, vals));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    CHECK(eval_at(f.pow(3), vals) == eval_at(f, vals) * eval_at(f, vals) * eval_at(f, vals));
  }
}

TEST_CASE("degree and graded parts") {
  Poly f = Poly::parse("x1^3 + 2*x1*x2 - 7");
  CHECK(f.degree() == 3);
  CHECK(!f.is_homogeneous());
  CHECK(f.graded_part(2) == Poly::parse("2*x1*x2"));
  CHECK(f.graded_part(0) == Poly::constant(-7));
  CHECK(f.graded_part(1).is_zero());
  CHECK(f.graded_part(3) + f.graded_part(2) + f.graded_part(0) == f);
  CHECK(Poly().degree() == -1);
  CHECK(Poly::parse("x1^2 - 3*x1*x2").is_homogeneous());
}

TEST_CASE("prime field canonicalization") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(101));
  CHECK(!is_odd_prime(2));
  CHECK(!is_odd_prime(9));
  CHECK_THROWS(prime_field(4));
  CHECK_THROWS(prime_field(2));

  Poly f = Poly::parse("5*x1 - 7*x2 + 3");
  Poly g = f.reduce_mod(3);
  CHECK(g == Poly::parse("2*x1 + 2*x2", prime_field(3)));
  // arithmetic stays canonical
  Poly two = Poly::constant(2, prime_field(3));
  CHECK(two * two == Poly::constant(1, prime_field(3)));
  CHECK((two + two).constant_part() == 1);
}

TEST_CASE("domain mixing is rejected") {
  Poly a = Poly::var("x1");
  Poly b = Poly::var("x1", prime_field(3));
  CHECK_THROWS(a + b);
  CHECK_THROWS(a * b);
}

TEST_CASE("substitute is a ring map") {
  Poly f = Poly::parse("x1^2 + x2");
  std::map<std::string, Poly> images{{"x1", Poly::parse("x2 + 1")}, {"x2", Poly::parse("x1*x2")}};
  Poly got = f.substitute(images);
  CHECK(got == Poly::parse("x2^2 + 2*x2 + 1 + x1*x2"));
  // unassigned variables are fixed
  Poly g = Poly::parse("x3 + x1").substitute({{"x1", Poly::constant(0)}});
  CHECK(g == Poly::var("x3"));
}

TEST_CASE("rename") {
  Poly f = Poly::parse("x1^2*x2 - x2");
  Poly g = f.rename({{"x1", "y"}, {"x2", "z"}});
  CHECK(g == Poly::parse("y^2*z - z"));
  // swap must work (not clobber)
  Poly h = f.rename({{"x1", "x2"}, {"x2", "x1"}});
  CHECK(h == Poly::parse("x2^2*x1 - x1"));
}

TEST_CASE("str/parse round trip") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Poly f = random_poly(rng, 3, 5, 4);
    CHECK(Poly::parse(f.str()) == f);
  }
  CHECK(Poly().str() == "0");
  CHECK(Poly::parse("0").is_zero());
  CHECK(Poly::parse("-x1 + x1").is_zero());
  CHECK(Poly::parse("3*x1^2*x2 - x3").str() == "3*x1^2*x2 - x3");
}

TEST_CASE("json round trip keeps big coefficients") {
  Poly f = Poly::constant(Int("123456789012345678901234567890")) * Poly::var("x1").pow(5) -
           Poly::var("x2");
  CHECK(Poly::from_json(f.to_json()) == f);
  Poly g = Poly::parse("2*x1 + 1", prime_field(5));
  CHECK(Poly::from_json(g.to_json()) == g);
  CHECK(Poly::from_json(g.to_json()).domain().p == 5);
}
