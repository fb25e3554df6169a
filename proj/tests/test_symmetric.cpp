#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "invar/symmetric.hpp"

using namespace invar;

namespace {

Poly power_sum(int k, int p) {
  Poly f;
  for (int i = 1; i <= p; ++i) f = f + Poly::var(xvar(i)).pow(k);
  return f;
}

// random symmetric polynomial: random polynomial in the sigma variables,
// pushed down to the x variables
Poly random_symmetric(std::mt19937& rng, int p, int nterms) {
  std::uniform_int_distribution<int> coeff(-5, 5), exp(0, 2);
  Poly g;
  for (int t = 0; t < nterms; ++t) {
    Poly term = Poly::constant(coeff(rng));
    for (int k = 1; k <= p; ++k) term = term * Poly::var(svar(k)).pow(exp(rng));
    g = g + term;
  }
  return sigma_to_x(g, p);
}

}  // namespace

TEST_CASE("elementary symmetric polynomials, small cases") {
  CHECK(elementary_symmetric(0, 3) == Poly::constant(1));
  CHECK(elementary_symmetric(1, 2) == Poly::parse("x1 + x2"));
  CHECK(elementary_symmetric(2, 3) == Poly::parse("x1*x2 + x1*x3 + x2*x3"));
  CHECK(elementary_symmetric(3, 3) == Poly::parse("x1*x2*x3"));
  // number of terms is binom(p, k)
  CHECK(Int(elementary_symmetric(2, 5).terms().size()) == binomial(5, 2));
  CHECK(Int(elementary_symmetric(3, 7).terms().size()) == binomial(7, 3));
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(52, 26) == Int("495918532948104"));
}

TEST_CASE("permutation action and symmetry detection") {
  Poly f = Poly::parse("x1^2*x2");
  CHECK(permute_variables(f, {2, 1, 3}) == Poly::parse("x2^2*x1"));
  CHECK(permute_variables(f, {2, 3, 1}) == Poly::parse("x2^2*x3"));
  CHECK(!is_symmetric(f, 3));
  CHECK(is_symmetric(elementary_symmetric(2, 4), 4));
  CHECK(is_symmetric(power_sum(3, 4), 4));
  CHECK(is_symmetric(Poly::constant(5), 3));
}

TEST_CASE("sigma basis round trip") {
  std::mt19937 rng(41);
  for (int p : {2, 3, 4, 5}) {
    for (int trial = 0; trial < 8; ++trial) {
      Poly f = random_symmetric(rng, p, 3);
      Poly g = to_sigma_basis(f, p);
      CHECK(sigma_to_x(g, p) == f);
    }
  }
  CHECK_THROWS(to_sigma_basis(Poly::parse("x1^2*x2"), 3));
}

TEST_CASE("newton identities as sigma-basis oracles") {
  // p_2 = s1^2 - 2 s2, p_3 = s1^3 - 3 s1 s2 + 3 s3 (p >= 3)
  CHECK(to_sigma_basis(power_sum(2, 3), 3) == Poly::parse("s1^2 - 2*s2"));
  CHECK(to_sigma_basis(power_sum(3, 3), 3) == Poly::parse("s1^3 - 3*s1*s2 + 3*s3"));
  CHECK(to_sigma_basis(power_sum(2, 5), 5) == Poly::parse("s1^2 - 2*s2"));
  CHECK(to_sigma_basis(power_sum(4, 4), 4) ==
        Poly::parse("s1^4 - 4*s1^2*s2 + 2*s2^2 + 4*s1*s3 - 4*s4"));
}

TEST_CASE("sigma shift matches direct substitution") {
  for (int p : {3, 4, 5}) {
    std::map<std::string, Poly> shift;
    for (int i = 1; i <= p; ++i)
      shift[xvar(i)] = Poly::var(xvar(i)) + Poly::var("t");
    for (int k = 1; k <= p; ++k) {
      Poly shifted = elementary_symmetric(k, p).substitute(shift);
      // express t-coefficients in the sigma basis and compare
      Poly expect = sigma_shift(k, p);
      Poly got;
      for (int j = 0; j <= k; ++j) {
        Poly cj;  // coefficient of t^j
        for (const auto& [m, c] : shifted.terms()) {
          if (m.exponent("t") != j) continue;
          std::vector<std::pair<std::string, int>> rest;
          for (const auto& [v, e] : m.exponents())
            if (v != "t") rest.emplace_back(v, e);
          cj = cj + Poly::term(c, Monomial(rest));
        }
        got = got + to_sigma_basis(cj, p) * Poly::var("t").pow(j);
      }
      CHECK(got == expect);
    }
  }
}

TEST_CASE("mod sigma1 quotient") {
  Poly g = Poly::parse("s1^2*s3 - 2*s2 + s1 + 7");
  CHECK(reduce_mod_sigma1(g) == Poly::parse("-2*s2 + 7"));
  CHECK(reduce_mod_sigma1(Poly::parse("s1^5")).is_zero());
}

TEST_CASE("partition enumeration") {
  auto parts = partitions_with_max_part(4, 2);
  CHECK(parts.size() == 3);  // 2+2, 2+1+1, 1+1+1+1
  CHECK(partitions_with_max_part(6, 3).size() == 7);
  CHECK(partitions_with_max_part(0, 3).size() == 1);  // empty partition
  CHECK(partitions_with_max_part(5, 1).size() == 1);
  for (const auto& pa : partitions_with_max_part(7, 4)) {
    int sum = 0;
    for (int q : pa) {
      CHECK(q >= 1);
      CHECK(q <= 4);
      sum += q;
    }
    CHECK(sum == 7);
    CHECK(std::is_sorted(pa.rbegin(), pa.rend()));
  }
  CHECK(sigma_partition_monomial({3, 2, 2}).exponent("s2") == 2);
  CHECK(sigma_partition_monomial({3, 2, 2}).exponent("s3") == 1);
}

TEST_CASE("x monomial enumeration") {
  // #monomials of degree d in p variables = binom(d+p-1, p-1)
  CHECK(Int(x_monomials_of_degree(4, 3).size()) == binomial(6, 2));
  CHECK(Int(x_monomials_of_degree(6, 5).size()) == binomial(10, 4));
  for (const auto& m : x_monomials_of_degree(5, 3)) CHECK(m.degree() == 5);
}
