#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "invar/cycmu.hpp"

using namespace invar;

TEST_CASE("degrees and symmetry of q and r") {
  for (int64_t p : {3, 5, 7}) {
    FpBivar q = dickson_q(p);
    FpBivar r = dickson_r(p);
    CHECK(q.degree() == p * p - p);
    CHECK(r.degree() == p + 1);
    CHECK(q.is_homogeneous());
    CHECK(r.is_homogeneous());
    CHECK(q.domain().p == p);
    // q is symmetric in xi <-> eta, r is antisymmetric
    std::map<std::string, std::string> swap{{"xi", "eta"}, {"eta", "xi"}};
    CHECK(q.rename(swap) == q);
    CHECK(r.rename(swap) == -r);
  }
}

TEST_CASE("explicit q and r at p = 3") {
  // q = eta^6 + xi^2(xi^2 - eta^2)^2 = xi^6 + xi^4 eta^2 + xi^2 eta^4 + eta^6 mod 3
  CHECK(dickson_q(3) == Poly::parse("xi^6 + xi^4*eta^2 + xi^2*eta^4 + eta^6", prime_field(3)));
  // r = xi eta (xi^2 - eta^2)
  CHECK(dickson_r(3) == Poly::parse("xi^3*eta + 2*xi*eta^3", prime_field(3)));
}

TEST_CASE("the two closed forms of q agree") {
  for (int64_t p : {3, 5, 7}) CHECK(dickson_q(p) == dickson_q_alt(p));
}

TEST_CASE("q and r are SL_2 invariant, generic forms are not") {
  for (int64_t p : {3, 5}) {
    for (const auto& g : sl2_generators()) {
      CHECK(g.apply(dickson_q(p), p) == dickson_q(p));
      CHECK(g.apply(dickson_r(p), p) == dickson_r(p));
    }
    FpBivar xi = fp_xi(p);
    bool fixed = true;
    for (const auto& g : sl2_generators())
      if (g.apply(xi.pow(int(p + 1)), p) != xi.pow(int(p + 1))) fixed = false;
    CHECK(!fixed);
  }
}

TEST_CASE("matrix action composes") {
  int64_t p = 5;
  Sl2Matrix a{{{{1, 1}, {0, 1}}}};
  Sl2Matrix b{{{{0, 4}, {1, 0}}}};  // [[0,-1],[1,0]] mod 5
  // substituting via a, then via b, is the single substitution via a*b
  Sl2Matrix ab{{{{(a.m[0][0] * b.m[0][0] + a.m[0][1] * b.m[1][0]) % p,
                 (a.m[0][0] * b.m[0][1] + a.m[0][1] * b.m[1][1]) % p},
                {(a.m[1][0] * b.m[0][0] + a.m[1][1] * b.m[1][0]) % p,
                 (a.m[1][0] * b.m[0][1] + a.m[1][1] * b.m[1][1]) % p}}}};
  FpBivar f = fp_xi(p).pow(3) * fp_eta(p) + fp_eta(p).pow(2);
  CHECK(b.apply(a.apply(f, p), p) == ab.apply(f, p));
}

TEST_CASE("orbit product expands to the product identity") {
  for (int64_t p : {3, 5}) {
    FpBivar lhs = chern_orbit_product(p, false);
    FpBivar expect = Poly::constant(1, prime_field(p)) - dickson_q(p) +
                     dickson_r(p).pow(int(p - 1));
    CHECK(lhs == expect);
    FpBivar hom = chern_orbit_product(p, true);
    FpBivar t = Poly::var("t", prime_field(p));
    CHECK(hom == t.pow(int(p * p - 1)) - dickson_q(p) * t.pow(int(p - 1)) +
                     dickson_r(p).pow(int(p - 1)));
  }
}

TEST_CASE("adjoint chern restriction table") {
  for (int64_t p : {3, 5}) {
    CHECK(adjoint_chern_restriction(p, int(p * p - p)) == -dickson_q(p));
    CHECK(adjoint_chern_restriction(p, int(p * p - 1)) == dickson_r(p).pow(int(p - 1)));
    for (int d = 1; d < p * p - 1; ++d) {
      if (d == p * p - p) continue;
      CHECK(adjoint_chern_restriction(p, d).is_zero());
    }
  }
}

TEST_CASE("sl2 invariant dimensions match the q^a r^b count") {
  int64_t p = 3;
  for (int d = 1; d <= 14; ++d) {
    int expect = 0;
    for (int a = 0; a * (p * p - p) <= d; ++a)
      if ((d - a * (p * p - p)) % (p + 1) == 0) ++expect;
    CHECK(int(sl2_invariant_basis(p, d).size()) == expect);
  }
  // degree 6: spanned by q alone
  auto basis6 = sl2_invariant_basis(3, 6);
  REQUIRE(basis6.size() == 1);
  // basis element is a scalar multiple of q
  bool multiple = false;
  for (int64_t c = 1; c < 3; ++c)
    if (basis6[0] * Int(c) == dickson_q(3)) multiple = true;
  CHECK(multiple);
}

TEST_CASE("ring with the degree-3 odd class") {
  int64_t p = 3;
  HCycmuElement a{p, dickson_q(p), fp_xi(p)};
  HCycmuElement b{p, fp_eta(p), Poly::constant(1, prime_field(p))};
  HCycmuElement ab = h_ring_multiply(a, b);
  // odd*odd dies (square-zero class), even/odd parts multiply through
  CHECK(ab.even == dickson_q(p) * fp_eta(p));
  CHECK(ab.odd == dickson_q(p) * Poly::constant(1, prime_field(p)) + fp_xi(p) * fp_eta(p));
  HCycmuElement s{p, FpBivar(prime_field(p)), Poly::constant(1, prime_field(p))};
  CHECK(h_ring_multiply(s, s).even.is_zero());
  CHECK(h_ring_multiply(s, s).odd.is_zero());
}
