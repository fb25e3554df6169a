#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "invar/additive.hpp"
#include "invar/lattice.hpp"

using namespace invar;

namespace {

// gamma_k oracle: p^{k-1} sigma_k(x - sbar), sbar = sigma_1/p, evaluated at
// integer points whose coordinate sum is divisible by p. Works entirely in Z:
// p^{k-1} sigma_k(y/p) = sigma_k(y) / p if y_i = p x_i - sigma_1.
Int gamma_value_oracle(int k, int p, const std::vector<Int>& x) {
  Int s1 = 0;
  for (const auto& v : x) s1 += v;
  std::vector<Int> y;
  for (const auto& v : x) y.push_back(Int(p) * v - s1);
  // sigma_k(y) via the generating product, coefficient of t^k
  std::vector<Int> e(std::size_t(k) + 1, 0);
  e[0] = 1;
  for (const auto& v : y)
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * v;
  Int scale = 1;  // p^{k-1} / p^k = 1/p for k < p; p^p / p^p = 1 for k = p
  Int num = e[k] * scale;
  if (k < p) {
    Int d = num / p;
    REQUIRE(d * p == num);
    return d;
  }
  return num;
}

Int eval_sigma_poly(const Poly& g, int p, const std::vector<Int>& x) {
  // evaluate a sigma-basis polynomial at concrete x values
  std::vector<Int> e(std::size_t(p) + 1, 0);
  e[0] = 1;
  for (const auto& v : x)
    for (int j = p; j >= 1; --j) e[j] += e[j - 1] * v;
  Int total = 0;
  for (const auto& [m, c] : g.terms()) {
    Int t = c;
    for (const auto& [var, exp] : m.exponents()) {
      int k = std::stoi(var.substr(1));
      for (int i = 0; i < exp; ++i) t *= e[k];
    }
    total += t;
  }
  return total;
}

}  // namespace

TEST_CASE("translation invariance marker") {
  CHECK(is_translation_invariant(Poly::parse("x1 - x2"), 2));
  CHECK(!is_translation_invariant(Poly::parse("x1 + x2"), 2));
  CHECK(is_translation_invariant(Poly(), 3));
  Poly d = discriminant(3);
  CHECK(is_translation_invariant(d, 3));
  CHECK(is_translation_invariant(d * d - Poly::parse("x1 - x3").pow(12), 3));
}

TEST_CASE("discriminant") {
  Poly d2 = discriminant(2);
  CHECK(d2 == -Poly::parse("x1^2 - 2*x1*x2 + x2^2"));  // (x1-x2)(x2-x1)
  Poly d3 = discriminant(3);
  CHECK(d3.degree() == 6);
  CHECK(d3.is_homogeneous());
  // vanishes when two variables agree
  CHECK(d3.substitute({{"x2", Poly::var("x1")}}).is_zero());
  // square of the Vandermonde, up to the sign (-1)^{p(p-1)/2}
  Poly vand =
      (Poly::var("x1") - Poly::var("x2")) * (Poly::var("x1") - Poly::var("x3")) *
         (Poly::var("x2") - Poly::var("x3"));
  CHECK(d3 == -(vand * vand));
  CHECK(discriminant(5).degree() == 20);
}

TEST_CASE("discriminant in the sigma basis at p = 3") {
  Poly g = to_sigma_basis(discriminant(3), 3);
  CHECK(g == Poly::parse("-s1^2*s2^2 + 4*s1^3*s3 - 18*s1*s2*s3 + 4*s2^3 + 27*s3^2"));
  // image mod sigma_1
  CHECK(reduce_mod_sigma1(g) == Poly::parse("4*s2^3 + 27*s3^2"));
}

TEST_CASE("gamma generators against the substitution oracle") {
  std::vector<std::vector<Int>> pts3 = {{1, 2, -3}, {0, 3, 3}, {-2, -2, 1}, {5, -1, -1}};
  for (int k = 2; k <= 3; ++k) {
    Poly g = gamma_generator(k, 3);
    CHECK(g.degree() == k);
    for (const auto& x : pts3) CHECK(eval_sigma_poly(g, 3, x) == gamma_value_oracle(k, 3, x));
  }
  std::vector<std::vector<Int>> pts5 = {{1, 2, 3, 4, 0}, {-1, -1, 2, 2, 3}, {5, 0, 0, 0, 0}};
  for (int k = 2; k <= 5; ++k) {
    Poly g = gamma_generator(k, 5);
    CHECK(g.degree() == k);
    for (const auto& x : pts5) CHECK(eval_sigma_poly(g, 5, x) == gamma_value_oracle(k, 5, x));
  }
}

TEST_CASE("explicit gamma forms at p = 3") {
  CHECK(gamma_generator(2, 3) == Poly::parse("3*s2 - s1^2"));
  CHECK(gamma_generator(3, 3) == Poly::parse("27*s3 - 9*s1*s2 + 2*s1^3"));
}

TEST_CASE("restriction to mu") {
  // delta restricts to -eta^{p^2-p}
  for (int p : {3, 5}) {
    Poly img = restrict_pgl_to_mu(discriminant(p), p);
    Poly expect = -Poly::var("eta").pow(p * p - p);
    CHECK(img == expect.reduce_mod(p));
  }
  // sigma-basis route agrees with the x route
  Poly d = discriminant(3);
  CHECK(restrict_sigma_to_mu(to_sigma_basis(d, 3), 3) == restrict_pgl_to_mu(d, 3));
  // non-translation-invariant input is rejected
  CHECK_THROWS(restrict_pgl_to_mu(Poly::parse("x1"), 3));
}

TEST_CASE("invariant ranks match the partition count") {
  PartitionCounter c3(3), c5(5);
  GroupSpec s3{GroupSpec::FullSymmetric, 3}, s5{GroupSpec::FullSymmetric, 5};
  for (int m = 0; m <= 14; ++m)
    CHECK(invariant_rank(3, TorusKind::PGL, s3, m) == c3.r(m));
  for (int m = 0; m <= 10; ++m)
    CHECK(invariant_rank(5, TorusKind::PGL, s5, m) == c5.r(m));
}

TEST_CASE("sigma fast path agrees with the generic path") {
  GroupSpec s3{GroupSpec::FullSymmetric, 3};
  for (int d = 1; d <= 8; ++d) {
    auto fast = invariant_basis_sigma(3, d);
    auto generic = invariant_basis(3, TorusKind::PGL, s3, d);
    CHECK(fast.size() == generic.size());
    for (const auto& g : fast) {
      Poly f = sigma_to_x(g, 3);
      CHECK(is_symmetric(f, 3));
      CHECK(is_translation_invariant(f, 3));
    }
  }
}

TEST_CASE("GL invariants are the sigma monomials") {
  GroupSpec s3{GroupSpec::FullSymmetric, 3};
  // rank in degree d = #partitions of d with parts <= p
  for (int d = 1; d <= 8; ++d)
    CHECK(invariant_rank(3, TorusKind::GL, s3, d) ==
          int64_t(partitions_with_max_part(d, 3).size()));
}

TEST_CASE("cyclic invariants are bigger than symmetric ones") {
  GroupSpec c3{GroupSpec::CyclicP, 3}, s3{GroupSpec::FullSymmetric, 3};
  for (int d = 2; d <= 6; ++d) {
    auto rc = invariant_rank(3, TorusKind::PGL, c3, d);
    auto rs = invariant_rank(3, TorusKind::PGL, s3, d);
    CHECK(rc >= rs);
  }
  // degree 3: the two cyclic orbit sums of x1^2 x2 type plus the symmetric line
  CHECK(invariant_rank(3, TorusKind::PGL, c3, 2) == 1);
  CHECK(invariant_rank(3, TorusKind::PGL, c3, 3) == 2);
}

TEST_CASE("minimal generators at p = 3") {
  GroupSpec s3{GroupSpec::FullSymmetric, 3};
  GeneratorTable t = minimal_generators(3, TorusKind::PGL, s3, 12);
  CHECK(t.degrees() == std::vector<int>{2, 3, 6});
  // generator polynomials are honest invariants of the right weighted degree
  for (const auto& e : t.entries) {
    Poly f = sigma_to_x(e.poly, 3);
    CHECK(f.degree() == e.degree);
    CHECK(is_symmetric(f, 3));
    CHECK(is_translation_invariant(f, 3));
  }
  // degree 2 and 3 entries match gamma up to sign
  CHECK((t.entries[0].poly == gamma_generator(2, 3) || t.entries[0].poly == -gamma_generator(2, 3)));
  CHECK((t.entries[1].poly == gamma_generator(3, 3) || t.entries[1].poly == -gamma_generator(3, 3)));
}

TEST_CASE("minimal generators at p = 5, low degrees") {
  GroupSpec s5{GroupSpec::FullSymmetric, 5};
  GeneratorTable t = minimal_generators(5, TorusKind::PGL, s5, 9);
  // every degree from 2 to 9 contributes: the quotient of each slice by the
  // products of lower generators has 5-power torsion in degrees 6..9
  CHECK(t.degrees() == std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9});
  for (const auto& e : t.entries) {
    Poly f = sigma_to_x(e.poly, 5);
    CHECK(f.degree() == e.degree);
    CHECK(is_symmetric(f, 5));
    CHECK(is_translation_invariant(f, 5));
  }
}

TEST_CASE("relations at p = 3") {
  GroupSpec s3{GroupSpec::FullSymmetric, 3};
  GeneratorTable t = minimal_generators(3, TorusKind::PGL, s3, 8);
  RelationTable r = find_relations(t, 8);
  REQUIRE(r.relations.size() == 1);
  CHECK(r.relations[0].first == 6);
  // the degree-6 relation has |coefficient of g6| = 27
  Int c6 = r.relations[0].second.coeff(Monomial({{"g6", 1}}));
  CHECK((c6 == 27 || c6 == -27));
}

TEST_CASE("default degree caps") {
  CHECK(DegreeLimits::default_cap(3) == 30);
  CHECK(DegreeLimits::default_cap(5) == 20);
  CHECK(DegreeLimits::default_cap(7) == 10);
}
