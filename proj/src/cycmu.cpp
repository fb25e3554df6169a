#include "invar/cycmu.hpp"

#include <stdexcept>

#include "invar/zlin.hpp"

namespace invar {

FpBivar fp_xi(int64_t p) { return Poly::var("xi", prime_field(p)); }
FpBivar fp_eta(int64_t p) { return Poly::var("eta", prime_field(p)); }

FpBivar dickson_q(int64_t p) {
  auto xi = fp_xi(p), eta = fp_eta(p);
  int pp = static_cast<int>(p);
  return eta.pow(pp * pp - pp) +
         xi.pow(pp - 1) * (xi.pow(pp - 1) - eta.pow(pp - 1)).pow(pp - 1);
}

FpBivar dickson_q_alt(int64_t p) {
  auto xi = fp_xi(p), eta = fp_eta(p);
  int pp = static_cast<int>(p);
  return xi.pow(pp * pp - pp) +
         eta.pow(pp - 1) * (xi.pow(pp - 1) - eta.pow(pp - 1)).pow(pp - 1);
}

FpBivar dickson_r(int64_t p) {
  auto xi = fp_xi(p), eta = fp_eta(p);
  int pp = static_cast<int>(p);
  return xi * eta * (xi.pow(pp - 1) - eta.pow(pp - 1));
}

FpBivar chern_orbit_product(int64_t p, bool homogenize) {
  auto dom = prime_field(p);
  auto xi = fp_xi(p), eta = fp_eta(p);
  Poly prod = Poly::constant(1, dom);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (homogenize && i == 0 && j == 0) continue;
      Poly lin = (homogenize ? Poly::var("t", dom) : Poly::constant(1, dom)) + xi * Int(i) + eta * Int(j);
      prod = prod * lin;
    }
  return prod;
}

FpBivar adjoint_chern_restriction(int64_t p, int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  auto dom = prime_field(p);
  auto xi = fp_xi(p), eta = fp_eta(p);
  Poly prod = Poly::constant(1, dom);
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j) {
      if (i == p && j == p) continue;
      prod = prod * (Poly::constant(1, dom) + xi * Int(i) + eta * Int(j));
    }
  return prod.graded_part(d);
}

FpBivar Sl2Matrix::apply(const FpBivar& f, int64_t p) const {
  auto xi = fp_xi(p), eta = fp_eta(p);
  std::map<std::string, Poly> images;
  images["xi"] = xi * Int(m[0][0]) + eta * Int(m[0][1]);
  images["eta"] = xi * Int(m[1][0]) + eta * Int(m[1][1]);
  return f.substitute(images);
}

std::vector<Sl2Matrix> sl2_generators() {
  // Unipotent and rotation-like generators; these generate SL_2(F_p).
  return {Sl2Matrix{{{{1, 1}, {0, 1}}}}, Sl2Matrix{{{{0, -1}, {1, 0}}}}};
}

std::vector<FpBivar> sl2_invariant_basis(int64_t p, int d) {
  auto dom = prime_field(p);
  // Monomial basis xi^a eta^{d-a}, a = 0..d.
  std::vector<Poly> mons;
  for (int a = 0; a <= d; ++a)
    mons.push_back(fp_xi(p).pow(a) * fp_eta(p).pow(d - a));
  auto gens = sl2_generators();
  PMat mat;  // rows: (monomial image coefficient) - (identity), per generator
  for (const auto& g : gens) {
    std::vector<std::vector<int64_t>> colimg(mons.size(), std::vector<int64_t>(d + 1, 0));
    for (std::size_t c = 0; c < mons.size(); ++c) {
      Poly img = g.apply(mons[c], p) - mons[c];
      for (const auto& [m, co] : img.terms()) {
        int a = m.exponent("xi");
        colimg[c][a] = static_cast<int64_t>(co);
      }
    }
    for (int rr = 0; rr <= d; ++rr) {
      std::vector<int64_t> row(mons.size());
      for (std::size_t c = 0; c < mons.size(); ++c) row[c] = colimg[c][rr];
      mat.push_back(std::move(row));
    }
  }
  auto ker = pkernel(mat, p);
  std::vector<FpBivar> out;
  for (const auto& v : ker) {
    Poly f(dom);
    for (std::size_t c = 0; c < mons.size(); ++c)
      if (v[c]) f = f + mons[c] * Int(v[c]);
    out.push_back(f);
  }
  return out;
}

HCycmuElement h_ring_multiply(const HCycmuElement& a, const HCycmuElement& b) {
  if (a.p != b.p) throw std::invalid_argument("modulus mismatch");
  return {a.p, a.even * b.even, a.even * b.odd + b.even * a.odd};
}

}  // namespace invar
