#pragma once

// The rings Z[xi,eta]/(p xi, p eta) and Z[xi,eta,s]/(p xi, p eta, p s, s^2):
// Dickson-type invariants q and r, Chern-class restrictions of the adjoint
// representation, and SL_2(F_p)-invariant spaces.
//
// Variables are named "xi" and "eta"; an FpBivar is a Poly over F_p in them.

#include <array>
#include <cstdint>
#include <vector>

#include "invar/poly.hpp"

namespace invar {

using FpBivar = Poly;

FpBivar fp_xi(int64_t p);
FpBivar fp_eta(int64_t p);

// q = eta^{p^2-p} + xi^{p-1}(xi^{p-1} - eta^{p-1})^{p-1}, degree p^2-p.
FpBivar dickson_q(int64_t p);

// Alternative closed form: xi^{p^2-p} + eta^{p-1}(xi^{p-1} - eta^{p-1})^{p-1}.
FpBivar dickson_q_alt(int64_t p);

// r = xi eta (xi^{p-1} - eta^{p-1}), degree p+1.
FpBivar dickson_r(int64_t p);

// prod over (i,j) in {0..p-1}^2 \ {(0,0)} of (t + i xi + j eta) if
// homogenized (variable "t"), else prod over all (i,j) of (1 + i xi + j eta).
FpBivar chern_orbit_product(int64_t p, bool homogenize);

// Degree-d part of prod_{(i,j) != (p,p), 1<=i,j<=p} (1 + i xi + j eta):
// the restriction of c_d(sl_p). Equals -q at d = p^2-p, r^{p-1} at p^2-1,
// 0 otherwise.
FpBivar adjoint_chern_restriction(int64_t p, int d);

// 2x2 matrix over F_p acting on the degree-1 forms (xi, eta) by linear
// substitution: xi -> a xi + b eta, eta -> c xi + d eta.
struct Sl2Matrix {
  std::array<std::array<int64_t, 2>, 2> m;
  FpBivar apply(const FpBivar& f, int64_t p) const;
};

// Two standard generators of SL_2(F_p).
std::vector<Sl2Matrix> sl2_generators();

// F_p-basis of degree-d polynomials fixed by SL_2(F_p).
std::vector<FpBivar> sl2_invariant_basis(int64_t p, int d);

// Element of Z[xi,eta,s]/(p xi, p eta, p s, s^2): even part + odd part * s.
// s has degree 3; the s^2 slot does not exist.
struct HCycmuElement {
  int64_t p;
  FpBivar even;
  FpBivar odd;
  bool operator==(const HCycmuElement&) const = default;
};

HCycmuElement h_ring_multiply(const HCycmuElement& a, const HCycmuElement& b);

}  // namespace invar
