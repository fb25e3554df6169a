#pragma once

// Normal-form models of the presented rings: the C_p-semidirect-product
// torus ring (invariant slot + xi sigma_p torsion), the Chow ring of the
// projective classifying space (invariant slot + delta^i rho^j torsion),
// and its cohomology variant with the degree-3 class beta.
//
// Torsion coefficients live in F_p; the invariant slot is an exact integer
// polynomial (x form for the GL torus model, sigma basis for the PGL one).

#include <cstdint>
#include <map>
#include <utility>

#include "invar/additive.hpp"
#include "invar/cycmu.hpp"
#include "invar/lattice.hpp"
#include "invar/poly.hpp"
#include "json.hpp"

namespace invar {

using TorsionPart = std::map<std::pair<int, int>, int64_t>;

// Element of the C_p x torus model: inv is a C_p-invariant polynomial in
// x1..xp over Z; tors maps (i, j) -> coefficient of xi^i sigma_p^j, i >= 1.
// deg xi = 1, deg sigma_p = p.
struct CycGLElement {
  int64_t p = 3;
  Poly inv;
  TorsionPart tors;
  bool operator==(const CycGLElement&) const = default;
};

CycGLElement cycgl_make(int64_t p, Poly inv, TorsionPart tors = {});
CycGLElement cycgl_xi(int64_t p);  // (0, xi)

// F_p[sigma_p]-component of a C_p-invariant: coefficients of the monomials
// (x1...xp)^r, reduced mod p; returned as exponent -> coefficient.
std::map<int, int64_t> cycgl_epsilon(const Poly& inv, int64_t p);

CycGLElement cycgl_multiply(const CycGLElement& a, const CycGLElement& b);

// (sum over C_p of s.f, 0)
CycGLElement cycgl_transfer(const Poly& f, int64_t p);

// Ring map to Z[xi,eta]/(p xi, p eta): orbit-sum parts of positive degree
// die, sigma_p goes to eta^p - eta xi^{p-1}, xi stays xi.
FpBivar cycgl_restrict_to_cycmu(const CycGLElement& a);

// Combined restriction (torus, cycmu) has zero kernel on the degree-d
// normal-form basis; checked by exact F_p rank on the torsion images.
bool cycgl_injectivity_check(int64_t p, int d);

// The PGL variant: same model modulo phi(sigma_1). Elements keep the CycGL
// shape with inv reduced into Z[x2..xp] via x1 = -(x2+...+xp).
struct CycPGLModel {
  int64_t p;
  CycGLElement reduce(const CycGLElement& a) const;  // kill phi(sigma_1)
  // mu_p restriction of the invariant slot (all x_i -> eta); sigma_p maps
  // to eta^p.
  Poly restrict_inv_to_mu(const CycGLElement& a) const;
};

// ---- BPGL ----

// inv: S_p-invariant, translation-invariant, stored in the sigma basis;
// tors: (i, j) -> coefficient of delta^i rho^j with j >= 1.
// deg rho = p+1, deg delta = p^2-p (Chow degrees).
struct BPGLElement {
  int64_t p = 3;
  Poly inv;  // sigma basis
  TorsionPart tors;
  bool operator==(const BPGLElement&) const = default;

  nlohmann::json to_json() const;
  static BPGLElement from_json(const nlohmann::json& j);
};

BPGLElement bpgl_make(int64_t p, Poly inv_sigma, TorsionPart tors = {});
BPGLElement bpgl_rho(int64_t p);

// F_p[delta]-component of an invariant: restrict to Z[eta]/(p eta), demand
// the image be a polynomial in eta^{p^2-p} (integrity error otherwise),
// then send eta^{(p^2-p)i} to (-1)^i delta^i.
std::map<int, int64_t> bpgl_epsilon(const Poly& inv_sigma, int64_t p);

BPGLElement bpgl_multiply(const BPGLElement& a, const BPGLElement& b);

struct RestrictionImage {
  Poly torus_part;    // sigma-basis polynomial (torsion maps to 0)
  FpBivar cycmu_part; // via epsilon with delta -> -q, rho -> r
  bool operator==(const RestrictionImage&) const = default;
};

RestrictionImage bpgl_restrict(const BPGLElement& a);

// Degree-i part of prod_{i != j}(1 + (x_i - x_j)) on the torus; equals
// delta at i = p^2-p.
Poly adjoint_total_chern_on_torus(int64_t p, int i);

// ---- H* ----

// even: BPGL element; odd: (i, j) -> coefficient of delta^i rho^j beta
// (i, j >= 0). Cohomological degree is 2w on the even part, 2w+3 on odd.
struct HBPGLElement {
  BPGLElement even;
  TorsionPart odd;
  bool operator==(const HBPGLElement&) const = default;
};

HBPGLElement hbpgl_beta(int64_t p);
HBPGLElement hbpgl_multiply(const HBPGLElement& a, const HBPGLElement& b);

enum class GradedSlice { Chow, CohomologyEven, CohomologyOdd };

// Normal-form basis count in degree m (Chow degree for Chow, topological
// degree for cohomology).
AbelianGroupDesc graded_group_from_model(int64_t p, int m, GradedSlice which);

}  // namespace invar
