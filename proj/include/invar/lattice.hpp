#pragma once

// Invariant rings of subgroup actions of S_p on the character lattices of
// the maximal tori of GL_p, SL_p and PGL_p: invariant bases and ranks,
// minimal generator tables, relations, the gamma_k generators, the
// discriminant, and restriction to mu_p.
//
// Membership in the PGL carrier is translation invariance f(x+t) = f(x);
// the defining lattice {sum a_i x_i : sum a_i = 0} is a direct summand of
// Z^p, so its symmetric algebra is exactly the translation-invariant
// subring.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invar/perm.hpp"
#include "invar/poly.hpp"
#include "invar/symmetric.hpp"
#include "json.hpp"

namespace invar {

enum class TorusKind { GL, SL, PGL };
std::string torus_name(TorusKind t);

struct DegreeLimits {
  // Default per-p caps for basis/generator computations.
  static int default_cap(int64_t p);  // p=3: 30, p=5: 20, p=7: 10
};

bool is_translation_invariant(const Poly& f, int p);

// delta = prod_{i != j} (x_i - x_j), degree p^2 - p.
Poly discriminant(int p);

// gamma_k in the sigma basis, from the substitution definition
// p^{k-1} sigma_k(x - sigma_1/p) (k < p) and p^p sigma_p(x - sigma_1/p);
// integrality of the result is checked.
Poly gamma_generator(int k, int p);

// x_i -> i*eta over Z, then reduce mod p; requires translation invariance.
Poly restrict_pgl_to_mu(const Poly& f, int p);

// Same map on a sigma-basis polynomial: s_k -> e_k(1..p) eta^k over Z,
// then reduce mod p. No membership check (callers pass invariants).
Poly restrict_sigma_to_mu(const Poly& g, int p);

// Z-basis of degree-d invariants, as polynomials in x1..xp (SL: x2..xp).
std::vector<Poly> invariant_basis(int64_t p, TorusKind torus, const GroupSpec& group, int d);

// Fast path for (PGL, S_p): basis in the sigma variables s1..sp, computed
// as the kernel of the shift derivation sum_i d/dx_i (the degree-one
// coefficient of the sigma shift formula).
std::vector<Poly> invariant_basis_sigma(int64_t p, int d);

int64_t invariant_rank(int64_t p, TorusKind torus, const GroupSpec& group, int d);

struct GeneratorEntry {
  int degree = 0;
  std::string name;          // "g<degree>" or "g<degree>_<k>"
  Poly poly;                 // sigma basis for (PGL, S_p), x form otherwise
  std::optional<Poly> sigma_form;
};

struct GeneratorTable {
  int64_t p = 3;
  TorusKind torus = TorusKind::PGL;
  GroupSpec group;
  int max_degree = 0;
  std::vector<GeneratorEntry> entries;

  std::vector<int> degrees() const;
  nlohmann::json to_json() const;
};

GeneratorTable minimal_generators(int64_t p, TorusKind torus, const GroupSpec& group,
                                  int max_degree);

struct RelationTable {
  // (degree, polynomial in the generator names); primitive integer vectors.
  std::vector<std::pair<int, Poly>> relations;
};

RelationTable find_relations(const GeneratorTable& table, int max_degree);

}  // namespace invar
