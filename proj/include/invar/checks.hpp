#pragma once

// Exact verification routines behind the acceptance suite and the CLI
// verify-all command. Every check is a strict polynomial or integer
// identity; no tolerances.

#include <cstdint>
#include <vector>

namespace invar::checks {

// 1 - q + r^{p-1} product identity and its homogenization.
bool dickson_product_identity(int64_t p);

// The two closed forms of q agree.
bool dickson_q_two_forms(int64_t p);

// c_i(sl_p) restriction: -q at p^2-p, r^{p-1} at p^2-1, 0 elsewhere.
bool adjoint_chern_table(int64_t p);

// SL_2(F_p)-invariant dimensions equal #{a(p^2-p)+b(p+1)=d} and the
// invariant space is spanned by q^a r^b, for d <= dmax.
bool sl2_invariant_dims(int64_t p, int dmax);

// Degrees of the minimal generators of the symmetric translation-invariant
// ring (computed, possibly slow at p=5).
std::vector<int> pgl_generator_degrees(int64_t p, int max_degree);

// p=5: verifies the computed minimal-generator table up to max_degree:
// degrees 2,3,4,5,6,7,8,9,10,11,12,13,14,15,15,17,18,19,20 (the quotient
// of each listed slice by products has 5-power torsion), including the
// degrees 2,3,4,5,6,7,9,12,20, with the degree-2/3 entries +-gamma_2/3.
bool pgl5_generator_table(int max_degree);

// p=3: relation ideal up to max_degree is generated by the degree-6
// relation, whose g6 coefficient is +-27; also the explicit identity
// 27 delta = 4 gamma_2^3 + gamma_3^2.
bool pgl3_relations_principal(int max_degree);

// invariant_rank(PGL, S_p, m) == r(m, p) for m <= mmax.
bool invariant_rank_closed_form(int64_t p, int mmax);

// p=3: every invariant of degree <= dmax restricts into F_p[eta^{p^2-p}];
// delta^k -> (-1)^k eta^{(p^2-p)k}.
bool mu_restriction_subring(int64_t p, int dmax);

// |C_p \ S_p / C_p| by enumeration; also checks the closed formula
// (p-1) + (p-1)((p-2)!-1)/p and the partition property.
int64_t cyclic_double_coset_count(int64_t p);
bool double_coset_formula(int64_t p);

// Mackey's formula on random (subgroup pair, polynomial) instances.
bool mackey_random(int64_t p, int instances, uint64_t seed);

// The two-part decomposition of res tsf for (C_p, C_p) in S_p.
bool mackey_cyclic_decomposition(int64_t p);

// Theorem pgl3 ring relations at p=3 (Chow and cohomology parts).
bool bpgl_pgl3_relations();

// bpgl_restrict(rho^{p-1}).cycmu_part == adjoint chern restriction at p^2-1.
bool rho_power_matches_top_chern(int64_t p);

// graded_group_from_model == closed-form descriptors for m <= mmax,
// plus H^{2m} = CH^m and H^3 = Z/p.
bool additive_structure_match(int64_t p, int mmax);

bool cycgl_injectivity_range(int64_t p, int dmax);

// phi multiplicativity and phi(u) xi = 0 for orbit-sum kernels.
bool cycgl_phi_relations(int64_t p);

// r = pi difference (m <= 200, p <= 11) and s' - s indicator (m <= 500),
// against direct enumeration.
bool partition_identities();

}  // namespace invar::checks
