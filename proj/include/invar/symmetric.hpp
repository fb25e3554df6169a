#pragma once

// Symmetric-function utilities on Z[x1..xp]: elementary symmetric
// polynomials, conversion to and from the sigma basis, permutation action,
// and the quotient by sigma_1.
//
// Naming: torus variables are "x1".."xp", the shift variable is "t",
// sigma-basis variables are "s1".."sp".

#include <string>
#include <vector>

#include "invar/poly.hpp"

namespace invar {

std::string xvar(int i);
std::string svar(int i);

// sigma_k in x1..xp (sigma_0 = 1).
Poly elementary_symmetric(int k, int p, CoeffDomain d = integers());

// Relabel x_i -> x_{g(i)}; g maps {1..p} -> {1..p}, given as images
// (g[i-1] = image of i). A ring automorphism.
Poly permute_variables(const Poly& f, const std::vector<int>& g);

bool is_symmetric(const Poly& f, int p);

// Unique g in Z[s1..sp] with g(sigma_1,...,sigma_p) = f, by lex
// leading-term elimination. Throws (naming a violating transposition)
// if f is not symmetric.
Poly to_sigma_basis(const Poly& f, int p);

// Substitute s_k -> sigma_k(x): inverse of to_sigma_basis.
Poly sigma_to_x(const Poly& g, int p);

// Set s1 = 0 (image in Z[s2..sp]).
Poly reduce_mod_sigma1(const Poly& g);

// sigma_k(x1+t, ..., xp+t) expressed in s1..sp and t:
// sum_i binom(p-k+i, i) t^i s_{k-i}.
Poly sigma_shift(int k, int p);

Int binomial(int n, int k);

// All partitions of d into parts <= maxpart (each as a multiset of parts,
// descending), used as monomial indices in the sigma basis.
std::vector<std::vector<int>> partitions_with_max_part(int d, int maxpart);

// Monomial s_{k1} * s_{k2} * ... for a partition (k1, k2, ...).
Monomial sigma_partition_monomial(const std::vector<int>& parts);

// All monomials of total degree d in variables x1..xp.
std::vector<Monomial> x_monomials_of_degree(int d, int p);

}  // namespace invar
