#pragma once

// Permutations of {1..p} and explicitly enumerated subgroups of S_p
// (p <= 7 in practice, |S_7| = 5040).

#include <cstdint>
#include <string>
#include <vector>

#include "invar/poly.hpp"

namespace invar {

// images[i-1] = image of i.
using Perm = std::vector<int>;

Perm perm_identity(int p);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
Perm perm_inverse(const Perm& a);
Perm perm_cycle(int p);  // (1 2 ... p)

Poly apply_perm(const Perm& g, const Poly& f);

struct GroupSpec {
  enum Kind { FullSymmetric, CyclicP, NormalizerOfCyclic, SymmetricFixLast, Explicit, Trivial };
  Kind kind = FullSymmetric;
  int p = 3;
  std::vector<Perm> extra;  // generators, for Explicit

  std::vector<Perm> generators() const;
  std::string name() const;
};

// Closure of a generator list; elements sorted lexicographically.
std::vector<Perm> group_elements(const std::vector<Perm>& gens, std::size_t bound = 100000);

std::vector<Perm> group_elements(const GroupSpec& g);

bool is_invariant_under(const Poly& f, const std::vector<Perm>& gens);

struct DoubleCosetDecomposition {
  std::vector<Perm> reps;                       // lex-least element per K\G/H class
  std::vector<std::vector<Perm>> intersections; // K ∩ s H s^{-1}, per rep
  std::vector<std::size_t> coset_sizes;         // |K s H|
};

// K and H given by their full element lists; G by its element list.
DoubleCosetDecomposition double_cosets(const std::vector<Perm>& g_elems,
                                       const std::vector<Perm>& k_elems,
                                       const std::vector<Perm>& h_elems);

// Sum of s·f over a left transversal of H in G. Throws if f is not
// H-invariant. Independent of the transversal choice.
Poly transfer_poly(const Poly& f, const std::vector<Perm>& h_elems,
                   const std::vector<Perm>& g_elems);

// res^G_K tsf^G_H f  ==  sum over double-coset reps s of tsf^K_{K_s}(s·f),
// K_s = K ∩ s H s^{-1}.
bool mackey_verify(const std::vector<Perm>& g_elems, const std::vector<Perm>& k_elems,
                   const std::vector<Perm>& h_elems, const Poly& f);

}  // namespace invar
