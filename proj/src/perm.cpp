#include "invar/perm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "invar/symmetric.hpp"

namespace invar {

Perm perm_identity(int p) {
  Perm e(p);
  for (int i = 0; i < p; ++i) e[i] = i + 1;
  return e;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

Perm perm_cycle(int p) {
  Perm c(p);
  for (int i = 0; i < p; ++i) c[i] = (i % p) + 1 == p ? 1 : i + 2;
  return c;
}

Poly apply_perm(const Perm& g, const Poly& f) { return permute_variables(f, g); }

std::vector<Perm> GroupSpec::generators() const {
  std::vector<Perm> gens;
  switch (kind) {
    case Trivial:
      gens.push_back(perm_identity(p));
      break;
    case FullSymmetric: {
      for (int i = 1; i < p; ++i) {
        Perm t = perm_identity(p);
        std::swap(t[i - 1], t[i]);
        gens.push_back(t);
      }
      break;
    }
    case CyclicP:
      gens.push_back(perm_cycle(p));
      break;
    case NormalizerOfCyclic: {
      // Identify {1..p} with F_p by i mod p. Translations i -> i+1 and
      // multiplications i -> a*i for a generator of F_p^*.
      gens.push_back(perm_cycle(p));
      int a = 0;
      for (int cand = 2; cand < p; ++cand) {
        // Check cand generates F_p^*.
        int ord = 1;
        long long v = cand % p;
        while (v != 1) { v = v * cand % p; ++ord; }
        if (ord == p - 1) { a = cand; break; }
      }
      Perm mult(p);
      for (int i = 1; i <= p; ++i) {
        int img = static_cast<int>((static_cast<long long>(a) * i) % p);
        mult[i - 1] = img == 0 ? p : img;
      }
      gens.push_back(mult);
      break;
    }
    case SymmetricFixLast: {
      for (int i = 1; i < p - 1; ++i) {
        Perm t = perm_identity(p);
        std::swap(t[i - 1], t[i]);
        gens.push_back(t);
      }
      if (p == 2) gens.push_back(perm_identity(p));
      break;
    }
    case Explicit:
      gens = extra;
      if (gens.empty()) gens.push_back(perm_identity(p));
      break;
  }
  return gens;
}

std::string GroupSpec::name() const {
  switch (kind) {
    case FullSymmetric: return "S" + std::to_string(p);
    case CyclicP: return "C" + std::to_string(p);
    case NormalizerOfCyclic: return "N(C" + std::to_string(p) + ")";
    case SymmetricFixLast: return "S" + std::to_string(p - 1);
    case Trivial: return "1";
    case Explicit: return "explicit";
  }
  return "?";
}

std::vector<Perm> group_elements(const std::vector<Perm>& gens, std::size_t bound) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  std::set<Perm> seen;
  std::vector<Perm> queue{perm_identity(static_cast<int>(gens[0].size()))};
  seen.insert(queue[0]);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Perm cur = queue[qi];
    for (const auto& g : gens) {
      Perm nxt = perm_compose(g, cur);
      if (seen.insert(nxt).second) {
        queue.push_back(nxt);
        if (seen.size() > bound) throw std::runtime_error("group enumeration bound exceeded");
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> group_elements(const GroupSpec& g) { return group_elements(g.generators()); }

bool is_invariant_under(const Poly& f, const std::vector<Perm>& gens) {
  for (const auto& g : gens)
    if (apply_perm(g, f) != f) return false;
  return true;
}

DoubleCosetDecomposition double_cosets(const std::vector<Perm>& g_elems,
                                       const std::vector<Perm>& k_elems,
                                       const std::vector<Perm>& h_elems) {
  DoubleCosetDecomposition out;
  std::set<Perm> remaining(g_elems.begin(), g_elems.end());
  while (!remaining.empty()) {
    Perm s = *remaining.begin();  // lex-least in its double coset
    std::set<Perm> coset;
    for (const auto& k : k_elems)
      for (const auto& h : h_elems) coset.insert(perm_compose(k, perm_compose(s, h)));
    for (const auto& x : coset) remaining.erase(x);
    Perm sinv = perm_inverse(s);
    std::set<Perm> hconj;
    for (const auto& h : h_elems) hconj.insert(perm_compose(s, perm_compose(h, sinv)));
    std::vector<Perm> inter;
    for (const auto& k : k_elems)
      if (hconj.count(k)) inter.push_back(k);
    out.reps.push_back(s);
    out.intersections.push_back(std::move(inter));
    out.coset_sizes.push_back(coset.size());
  }
  return out;
}

namespace {

std::vector<Perm> left_transversal(const std::vector<Perm>& h_elems,
                                   const std::vector<Perm>& g_elems) {
  std::set<Perm> covered;
  std::vector<Perm> reps;
  for (const auto& g : g_elems) {
    if (covered.count(g)) continue;
    reps.push_back(g);
    for (const auto& h : h_elems) covered.insert(perm_compose(g, h));
  }
  return reps;
}

}  // namespace

Poly transfer_poly(const Poly& f, const std::vector<Perm>& h_elems,
                   const std::vector<Perm>& g_elems) {
  for (const auto& h : h_elems)
    if (apply_perm(h, f) != f) throw std::invalid_argument("transfer_poly: input not invariant under H");
  Poly out(f.domain());
  for (const auto& s : left_transversal(h_elems, g_elems)) out = out + apply_perm(s, f);
  return out;
}

bool mackey_verify(const std::vector<Perm>& g_elems, const std::vector<Perm>& k_elems,
                   const std::vector<Perm>& h_elems, const Poly& f) {
  Poly lhs = transfer_poly(f, h_elems, g_elems);  // restriction to K is the same polynomial
  auto dc = double_cosets(g_elems, k_elems, h_elems);
  Poly rhs(f.domain());
  for (std::size_t i = 0; i < dc.reps.size(); ++i) {
    Poly sf = apply_perm(dc.reps[i], f);
    rhs = rhs + transfer_poly(sf, dc.intersections[i], k_elems);
  }
  return lhs == rhs;
}

}  // namespace invar
