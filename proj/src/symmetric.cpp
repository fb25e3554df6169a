#include "invar/symmetric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace invar {

std::string xvar(int i) { return "x" + std::to_string(i); }
std::string svar(int i) { return "s" + std::to_string(i); }

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Poly elementary_symmetric(int k, int p, CoeffDomain d) {
  if (k < 0 || k > p) throw std::invalid_argument("elementary_symmetric: k out of range");
  Poly out(d);
  std::vector<int> idx(k);
  // Iterate over k-subsets of {1..p}.
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      std::vector<std::pair<std::string, int>> e;
      for (int i : idx) e.emplace_back(xvar(i), 1);
      out = out + Poly::term(1, Monomial(std::move(e)), d);
      return;
    }
    for (int i = start; i <= p; ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  if (k == 0) return Poly::constant(1, d);
  rec(rec, 1, 0);
  return out;
}

Poly permute_variables(const Poly& f, const std::vector<int>& g) {
  int p = static_cast<int>(g.size());
  std::vector<bool> seen(p + 1, false);
  for (int v : g) {
    if (v < 1 || v > p || seen[v]) throw std::invalid_argument("not a permutation of {1..p}");
    seen[v] = true;
  }
  for (const auto& v : f.variables())
    if (v.size() > 1 && v[0] == 'x') {
      int i = std::stoi(v.substr(1));
      if (i > p) throw std::invalid_argument("permutation size mismatch: variable " + v);
    }
  std::map<std::string, std::string> names;
  for (int i = 1; i <= p; ++i) names[xvar(i)] = "tmp" + std::to_string(g[i - 1]);
  std::map<std::string, std::string> back;
  for (int i = 1; i <= p; ++i) back["tmp" + std::to_string(i)] = xvar(i);
  return f.rename(names).rename(back);
}

bool is_symmetric(const Poly& f, int p) {
  for (int i = 1; i < p; ++i) {
    std::vector<int> g(p);
    for (int j = 0; j < p; ++j) g[j] = j + 1;
    std::swap(g[i - 1], g[i]);
    if (permute_variables(f, g) != f) return false;
  }
  return true;
}

namespace {

// Exponent vector of the lex-greatest monomial (x1 weighted heaviest).
std::vector<int> lex_leading(const Poly& f, int p) {
  std::vector<int> best;
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e(p, 0);
    for (const auto& [v, k] : m.exponents()) e[std::stoi(v.substr(1)) - 1] = k;
    if (best.empty() || e > best) best = e;
  }
  return best;
}

}  // namespace

Poly to_sigma_basis(const Poly& f, int p) {
  for (int i = 1; i < p; ++i) {
    std::vector<int> g(p);
    for (int j = 0; j < p; ++j) g[j] = j + 1;
    std::swap(g[i - 1], g[i]);
    if (permute_variables(f, g) != f)
      throw std::invalid_argument("polynomial not symmetric: transposition (" + std::to_string(i) +
                                  " " + std::to_string(i + 1) + ") moves it");
  }
  Poly rem = f;
  Poly out(f.domain());
  std::vector<Poly> sig(p + 1);
  for (int k = 0; k <= p; ++k) sig[k] = elementary_symmetric(k, p, f.domain());
  while (!rem.is_zero()) {
    std::vector<int> e = lex_leading(rem, p);
    // For a symmetric polynomial the lex leading exponent is descending.
    Monomial lead_m;
    {
      std::vector<std::pair<std::string, int>> me;
      for (int i = 0; i < p; ++i)
        if (e[i]) me.emplace_back(xvar(i + 1), e[i]);
      lead_m = Monomial(std::move(me));
    }
    Int c = rem.coeff(lead_m);
    Poly prod = Poly::constant(c, f.domain());
    std::vector<std::pair<std::string, int>> se;
    for (int k = 1; k <= p; ++k) {
      int ek = (k < p ? e[k - 1] - e[k] : e[p - 1]);
      if (ek < 0) throw std::logic_error("leading exponent not descending; input not symmetric");
      if (ek > 0) {
        prod = prod * sig[k].pow(ek);
        se.emplace_back(svar(k), ek);
      }
    }
    rem = rem - prod;
    out = out + Poly::term(c, Monomial(std::move(se)), f.domain());
  }
  return out;
}

Poly sigma_to_x(const Poly& g, int p) {
  std::map<std::string, Poly> images;
  for (int k = 1; k <= p; ++k) images[svar(k)] = elementary_symmetric(k, p, g.domain());
  return g.substitute(images);
}

Poly reduce_mod_sigma1(const Poly& g) {
  std::map<std::string, Poly> images;
  images[svar(1)] = Poly(g.domain());
  return g.substitute(images);
}

Poly sigma_shift(int k, int p) {
  if (k < 0 || k > p) throw std::invalid_argument("sigma_shift: k out of range");
  Poly out;
  for (int i = 0; i <= k; ++i) {
    std::vector<std::pair<std::string, int>> e;
    if (i > 0) e.emplace_back("t", i);
    if (k - i > 0) e.emplace_back(svar(k - i), 1);
    out = out + Poly::term(binomial(p - k + i, i), Monomial(std::move(e)));
  }
  return out;
}

std::vector<std::vector<int>> partitions_with_max_part(int d, int maxpart) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxp) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxp); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, d, maxpart);
  return out;
}

Monomial sigma_partition_monomial(const std::vector<int>& parts) {
  std::map<int, int> mult;
  for (int k : parts) ++mult[k];
  std::vector<std::pair<std::string, int>> e;
  for (const auto& [k, m] : mult) e.emplace_back(svar(k), m);
  return Monomial(std::move(e));
}

std::vector<Monomial> x_monomials_of_degree(int d, int p) {
  std::vector<Monomial> out;
  std::vector<int> e(p, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == p - 1) {
      e[pos] = rest;
      std::vector<std::pair<std::string, int>> me;
      for (int i = 0; i < p; ++i)
        if (e[i]) me.emplace_back(xvar(i + 1), e[i]);
      out.push_back(Monomial(std::move(me)));
      return;
    }
    for (int k = rest; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, rest - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace invar
