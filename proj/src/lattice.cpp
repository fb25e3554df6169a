#include "invar/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "invar/zlin.hpp"

namespace invar {

std::string torus_name(TorusKind t) {
  switch (t) {
    case TorusKind::GL: return "GL";
    case TorusKind::SL: return "SL";
    case TorusKind::PGL: return "PGL";
  }
  return "?";
}

int DegreeLimits::default_cap(int64_t p) {
  if (p <= 3) return 30;
  if (p <= 5) return 20;
  return 10;
}

bool is_translation_invariant(const Poly& f, int p) {
  std::map<std::string, Poly> shift;
  Poly t = Poly::var("t", f.domain());
  for (int i = 1; i <= p; ++i) shift[xvar(i)] = Poly::var(xvar(i), f.domain()) + t;
  return f.substitute(shift) == f;
}

Poly discriminant(int p) {
  Poly out = Poly::constant(1);
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j) {
      if (i == j) continue;
      out = out * (Poly::var(xvar(i)) - Poly::var(xvar(j)));
    }
  return out;
}

Poly gamma_generator(int k, int p) {
  if (k < 2 || k > p) throw std::invalid_argument("gamma_generator: k must be in [2, p]");
  // p^e * sigma_k(x - sigma_1/p) with e = k-1 (k < p) or e = p (k = p):
  // compute p^{e+? } scaled integrally, then divide once, checking
  // integrality of every coefficient.
  int e = (k < p) ? k - 1 : p;
  Poly scaled;  // p^k * sigma_k(x - sigma_1/p) = sum_i binom(p-k+i,i) (-s1)^i p^{k-i} s_{k-i}
  Poly s1 = Poly::var(svar(1));
  for (int i = 0; i <= k; ++i) {
    Poly term = Poly::constant(binomial(p - k + i, i) * pow(Int(p), k - i));
    term = term * s1.pow(i);
    if (i % 2 == 1) term = -term;
    if (k - i > 0) term = term * Poly::var(svar(k - i));
    scaled = scaled + term;
  }
  // scaled = p^k * gamma'_k; gamma_k = p^e * gamma'_k = scaled / p^{k-e}.
  Int den = pow(Int(p), k - e);
  Poly out;
  for (const auto& [m, c] : scaled.terms()) {
    if (c % den != 0) throw std::logic_error("gamma_generator: non-integral coefficient");
    out = out + Poly::term(c / den, m);
  }
  return out;
}

Poly restrict_pgl_to_mu(const Poly& f, int p) {
  if (!is_translation_invariant(f, p))
    throw std::invalid_argument("restrict_pgl_to_mu: input is not translation invariant");
  std::map<std::string, Poly> images;
  Poly eta = Poly::var("eta");
  for (int i = 1; i <= p; ++i) images[xvar(i)] = eta * Int(i);
  return f.substitute(images).reduce_mod(p);
}

Poly restrict_sigma_to_mu(const Poly& g, int p) {
  std::map<std::string, Poly> images;
  Poly eta = Poly::var("eta");
  for (int k = 1; k <= p; ++k) {
    // e_k(1, 2, ..., p) * eta^k
    Int ek = 0;
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int start, int depth, Int prod) -> void {
      if (depth == k) { ek += prod; return; }
      for (int i = start; i <= p; ++i) self(self, i + 1, depth + 1, prod * i);
    };
    if (k == 0) ek = 1; else rec(rec, 1, 0, 1);
    images[svar(k)] = Poly::term(ek, Monomial({{"eta", k}}));
  }
  return g.substitute(images).reduce_mod(p);
}

namespace {

// Coordinate frame: monomial -> column index over a fixed monomial list.
struct Frame {
  std::vector<Monomial> mons;
  std::map<Monomial, std::size_t> index;

  static Frame from_polys(const std::vector<Poly>& ps) {
    Frame f;
    for (const auto& g : ps)
      for (const auto& [m, c] : g.terms())
        if (f.index.emplace(m, 0).second) f.mons.push_back(m);
    std::sort(f.mons.begin(), f.mons.end());
    for (std::size_t i = 0; i < f.mons.size(); ++i) f.index[f.mons[i]] = i;
    return f;
  }

  std::vector<Int> coords(const Poly& g) const {
    std::vector<Int> v(mons.size(), 0);
    for (const auto& [m, c] : g.terms()) v[index.at(m)] = c;
    return v;
  }
};

Poly from_coords(const Frame& fr, const std::vector<Int>& v) {
  Poly g;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) g = g + Poly::term(v[i], fr.mons[i]);
  return g;
}

// Degree-d monomial basis of the carrier: x1..xp for GL/PGL, x2..xp for SL
// (canonical representatives modulo sigma_1, using x1 = -(x2+...+xp)).
std::vector<Monomial> carrier_monomials(int64_t p, TorusKind torus, int d) {
  int pp = static_cast<int>(p);
  if (torus == TorusKind::SL) {
    auto all = x_monomials_of_degree(d, pp - 1);
    std::vector<Monomial> out;
    for (const auto& m : all) {
      std::vector<std::pair<std::string, int>> e;
      for (const auto& [v, k] : m.exponents()) e.emplace_back("x" + std::to_string(std::stoi(v.substr(1)) + 1), k);
      out.push_back(Monomial(std::move(e)));
    }
    return out;
  }
  return x_monomials_of_degree(d, pp);
}

// In the SL carrier, reduce modulo sigma_1 by substituting
// x1 -> -(x2 + ... + xp).
Poly sl_reduce(const Poly& f, int p) {
  Poly sub;
  for (int i = 2; i <= p; ++i) sub = sub - Poly::var(xvar(i));
  return f.substitute({{xvar(1), sub}});
}

// G-orbit sums of the degree-d monomials: a Z-basis of the G-invariants of
// the GL carrier (permutation module).
std::vector<Poly> orbit_sums(int64_t p, const GroupSpec& group, int d) {
  auto elems = group_elements(group);
  auto mons = x_monomials_of_degree(d, static_cast<int>(p));
  std::set<Monomial> seen;
  std::vector<Poly> out;
  for (const auto& m : mons) {
    if (seen.count(m)) continue;
    Poly mono = Poly::term(1, m);
    std::set<Monomial> orbit;
    for (const auto& g : elems) {
      Poly img = apply_perm(g, mono);
      orbit.insert(img.terms().begin()->first);
    }
    Poly sum;
    for (const auto& om : orbit) {
      sum = sum + Poly::term(1, om);
      seen.insert(om);
    }
    out.push_back(sum);
  }
  return out;
}

// d/dt coefficient of f(x+t): sum_i df/dx_i, on an x-form polynomial.
Poly x_shift_derivation(const Poly& f, int p) {
  Poly out;
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, k] : m.exponents()) {
      std::vector<std::pair<std::string, int>> e;
      for (const auto& [w, l] : m.exponents()) e.emplace_back(w, w == v ? l - 1 : l);
      out = out + Poly::term(c * k, Monomial(std::move(e)));
    }
  return out;
}

// Same derivation in the sigma basis: D s_k = (p-k+1) s_{k-1}, s_0 = 1.
Poly sigma_shift_derivation(const Poly& g, int p) {
  Poly out;
  for (const auto& [m, c] : g.terms())
    for (const auto& [v, a] : m.exponents()) {
      int k = std::stoi(v.substr(1));
      std::vector<std::pair<std::string, int>> e;
      for (const auto& [w, l] : m.exponents()) e.emplace_back(w, w == v ? l - 1 : l);
      Monomial base(std::move(e));
      Monomial full = (k > 1) ? base * Monomial({{svar(k - 1), 1}}) : base;
      out = out + Poly::term(c * a * (p - k + 1), full);
    }
  return out;
}

// Kernel of a Z-linear map on a spanning list: returns the coefficient
// vectors (rows) spanning {c : sum c_i images_i = 0}, saturated.
ZMat span_kernel(const std::vector<Poly>& images) {
  Frame fr = Frame::from_polys(images);
  if (fr.mons.empty()) return zmat_identity(images.size());  // all images are zero
  ZMat a(fr.mons.size(), std::vector<Int>(images.size(), 0));
  for (std::size_t j = 0; j < images.size(); ++j) {
    auto v = fr.coords(images[j]);
    for (std::size_t i = 0; i < v.size(); ++i) a[i][j] = v[i];
  }
  return kernel_lattice(a);
}

std::vector<Poly> combine(const std::vector<Poly>& basis, const ZMat& coeffs) {
  std::vector<Poly> out;
  for (const auto& row : coeffs) {
    Poly f;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (row[j] != 0) f = f + basis[j] * row[j];
    out.push_back(f);
  }
  return out;
}

}  // namespace

std::vector<Poly> invariant_basis_sigma(int64_t p, int d) {
  int pp = static_cast<int>(p);
  auto parts = partitions_with_max_part(d, pp);
  std::vector<Poly> mons, dimg;
  for (const auto& part : parts) {
    Poly m = Poly::term(1, sigma_partition_monomial(part));
    dimg.push_back(sigma_shift_derivation(m, pp));
    mons.push_back(std::move(m));
  }
  if (d == 0) return {Poly::constant(1)};
  ZMat ker = span_kernel(dimg);
  auto out = combine(mons, ker);
  for (auto& f : out) {
    // Sign normalization: leading displayed coefficient positive.
    auto v = f.terms().begin();
    if (v != f.terms().end() && v->second < 0) f = -f;
  }
  return out;
}

std::vector<Poly> invariant_basis(int64_t p, TorusKind torus, const GroupSpec& group, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  if (d == 0) return {Poly::constant(1)};
  int pp = static_cast<int>(p);
  if (torus == TorusKind::PGL && group.kind == GroupSpec::FullSymmetric) {
    auto sig = invariant_basis_sigma(p, d);
    std::vector<Poly> out;
    for (const auto& g : sig) out.push_back(sigma_to_x(g, pp));
    return out;
  }
  if (torus == TorusKind::GL) return orbit_sums(p, group, d);
  if (torus == TorusKind::PGL) {
    // G-invariants first (orbit sums span them freely), then the kernel of
    // the shift derivation.
    auto basis = orbit_sums(p, group, d);
    std::vector<Poly> dimg;
    for (const auto& f : basis) dimg.push_back(x_shift_derivation(f, pp));
    ZMat ker = span_kernel(dimg);
    return combine(basis, ker);
  }
  // SL: invariants of the quotient by sigma_1 on the monomial basis in
  // x2..xp; stack (g - 1) over the generators and take the integer kernel.
  auto mons = carrier_monomials(p, torus, d);
  std::vector<Poly> reduced;
  for (const auto& m : mons) reduced.push_back(Poly::term(1, m));
  auto gens = group.generators();
  // Stacked constraint matrix: rows from each generator's action minus 1.
  ZMat a;
  for (const auto& g : gens) {
    std::vector<Poly> imgs;
    for (const auto& f : reduced) imgs.push_back(sl_reduce(apply_perm(g, f), pp) - f);
    Frame imgfr = Frame::from_polys(imgs);
    for (std::size_t r = 0; r < imgfr.mons.size(); ++r) {
      std::vector<Int> row(reduced.size(), 0);
      for (std::size_t j = 0; j < imgs.size(); ++j) row[j] = imgs[j].coeff(imgfr.mons[r]);
      a.push_back(std::move(row));
    }
  }
  ZMat ker = a.empty() ? zmat_identity(reduced.size()) : kernel_lattice(a);
  return combine(reduced, ker);
}

int64_t invariant_rank(int64_t p, TorusKind torus, const GroupSpec& group, int d) {
  if (d == 0) return 1;
  if (torus == TorusKind::PGL && group.kind == GroupSpec::FullSymmetric) {
    // The rank is the kernel dimension of the shift derivation on the sigma
    // monomials. The rank of the derivation matrix mod q is a lower bound
    // for its rational rank and the row count an upper bound; when the two
    // meet, the kernel dimension is exact without any integer normal form.
    int pp = static_cast<int>(p);
    auto parts = partitions_with_max_part(d, pp);
    std::vector<Poly> dimg;
    for (const auto& part : parts)
      dimg.push_back(sigma_shift_derivation(Poly::term(1, sigma_partition_monomial(part)), pp));
    Frame fr = Frame::from_polys(dimg);
    if (!fr.mons.empty()) {
      const int64_t q = 1000003;
      PMat a(fr.mons.size(), std::vector<int64_t>(dimg.size(), 0));
      for (std::size_t j = 0; j < dimg.size(); ++j) {
        auto v = fr.coords(dimg[j]);
        for (std::size_t i = 0; i < v.size(); ++i) {
          Int r = v[i] % q;
          if (r < 0) r += q;
          a[i][j] = r.convert_to<int64_t>();
        }
      }
      if (prank(a, q) == static_cast<int64_t>(fr.mons.size()))
        return static_cast<int64_t>(dimg.size() - fr.mons.size());
    }
    return static_cast<int64_t>(invariant_basis_sigma(p, d).size());
  }
  return static_cast<int64_t>(invariant_basis(p, torus, group, d).size());
}

std::vector<int> GeneratorTable::degrees() const {
  std::vector<int> out;
  for (const auto& e : entries) out.push_back(e.degree);
  return out;
}

nlohmann::json GeneratorTable::to_json() const {
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json je{{"degree", e.degree}, {"name", e.name}};
    if (e.sigma_form)
      je["sigma_form"] = e.sigma_form->str();
    else
      je["sigma_form"] = nullptr;
    // FNV-1a over the canonical text form.
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : e.poly.str()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    je["x_form_hash"] = h;
    es.push_back(je);
  }
  return {{"p", p},
          {"torus", torus_name(torus)},
          {"group", group.name()},
          {"max_degree", max_degree},
          {"entries", es}};
}

GeneratorTable minimal_generators(int64_t p, TorusKind torus, const GroupSpec& group,
                                  int max_degree) {
  bool sigma_mode = (torus == TorusKind::PGL && group.kind == GroupSpec::FullSymmetric);
  GeneratorTable table{p, torus, group, max_degree, {}};
  // Full invariant slice bases for the degrees already processed; each slice
  // is spanned by generator products plus the generators added there, so
  // generator * slice products span all decomposables of the current degree.
  std::map<int, std::vector<Poly>> slices;
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Poly> basis = sigma_mode ? invariant_basis_sigma(p, d)
                                         : invariant_basis(p, torus, group, d);
    if (basis.empty()) continue;
    std::vector<Poly> prods;
    for (const auto& e : table.entries) {
      auto it = slices.find(d - e.degree);
      if (it == slices.end()) continue;
      for (const auto& b : it->second) prods.push_back(e.poly * b);
    }
    // Replace the basis by the HNF row basis of its lattice (same span,
    // triangular), so membership coordinates come from back-substitution.
    std::size_t r = basis.size();
    std::vector<Poly> all = basis;
    all.insert(all.end(), prods.begin(), prods.end());
    Frame fr = Frame::from_polys(all);
    {
      ZMat brows(r);
      for (std::size_t j = 0; j < r; ++j) brows[j] = fr.coords(basis[j]);
      ZMat h, uu;
      hermite_form(brows, h, uu);
      std::vector<Poly> tri;
      for (const auto& row : h) {
        bool zero = true;
        for (const auto& x : row)
          if (x != 0) zero = false;
        if (!zero) tri.push_back(from_coords(fr, row));
      }
      if (tri.size() != r) throw std::logic_error("invariant basis was not independent");
      basis = std::move(tri);
    }
    slices[d] = basis;
    ZMat hrows(r);
    std::vector<std::size_t> piv(r);
    for (std::size_t j = 0; j < r; ++j) {
      hrows[j] = fr.coords(basis[j]);
      std::size_t c = 0;
      while (c < hrows[j].size() && hrows[j][c] == 0) ++c;
      piv[j] = c;
    }
    auto express = [&](const Poly& f) {
      std::vector<Int> v = fr.coords(f), x(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        Int num = v[piv[i]];
        if (num == 0) continue;
        Int c = num / hrows[i][piv[i]];
        if (c * hrows[i][piv[i]] != num)
          throw std::logic_error("product of invariants not in the invariant lattice");
        x[i] = c;
        for (std::size_t k = piv[i]; k < v.size(); ++k) v[k] -= c * hrows[i][k];
      }
      for (const auto& rest : v)
        if (rest != 0) throw std::logic_error("product of invariants not in the invariant lattice");
      return x;
    };
    // Product coordinates as rows, reduced to a triangular lattice basis first
    // so the Smith form below only sees an r x r matrix.
    ZMat yrows(prods.size());
    for (std::size_t j = 0; j < prods.size(); ++j) yrows[j] = express(prods[j]);
    ZMat hr;
    if (!yrows.empty()) {
      ZMat h, uu;
      hermite_form(yrows, h, uu);
      for (auto& row : h) {
        bool zero = true;
        for (const auto& x : row)
          if (x != 0) zero = false;
        if (!zero) hr.push_back(row);
      }
    }
    // Quotient Z^r / column span of y via Smith form; lifts of quotient
    // generators (columns of U^{-1}) with invariant factor != 1 are the
    // new generators.
    std::size_t q = hr.size();
    ZMat dmat, u, v;
    if (q == 0) {
      dmat = ZMat(r, std::vector<Int>(1, 0));
      u = zmat_identity(r);
    } else {
      ZMat y(r, std::vector<Int>(q, 0));
      for (std::size_t j = 0; j < q; ++j)
        for (std::size_t i = 0; i < r; ++i) y[i][j] = hr[j][i];
      smith_form(y, dmat, u, v);
    }
    ZMat uinv;  // U is unimodular, so its row HNF is I and the transform is U^{-1}
    {
      ZMat hh;
      hermite_form(u, hh, uinv);
      if (hh != zmat_identity(r)) throw std::logic_error("unimodular inverse failed");
    }
    int added = 0;
    std::size_t diag = std::min(r, q);
    for (std::size_t i = 0; i < r; ++i) {
      Int di = (i < diag) ? dmat[i][i] : Int(0);
      if (di == 1) continue;
      std::vector<Int> coeffs(r);
      for (std::size_t j = 0; j < r; ++j) coeffs[j] = uinv[j][i];
      Poly gen;
      for (std::size_t j = 0; j < r; ++j)
        if (coeffs[j] != 0) gen = gen + basis[j] * coeffs[j];
      auto lead = gen.terms().begin();
      if (lead != gen.terms().end() && lead->second < 0) gen = -gen;
      GeneratorEntry e;
      e.degree = d;
      e.name = "g" + std::to_string(d) + (added ? "_" + std::to_string(added) : "");
      e.poly = gen;
      if (sigma_mode) e.sigma_form = gen;
      table.entries.push_back(std::move(e));
      ++added;
    }
  }
  return table;
}

RelationTable find_relations(const GeneratorTable& table, int max_degree) {
  RelationTable out;
  // Multiples of already-found relations span the "old" part of each degree's
  // kernel; only kernel vectors outside that span are reported.
  for (int d = 1; d <= max_degree; ++d) {
    // Monomials of weighted degree d in the generators.
    std::vector<std::pair<Monomial, Poly>> mons;
    std::vector<int> counts(table.entries.size(), 0);
    auto rec = [&](auto&& self, std::size_t from, int rest) -> void {
      if (rest == 0) {
        std::vector<std::pair<std::string, int>> e;
        Poly val = Poly::constant(1);
        bool any = false;
        for (std::size_t i = 0; i < counts.size(); ++i)
          if (counts[i]) {
            e.emplace_back(table.entries[i].name, counts[i]);
            val = val * table.entries[i].poly.pow(counts[i]);
            any = true;
          }
        if (any) mons.emplace_back(Monomial(std::move(e)), val);
        return;
      }
      for (std::size_t i = from; i < table.entries.size(); ++i) {
        if (table.entries[i].degree > rest) continue;
        ++counts[i];
        self(self, i, rest - table.entries[i].degree);
        --counts[i];
      }
    };
    rec(rec, 0, d);
    if (mons.empty()) continue;
    std::vector<Poly> vals;
    for (const auto& [m, v] : mons) vals.push_back(v);
    ZMat ker = span_kernel(vals);
    if (ker.empty()) continue;
    std::map<Monomial, std::size_t> index;
    for (std::size_t j = 0; j < mons.size(); ++j) index[mons[j].first] = j;
    ZMat old;
    // multiples of each earlier relation by generator monomials of
    // complementary degree
    for (const auto& [d0, rel] : out.relations) {
      if (d0 >= d) continue;
      std::vector<std::vector<std::pair<std::string, int>>> co;
      std::vector<int> cnt(table.entries.size(), 0);
      auto rec2 = [&](auto&& self, std::size_t from, int rest) -> void {
        if (rest == 0) {
          std::vector<std::pair<std::string, int>> e;
          for (std::size_t i = 0; i < cnt.size(); ++i)
            if (cnt[i]) e.emplace_back(table.entries[i].name, cnt[i]);
          co.push_back(std::move(e));
          return;
        }
        for (std::size_t i = from; i < table.entries.size(); ++i) {
          if (table.entries[i].degree > rest) continue;
          ++cnt[i];
          self(self, i, rest - table.entries[i].degree);
          --cnt[i];
        }
      };
      rec2(rec2, 0, d - d0);
      for (const auto& e : co) {
        Poly prod = rel * Poly::term(1, Monomial(e));
        std::vector<Int> row(mons.size(), 0);
        for (const auto& [m, c] : prod.terms()) row[index.at(m)] = c;
        old.push_back(std::move(row));
      }
    }
    std::size_t base = old.empty() ? 0 : zrank(old);
    for (auto& row : ker) {
      ZMat trial = old;
      trial.push_back(row);
      if (zrank(trial) == base) continue;  // consequence of earlier relations
      old = std::move(trial);
      base += 1;
      make_primitive(row);
      Poly rel;
      for (std::size_t j = 0; j < mons.size(); ++j)
        if (row[j] != 0) rel = rel + Poly::term(row[j], mons[j].first);
      out.relations.emplace_back(d, rel);
    }
  }
  return out;
}

}  // namespace invar
