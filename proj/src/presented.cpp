#include "invar/presented.hpp"

#include <stdexcept>

#include "invar/zlin.hpp"

namespace invar {

namespace {

int64_t modp(Int c, int64_t p) {
  Int r = c % p;
  if (r < 0) r += p;
  return r.convert_to<int64_t>();
}

void tors_add(TorsionPart& t, std::pair<int, int> key, int64_t c, int64_t p) {
  c = ((c % p) + p) % p;
  if (c == 0) return;
  auto [it, fresh] = t.emplace(key, c);
  if (!fresh) {
    it->second = (it->second + c) % p;
    if (it->second == 0) t.erase(it);
  }
}

TorsionPart tors_normalize(const TorsionPart& t, int64_t p) {
  TorsionPart out;
  for (const auto& [k, c] : t) tors_add(out, k, c, p);
  return out;
}

}  // namespace

CycGLElement cycgl_make(int64_t p, Poly inv, TorsionPart tors) {
  if (!is_invariant_under(inv, {perm_cycle(static_cast<int>(p))}))
    throw std::invalid_argument("invariant slot is not fixed by the cycle (1 2 ... p)");
  for (const auto& [k, c] : tors)
    if (k.first < 1 || k.second < 0) throw std::invalid_argument("torsion monomial needs xi exponent >= 1");
  return {p, std::move(inv), tors_normalize(tors, p)};
}

CycGLElement cycgl_xi(int64_t p) { return {p, Poly(), {{{1, 0}, 1}}}; }

std::map<int, int64_t> cycgl_epsilon(const Poly& inv, int64_t p) {
  std::map<int, int64_t> out;
  for (const auto& [m, c] : inv.terms()) {
    const auto& e = m.exponents();
    if (e.empty()) {
      if (int64_t v = modp(c, p)) out[0] = v;
      continue;
    }
    if (static_cast<int64_t>(e.size()) != p) continue;
    int r = e[0].second;
    bool same = true;
    for (const auto& [v, k] : e)
      if (k != r) { same = false; break; }
    if (!same) continue;
    if (int64_t v = modp(c, p)) out[r] = v;
  }
  return out;
}

CycGLElement cycgl_multiply(const CycGLElement& a, const CycGLElement& b) {
  if (a.p != b.p) throw std::invalid_argument("modulus mismatch");
  int64_t p = a.p;
  CycGLElement out{p, a.inv * b.inv, {}};
  auto ea = cycgl_epsilon(a.inv, p);
  auto eb = cycgl_epsilon(b.inv, p);
  for (const auto& [r, c] : ea)
    for (const auto& [k, d] : b.tors) tors_add(out.tors, {k.first, k.second + r}, c * d, p);
  for (const auto& [r, c] : eb)
    for (const auto& [k, d] : a.tors) tors_add(out.tors, {k.first, k.second + r}, c * d, p);
  for (const auto& [k1, c1] : a.tors)
    for (const auto& [k2, c2] : b.tors)
      tors_add(out.tors, {k1.first + k2.first, k1.second + k2.second}, c1 * c2, p);
  return out;
}

CycGLElement cycgl_transfer(const Poly& f, int64_t p) {
  Perm c = perm_cycle(static_cast<int>(p));
  Poly sum;
  Perm g = perm_identity(static_cast<int>(p));
  for (int64_t i = 0; i < p; ++i) {
    sum = sum + apply_perm(g, f);
    g = perm_compose(c, g);
  }
  return {p, sum, {}};
}

FpBivar cycgl_restrict_to_cycmu(const CycGLElement& a) {
  int64_t p = a.p;
  auto dom = prime_field(p);
  int pp = static_cast<int>(p);
  FpBivar sp_img = fp_eta(p).pow(pp) - fp_eta(p) * fp_xi(p).pow(pp - 1);
  FpBivar out(dom);
  for (const auto& [r, c] : cycgl_epsilon(a.inv, p)) out = out + sp_img.pow(r) * Int(c);
  for (const auto& [k, c] : a.tors)
    out = out + fp_xi(p).pow(k.first) * sp_img.pow(k.second) * Int(c);
  return out;
}

bool cycgl_injectivity_check(int64_t p, int d) {
  // The torus restriction is the identity on the invariant slot, so the
  // kernel can only meet the torsion sector; check that the images
  // xi^i (eta^p - xi^{p-1} eta)^j, i + pj = d, i >= 1, are independent.
  int pp = static_cast<int>(p);
  FpBivar sp_img = fp_eta(p).pow(pp) - fp_eta(p) * fp_xi(p).pow(pp - 1);
  std::vector<FpBivar> imgs;
  for (int j = 0; j * pp <= d; ++j) {
    int i = d - j * pp;
    if (i < 1) continue;
    imgs.push_back(fp_xi(p).pow(i) * sp_img.pow(j));
  }
  if (imgs.empty()) return true;
  PMat mat;
  for (const auto& f : imgs) {
    std::vector<int64_t> row(d + 1, 0);
    for (const auto& [m, c] : f.terms()) row[m.exponent("xi")] = c.convert_to<int64_t>();
    mat.push_back(std::move(row));
  }
  return prank(mat, p) == imgs.size();
}

CycGLElement CycPGLModel::reduce(const CycGLElement& a) const {
  Poly sub;
  for (int i = 2; i <= p; ++i) sub = sub - Poly::var(xvar(i));
  return {p, a.inv.substitute({{xvar(1), sub}}), a.tors};
}

Poly CycPGLModel::restrict_inv_to_mu(const CycGLElement& a) const {
  std::map<std::string, Poly> images;
  for (int i = 1; i <= p; ++i) images[xvar(static_cast<int>(i))] = Poly::var("eta");
  return a.inv.substitute(images).reduce_mod(p);
}

// ---- BPGL ----

BPGLElement bpgl_make(int64_t p, Poly inv_sigma, TorsionPart tors) {
  for (const auto& [k, c] : tors)
    if (k.first < 0 || k.second < 1) throw std::invalid_argument("torsion monomial needs rho exponent >= 1");
  return {p, std::move(inv_sigma), tors_normalize(tors, p)};
}

BPGLElement bpgl_rho(int64_t p) { return {p, Poly(), {{{0, 1}, 1}}}; }

std::map<int, int64_t> bpgl_epsilon(const Poly& inv_sigma, int64_t p) {
  Poly img = restrict_sigma_to_mu(inv_sigma, static_cast<int>(p));
  int64_t step = p * p - p;
  std::map<int, int64_t> out;
  for (const auto& [m, c] : img.terms()) {
    int e = m.exponent("eta");
    if (e % step != 0)
      throw std::logic_error("restriction image not a polynomial in eta^(p^2-p); invalid invariant");
    int i = e / static_cast<int>(step);
    int64_t v = modp(c * ((i % 2) ? -1 : 1), p);
    if (v) out[i] = v;
  }
  return out;
}

BPGLElement bpgl_multiply(const BPGLElement& a, const BPGLElement& b) {
  if (a.p != b.p) throw std::invalid_argument("modulus mismatch");
  int64_t p = a.p;
  BPGLElement out{p, a.inv * b.inv, {}};
  auto ea = bpgl_epsilon(a.inv, p);
  auto eb = bpgl_epsilon(b.inv, p);
  for (const auto& [i, c] : ea)
    for (const auto& [k, d] : b.tors) tors_add(out.tors, {k.first + i, k.second}, c * d, p);
  for (const auto& [i, c] : eb)
    for (const auto& [k, d] : a.tors) tors_add(out.tors, {k.first + i, k.second}, c * d, p);
  for (const auto& [k1, c1] : a.tors)
    for (const auto& [k2, c2] : b.tors)
      tors_add(out.tors, {k1.first + k2.first, k1.second + k2.second}, c1 * c2, p);
  return out;
}

RestrictionImage bpgl_restrict(const BPGLElement& a) {
  int64_t p = a.p;
  FpBivar q = dickson_q(p), r = dickson_r(p);
  FpBivar cy(prime_field(p));
  for (const auto& [i, c] : bpgl_epsilon(a.inv, p)) cy = cy + (-q).pow(i) * Int(c);
  for (const auto& [k, c] : a.tors) cy = cy + (-q).pow(k.first) * r.pow(k.second) * Int(c);
  return {a.inv, cy};
}

Poly adjoint_total_chern_on_torus(int64_t p, int i) {
  int64_t top = p * p - p;
  if (i < 1 || i > top) throw std::invalid_argument("chern degree out of range [1, p^2-p]");
  Poly prod = Poly::constant(1);
  for (int a = 1; a <= p; ++a)
    for (int b = 1; b <= p; ++b) {
      if (a == b) continue;
      prod = prod * (Poly::constant(1) + Poly::var(xvar(a)) - Poly::var(xvar(b)));
    }
  return prod.graded_part(i);
}

nlohmann::json BPGLElement::to_json() const {
  nlohmann::json jt = nlohmann::json::array();
  for (const auto& [k, c] : tors) jt.push_back({{"i", k.first}, {"j", k.second}, {"coeff", c}});
  return {{"p", p}, {"inv", inv.to_json()}, {"tors", jt}};
}

BPGLElement BPGLElement::from_json(const nlohmann::json& j) {
  BPGLElement e;
  e.p = j.at("p").get<int64_t>();
  e.inv = Poly::from_json(j.at("inv"));
  for (const auto& t : j.at("tors"))
    e.tors[{t.at("i").get<int>(), t.at("j").get<int>()}] = t.at("coeff").get<int64_t>();
  e.tors = tors_normalize(e.tors, e.p);
  return e;
}

// ---- H* ----

HBPGLElement hbpgl_beta(int64_t p) { return {{p, Poly(), {}}, {{{0, 0}, 1}}}; }

HBPGLElement hbpgl_multiply(const HBPGLElement& a, const HBPGLElement& b) {
  if (a.even.p != b.even.p) throw std::invalid_argument("modulus mismatch");
  int64_t p = a.even.p;
  HBPGLElement out{bpgl_multiply(a.even, b.even), {}};
  auto act = [&](const BPGLElement& ev, const TorsionPart& odd) {
    auto eps = bpgl_epsilon(ev.inv, p);
    for (const auto& [i, c] : eps)
      for (const auto& [k, d] : odd) tors_add(out.odd, {k.first + i, k.second}, c * d, p);
    for (const auto& [k1, c1] : ev.tors)
      for (const auto& [k2, c2] : odd)
        tors_add(out.odd, {k1.first + k2.first, k1.second + k2.second}, c1 * c2, p);
  };
  act(a.even, b.odd);
  act(b.even, a.odd);
  // odd * odd carries beta^2 = 0.
  return out;
}

AbelianGroupDesc graded_group_from_model(int64_t p, int m, GradedSlice which) {
  if (m < 0) throw std::invalid_argument("negative degree");
  int64_t step = p * p - p, rho_deg = p + 1;
  switch (which) {
    case GradedSlice::Chow: {
      AbelianGroupDesc g;
      g.free_rank = invariant_rank(p, TorusKind::PGL, {GroupSpec::FullSymmetric, static_cast<int>(p)}, m);
      int64_t t = 0;
      for (int64_t j = 1; j * rho_deg <= m; ++j)
        if ((m - j * rho_deg) % step == 0) ++t;
      g.torsion.assign(t, p);
      return g;
    }
    case GradedSlice::CohomologyEven:
      if (m % 2 != 0) throw std::invalid_argument("even cohomology requested in odd degree");
      return graded_group_from_model(p, m / 2, GradedSlice::Chow);
    case GradedSlice::CohomologyOdd: {
      AbelianGroupDesc g;
      if (m % 2 == 0) throw std::invalid_argument("odd cohomology requested in even degree");
      if (m < 3) return g;
      int64_t w = (m - 3) / 2, t = 0;  // Chow weight of the delta^i rho^j factor
      for (int64_t j = 0; j * rho_deg <= w; ++j)
        if ((w - j * rho_deg) % step == 0) ++t;
      g.torsion.assign(t, p);
      return g;
    }
  }
  return {};
}

}  // namespace invar
