#include "invar/zlin.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace invar {

ZMat zmat_identity(std::size_t n) {
  ZMat id(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

ZMat zmat_transpose(const ZMat& a) {
  ZMat t(cols(a), std::vector<Int>(rows(a)));
  for (std::size_t i = 0; i < rows(a); ++i)
    for (std::size_t j = 0; j < cols(a); ++j) t[j][i] = a[i][j];
  return t;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  assert(cols(a) == rows(b));
  ZMat c(rows(a), std::vector<Int>(cols(b), 0));
  for (std::size_t i = 0; i < rows(a); ++i)
    for (std::size_t k = 0; k < cols(a); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols(b); ++j)
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

namespace {

void row_axpy(std::vector<Int>& dst, const std::vector<Int>& src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] -= q * src[j];
}

}  // namespace

void hermite_form(const ZMat& a, ZMat& h, ZMat& u) {
  h = a;
  std::size_t m = rows(h), n = cols(h);
  u = zmat_identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclidean elimination in column c below row r.
    while (true) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i)
        if (h[i][c] != 0 && (piv == m || abs(h[i][c]) < abs(h[piv][c]))) piv = i;
      if (piv == m) break;
      std::swap(h[r], h[piv]);
      std::swap(u[r], u[piv]);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h[i][c] == 0) continue;
        Int q = h[i][c] / h[r][c];
        row_axpy(h[i], h[r], q);
        row_axpy(u[i], u[r], q);
        if (h[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < m && h[r][c] != 0) {
      if (h[r][c] < 0) {
        for (auto& x : h[r]) x = -x;
        for (auto& x : u[r]) x = -x;
      }
      for (std::size_t i = 0; i < r; ++i) {
        Int q = h[i][c] / h[r][c];
        if (h[i][c] < 0 && h[i][c] % h[r][c] != 0) q -= 1;
        row_axpy(h[i], h[r], q);
        row_axpy(u[i], u[r], q);
      }
      ++r;
    }
  }
}

std::size_t zrank(const ZMat& a) {
  if (a.empty() || a[0].empty()) return 0;
  ZMat h, u;
  hermite_form(a, h, u);
  std::size_t r = 0;
  for (const auto& row : h)
    if (std::any_of(row.begin(), row.end(), [](const Int& x) { return x != 0; })) ++r;
  return r;
}

ZMat kernel_lattice(const ZMat& a) {
  std::size_t n = cols(a);
  if (rows(a) == 0 || n == 0) return zmat_identity(n);
  ZMat at = zmat_transpose(a);  // n x m
  ZMat h, u;
  hermite_form(at, h, u);  // u * a^T = h; zero rows of h give kernel rows
  ZMat ker;
  for (std::size_t i = 0; i < rows(h); ++i) {
    bool zero = std::all_of(h[i].begin(), h[i].end(), [](const Int& x) { return x == 0; });
    if (zero) ker.push_back(u[i]);
  }
  return ker;
}

void smith_form(const ZMat& a, ZMat& d, ZMat& u, ZMat& v) {
  d = a;
  std::size_t m = rows(d), n = cols(d);
  u = zmat_identity(m);
  v = zmat_identity(n);
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m; ++i) d[i][dst] -= q * d[i][src];
    for (std::size_t i = 0; i < n; ++i) v[i][dst] -= q * v[i][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < m; ++i) std::swap(d[i][x], d[i][y]);
    for (std::size_t i = 0; i < n; ++i) std::swap(v[i][x], v[i][y]);
  };
  std::size_t t = std::min(m, n);
  for (std::size_t k = 0; k < t; ++k) {
    while (true) {
      // Find the smallest nonzero entry in the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (d[i][j] != 0 && (pi == m || abs(d[i][j]) < abs(d[pi][pj]))) pi = i, pj = j;
      if (pi == m) break;
      std::swap(d[k], d[pi]);
      std::swap(u[k], u[pi]);
      col_swap(k, pj);
      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        Int q = d[i][k] / d[k][k];
        row_axpy(d[i], d[k], q);
        row_axpy(u[i], u[k], q);
        if (d[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        Int q = d[k][j] / d[k][k];
        col_axpy(j, k, q);
        if (d[k][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility fix-up: d[k][k] must divide everything below-right.
      bool fixed = true;
      for (std::size_t i = k + 1; i < m && fixed; ++i)
        for (std::size_t j = k + 1; j < n && fixed; ++j)
          if (d[i][j] % d[k][k] != 0) {
            for (std::size_t jj = 0; jj < n; ++jj) d[k][jj] += d[i][jj];
            for (std::size_t jj = 0; jj < m; ++jj) u[k][jj] += u[i][jj];
            fixed = false;
          }
      if (fixed) break;
    }
    if (d[k][k] < 0) {
      for (auto& x : d[k]) x = -x;
      for (auto& x : u[k]) x = -x;
    }
  }
}

bool zsolve(const ZMat& a, const std::vector<Int>& b, std::vector<Int>& x) {
  // Solve via SNF: U A V = D, so A (V y) = b with D y = U b.
  ZMat d, u, v;
  smith_form(a, d, u, v);
  std::size_t m = rows(a), n = cols(a);
  std::vector<Int> ub(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ub[i] += u[i][j] * b[j];
  std::vector<Int> y(n, 0);
  std::size_t t = std::min(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    Int di = (i < t) ? d[i][i] : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return false;
    } else {
      if (ub[i] % di != 0) return false;
      y[i] = ub[i] / di;
    }
  }
  x.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i] += v[i][j] * y[j];
  return true;
}

ZLinearSolver::ZLinearSolver(const ZMat& a) : m_(rows(a)), n_(cols(a)) {
  smith_form(a, d_, u_, v_);
}

bool ZLinearSolver::solve(const std::vector<Int>& b, std::vector<Int>& x) const {
  std::vector<Int> ub(m_, 0);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j)
      if (u_[i][j] != 0 && b[j] != 0) ub[i] += u_[i][j] * b[j];
  std::vector<Int> y(n_, 0);
  std::size_t t = std::min(m_, n_);
  for (std::size_t i = 0; i < m_; ++i) {
    Int di = (i < t) ? d_[i][i] : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return false;
    } else {
      if (ub[i] % di != 0) return false;
      y[i] = ub[i] / di;
    }
  }
  x.assign(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (v_[i][j] != 0 && y[j] != 0) x[i] += v_[i][j] * y[j];
  return true;
}

bool same_row_lattice(const ZMat& a, const ZMat& b) {
  if (cols(a) != cols(b)) return false;
  ZMat ha, hb, u;
  hermite_form(a, ha, u);
  hermite_form(b, hb, u);
  auto nonzero = [](const ZMat& h) {
    ZMat out;
    for (const auto& r : h)
      if (std::any_of(r.begin(), r.end(), [](const Int& x) { return x != 0; })) out.push_back(r);
    return out;
  };
  return nonzero(ha) == nonzero(hb);
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  // Sign normalization: first nonzero entry positive.
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

namespace {

int64_t pinv(int64_t a, int64_t p) {
  // Fermat; p is prime and a != 0 mod p.
  int64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Row echelon over F_p; returns pivot columns.
std::vector<std::size_t> prref(PMat& a, int64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t m = a.size(), n = m ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i)
      if (a[i][c] % p != 0) { piv = i; break; }
    if (piv == m) continue;
    std::swap(a[r], a[piv]);
    int64_t inv = pinv(((a[r][c] % p) + p) % p, p);
    for (auto& x : a[r]) x = ((x % p) * inv % p + p) % p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      int64_t f = ((a[i][c] % p) + p) % p;
      if (!f) continue;
      for (std::size_t j = 0; j < n; ++j)
        a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t prank(PMat a, int64_t p) { return prref(a, p).size(); }

PMat pkernel(PMat a, int64_t p) {
  std::size_t n = a.empty() ? 0 : a[0].size();
  auto pivots = prref(a, p);
  std::vector<bool> ispiv(n, false);
  for (auto c : pivots) ispiv[c] = true;
  PMat ker;
  for (std::size_t c = 0; c < n; ++c) {
    if (ispiv[c]) continue;
    std::vector<int64_t> v(n, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = ((-a[i][c]) % p + p) % p;
    ker.push_back(std::move(v));
  }
  return ker;
}

}  // namespace invar
