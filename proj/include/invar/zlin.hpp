#pragma once

// Exact linear algebra over Z (arbitrary precision) and over F_p.
// Matrices are dense row-major vectors of rows; sizes here are small
// (a few hundred rows/columns at most), so the classical Euclidean
// HNF/SNF algorithms are adequate.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace invar {

using Int = boost::multiprecision::cpp_int;
using ZMat = std::vector<std::vector<Int>>;

inline std::size_t rows(const ZMat& a) { return a.size(); }
inline std::size_t cols(const ZMat& a) { return a.empty() ? 0 : a[0].size(); }

ZMat zmat_identity(std::size_t n);
ZMat zmat_transpose(const ZMat& a);
ZMat zmat_mul(const ZMat& a, const ZMat& b);

// Row-style Hermite normal form: returns H and unimodular U with U*A = H.
// Pivot columns are scanned left to right; pivots are made positive and
// entries above a pivot are reduced into [0, pivot).
void hermite_form(const ZMat& a, ZMat& h, ZMat& u);

// Rank of the integer matrix (= rank over Q).
std::size_t zrank(const ZMat& a);

// Basis of {x : A x = 0} as rows; the basis generates the full (saturated)
// kernel lattice since it comes from a unimodular transform.
ZMat kernel_lattice(const ZMat& a);

// Smith normal form: U*A*V = D with U, V unimodular, D diagonal with
// d_1 | d_2 | ... >= 0.
void smith_form(const ZMat& a, ZMat& d, ZMat& u, ZMat& v);

// Solve A x = b over the integers; returns false if no integral solution.
bool zsolve(const ZMat& a, const std::vector<Int>& b, std::vector<Int>& x);

// Repeated-solve helper: factors A once (Smith form), then solves
// A x = b for many right-hand sides.
class ZLinearSolver {
 public:
  explicit ZLinearSolver(const ZMat& a);
  bool solve(const std::vector<Int>& b, std::vector<Int>& x) const;

 private:
  std::size_t m_, n_;
  ZMat d_, u_, v_;
};

// Column-span lattice comparison via HNF of transposes.
bool same_row_lattice(const ZMat& a, const ZMat& b);

// Divide a vector by the gcd of its entries (no-op on the zero vector).
void make_primitive(std::vector<Int>& v);

// ---- F_p ----

using PMat = std::vector<std::vector<int64_t>>;

std::size_t prank(PMat a, int64_t p);

// Kernel basis (rows) of A x = 0 over F_p.
PMat pkernel(PMat a, int64_t p);

}  // namespace invar
