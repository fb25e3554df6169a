#pragma once

// Sparse exact multivariate polynomials over Z or over a prime field F_p.
//
// Monomials are sparse exponent lists keyed by variable name; a Poly is a
// canonical map monomial -> nonzero coefficient, so equality of values is
// equality of representations. All operations are pure.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace invar {

using Int = boost::multiprecision::cpp_int;

// kind Integers: p == 0; kind PrimeField: p is an odd prime >= 3,
// coefficients are canonical representatives in [0, p-1].
struct CoeffDomain {
  int64_t p = 0;
  bool operator==(const CoeffDomain&) const = default;
  bool is_field() const { return p != 0; }
};

inline CoeffDomain integers() { return {0}; }
CoeffDomain prime_field(int64_t p);  // validates primality, oddness

bool is_odd_prime(int64_t p);

// Sparse monomial: (variable name, exponent > 0), sorted by name.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<std::string, int>> e);

  int degree() const;
  int exponent(const std::string& var) const;
  const std::vector<std::pair<std::string, int>>& exponents() const { return exps_; }
  Monomial operator*(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::pair<std::string, int>> exps_;
};

class Poly {
 public:
  Poly() = default;  // zero over Z
  explicit Poly(CoeffDomain d) : dom_(d) {}

  static Poly constant(Int c, CoeffDomain d = integers());
  static Poly var(const std::string& name, CoeffDomain d = integers());
  static Poly term(Int c, Monomial m, CoeffDomain d = integers());

  const CoeffDomain& domain() const { return dom_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // total degree; -1 for the zero polynomial
  bool is_homogeneous() const;
  Int coeff(const Monomial& m) const;
  Int constant_part() const { return coeff(Monomial{}); }
  std::vector<std::string> variables() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Int& c) const;
  Poly pow(int e) const;
  bool operator==(const Poly& o) const = default;

  Poly graded_part(int d) const;

  // Ring map determined by variable images; unassigned variables map to
  // themselves. Images must all live in one domain compatible with this one.
  Poly substitute(const std::map<std::string, Poly>& images) const;

  // Variable renaming (must be injective on the support).
  Poly rename(const std::map<std::string, std::string>& names) const;

  Poly reduce_mod(int64_t p) const;  // Z -> F_p (or F_p -> F_p, same p)

  // Text form: terms sorted by (total degree desc, then monomial), e.g.
  // "3*x1^2*x2 - x3". Round-trips through parse exactly.
  std::string str() const;
  static Poly parse(const std::string& text, CoeffDomain d = integers());

  nlohmann::json to_json() const;
  static Poly from_json(const nlohmann::json& j);

 private:
  void add_term(const Monomial& m, Int c);
  CoeffDomain dom_;
  std::map<Monomial, Int> terms_;
};

inline Poly operator*(const Int& c, const Poly& f) { return f * c; }

void require_same_domain(const CoeffDomain& a, const CoeffDomain& b);

}  // namespace invar
