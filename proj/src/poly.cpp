#include "invar/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace invar {

bool is_odd_prime(int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

CoeffDomain prime_field(int64_t p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
  return {p};
}

void require_same_domain(const CoeffDomain& a, const CoeffDomain& b) {
  if (!(a == b))
    throw std::invalid_argument("coefficient domain mismatch (mod " + std::to_string(a.p) +
                                " vs mod " + std::to_string(b.p) + ")");
}

Monomial::Monomial(std::vector<std::pair<std::string, int>> e) : exps_(std::move(e)) {
  std::erase_if(exps_, [](const auto& p) { return p.second == 0; });
  std::sort(exps_.begin(), exps_.end());
  for (const auto& [v, k] : exps_)
    if (k < 0) throw std::invalid_argument("negative exponent on " + v);
  for (std::size_t i = 1; i < exps_.size(); ++i)
    if (exps_[i].first == exps_[i - 1].first) throw std::invalid_argument("duplicate variable " + exps_[i].first);
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, k] : exps_) d += k;
  return d;
}

int Monomial::exponent(const std::string& var) const {
  for (const auto& [v, k] : exps_)
    if (v == var) return k;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<std::pair<std::string, int>> e = exps_;
  for (const auto& [v, k] : o.exps_) {
    bool found = false;
    for (auto& [w, l] : e)
      if (w == v) { l += k; found = true; break; }
    if (!found) e.emplace_back(v, k);
  }
  return Monomial(std::move(e));
}

void Poly::add_term(const Monomial& m, Int c) {
  if (dom_.is_field()) {
    c %= dom_.p;
    if (c < 0) c += dom_.p;
  }
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(c));
    return;
  }
  it->second += c;
  if (dom_.is_field()) it->second %= dom_.p;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::constant(Int c, CoeffDomain d) {
  Poly f(d);
  f.add_term(Monomial{}, std::move(c));
  return f;
}

Poly Poly::var(const std::string& name, CoeffDomain d) {
  Poly f(d);
  f.add_term(Monomial({{name, 1}}), 1);
  return f;
}

Poly Poly::term(Int c, Monomial m, CoeffDomain d) {
  Poly f(d);
  f.add_term(m, std::move(c));
  return f;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Int Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

std::vector<std::string> Poly::variables() const {
  std::vector<std::string> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, k] : m.exponents())
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  return vs;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_domain(dom_, o.dom_);
  Poly f = *this;
  for (const auto& [m, c] : o.terms_) f.add_term(m, c);
  return f;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly f(dom_);
  for (const auto& [m, c] : terms_) f.add_term(m, -c);
  return f;
}

Poly Poly::operator*(const Poly& o) const {
  require_same_domain(dom_, o.dom_);
  Poly f(dom_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) f.add_term(m1 * m2, c1 * c2);
  return f;
}

Poly Poly::operator*(const Int& c) const {
  Poly f(dom_);
  for (const auto& [m, k] : terms_) f.add_term(m, k * c);
  return f;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Poly r = Poly::constant(1, dom_);
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::graded_part(int d) const {
  Poly f(dom_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) f.add_term(m, c);
  return f;
}

Poly Poly::substitute(const std::map<std::string, Poly>& images) const {
  for (const auto& [v, g] : images) require_same_domain(dom_, g.domain());
  Poly out(dom_);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(c, dom_);
    for (const auto& [v, k] : m.exponents()) {
      auto it = images.find(v);
      Poly base = (it == images.end()) ? Poly::var(v, dom_) : it->second;
      t = t * base.pow(k);
    }
    out = out + t;
  }
  return out;
}

Poly Poly::rename(const std::map<std::string, std::string>& names) const {
  Poly out(dom_);
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<std::string, int>> e;
    for (const auto& [v, k] : m.exponents()) {
      auto it = names.find(v);
      e.emplace_back(it == names.end() ? v : it->second, k);
    }
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Poly Poly::reduce_mod(int64_t p) const {
  if (dom_.is_field() && dom_.p != p) throw std::invalid_argument("cannot change modulus");
  Poly out(prime_field(p));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

namespace {

// (degree desc, then monomial order) for display.
std::vector<std::pair<Monomial, Int>> display_order(const std::map<Monomial, Int>& terms) {
  std::vector<std::pair<Monomial, Int>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first < b.first;
  });
  return v;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : display_order(terms_)) {
    Int a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool wrote = false;
    if (a != 1 || m.exponents().empty()) {
      os << a;
      wrote = true;
    }
    for (const auto& [v, k] : m.exponents()) {
      if (wrote) os << "*";
      os << v;
      if (k > 1) os << "^" << k;
      wrote = true;
    }
  }
  return os.str();
}

Poly Poly::parse(const std::string& text, CoeffDomain d) {
  Poly out(d);
  std::size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip();
  if (text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
  int sign = 1;
  while (i < text.size()) {
    skip();
    if (text[i] == '+') { sign = 1; ++i; skip(); }
    else if (text[i] == '-') { sign = -1; ++i; skip(); }
    Int coeff = 1;
    std::vector<std::pair<std::string, int>> exps;
    bool any = false;
    while (i < text.size()) {
      skip();
      if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
      if (text[i] == '*') { ++i; continue; }
      if (std::isdigit((unsigned char)text[i])) {
        std::string num;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) num += text[i++];
        coeff *= Int(num);
        any = true;
      } else if (std::isalpha((unsigned char)text[i])) {
        std::string name;
        while (i < text.size() && (std::isalnum((unsigned char)text[i]) || text[i] == '_')) name += text[i++];
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::string num;
          while (i < text.size() && std::isdigit((unsigned char)text[i])) num += text[i++];
          e = std::stoi(num);
        }
        exps.emplace_back(name, e);
        any = true;
      } else {
        throw std::invalid_argument("bad character in polynomial: " + text.substr(i, 1));
      }
    }
    if (!any) break;
    Monomial m(std::move(exps));
    out.add_term(m, sign * coeff);
    sign = 1;
  }
  return out;
}

nlohmann::json Poly::to_json() const {
  nlohmann::json j;
  j["domain"] = dom_.p;
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& [m, c] : display_order(terms_)) {
    nlohmann::json e = nlohmann::json::object();
    for (const auto& [v, k] : m.exponents()) e[v] = k;
    ts.push_back({{"exponents", e}, {"coeff", c.str()}});
  }
  j["terms"] = ts;
  return j;
}

Poly Poly::from_json(const nlohmann::json& j) {
  CoeffDomain d{j.at("domain").get<int64_t>()};
  if (d.p != 0 && !is_odd_prime(d.p)) throw std::invalid_argument("bad modulus in JSON");
  Poly f(d);
  for (const auto& t : j.at("terms")) {
    std::vector<std::pair<std::string, int>> e;
    for (auto it = t.at("exponents").begin(); it != t.at("exponents").end(); ++it)
      e.emplace_back(it.key(), it.value().get<int>());
    f.add_term(Monomial(std::move(e)), Int(t.at("coeff").get<std::string>()));
  }
  return f;
}

}  // namespace invar
