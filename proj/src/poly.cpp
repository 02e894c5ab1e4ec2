#include "dnacodes/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dnacodes {

Poly::Poly(int q_, std::vector<Sym> coeffs) : q(q_), c(std::move(coeffs)) {
  require_q(q);
  for (Sym s : c) require_sym(q, s);
  normalize();
}

void Poly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::x_pow(int q, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  std::vector<Sym> c(e + 1, 0);
  c[e] = 1;
  return Poly(q, std::move(c));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string coef;
    if (c[i] == 2) coef = "w";
    else if (c[i] == 3) coef = "(w+1)";
    else if (i == 0) coef = "1";
    if (i == 0) os << (coef.empty() ? "1" : coef);
    else {
      if (!coef.empty()) os << coef << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

static void require_same_field(const Poly& a, const Poly& b) {
  if (a.q != b.q) throw std::invalid_argument("field mismatch");
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  std::vector<Sym> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.at(static_cast<int>(i)) ^ b.at(static_cast<int>(i));
  return Poly(a.q, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.q);
  std::vector<Sym> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      c[i + j] ^= gf_mul(a.q, a.c[i], b.c[j]);
  }
  return Poly(a.q, std::move(c));
}

Poly operator*(Sym s, const Poly& a) {
  std::vector<Sym> c(a.c);
  for (Sym& x : c) x = gf_mul(a.q, s, x);
  return Poly(a.q, std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const int db = b.degree();
  const Sym lead_inv = gf_inv(b.q, b.c.back());
  std::vector<Sym> rem(a.c);
  std::vector<Sym> quo(a.degree() >= db ? a.degree() - db + 1 : 0, 0);
  for (int i = a.degree(); i >= db; --i) {
    const Sym r = rem[i];
    if (r == 0) continue;
    const Sym f = gf_mul(b.q, r, lead_inv);
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] ^= gf_mul(b.q, f, b.c[j]);
  }
  return {Poly(a.q, std::move(quo)), Poly(a.q, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

bool divides(const Poly& b, const Poly& a) { return poly_mod(a, b).is_zero(); }

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.c.back() != 1) a = gf_inv(a.q, a.c.back()) * a;
  return a;
}

Poly reciprocal(const Poly& c) {
  std::vector<Sym> r(c.c.rbegin(), c.c.rend());
  return Poly(c.q, std::move(r));
}

Poly shifted_reciprocal(const Poly& c, int t) {
  if (t < c.degree()) throw std::invalid_argument("shift below degree");
  std::vector<Sym> r(t + 1, 0);
  for (int i = 0; i <= c.degree(); ++i) r[t - i] = c.c[i];
  return Poly(c.q, std::move(r));
}

bool self_reciprocal(const Poly& c) {
  if (c.is_zero() || c.at(0) == 0) return false;
  return c == gf_inv(c.q, c.at(0)) * reciprocal(c);
}

Poly xn_minus_one(int q, int n) {
  if (n < 1) throw std::invalid_argument("length must be positive");
  std::vector<Sym> c(n + 1, 0);
  c[0] = 1;  // -1 = 1 in characteristic 2
  c[n] = 1;
  return Poly(q, std::move(c));
}

Poly all_one_poly(int q, int n) {
  return Poly(q, std::vector<Sym>(n, 1));
}

Poly quotient_mul(const Poly& a, const Poly& b, int n) {
  require_same_field(a, b);
  if (a.degree() >= n || b.degree() >= n)
    throw std::invalid_argument("operands must have degree < n");
  std::vector<Sym> c(n, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      c[(i + j) % n] ^= gf_mul(a.q, a.c[i], b.c[j]);
  }
  return Poly(a.q, std::move(c));
}

Sym poly_eval(const Poly& p, Sym x) {
  Sym acc = 0;
  for (int i = p.degree(); i >= 0; --i)
    acc = gf_add(p.q, gf_mul(p.q, acc, x), p.c[i]);
  return acc;
}

}  // namespace dnacodes
