#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dnacodes/gf.hpp"

namespace dnacodes {

// Degree reported for the zero polynomial; stands in for -infinity.
inline constexpr int kZeroDeg = -1;

// Polynomial over GF(q), coefficients in ascending degree, normalized so the
// highest-index coefficient is nonzero (the zero polynomial has no
// coefficients at all).
struct Poly {
  int q = 2;
  std::vector<Sym> c;

  Poly() = default;
  Poly(int q_, std::vector<Sym> coeffs);

  static Poly zero(int q) { return Poly(q, {}); }
  static Poly one(int q) { return Poly(q, {1}); }
  static Poly x_pow(int q, int e);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  Sym at(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Sym{0};
  }
  void normalize();

  bool operator==(const Poly& o) const = default;

  std::string str() const;  // human-readable, e.g. "x^3 + x + 1"
};

Poly operator+(const Poly& a, const Poly& b);  // also subtraction (char 2)
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Sym s, const Poly& a);

// a = q*b + r with deg r < deg b; throws on b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);  // b | a

Poly poly_gcd(Poly a, Poly b);

// c^dagger(X) = X^(deg c) * c(1/X): the coefficient sequence reversed.
Poly reciprocal(const Poly& c);
// X^t * c(1/X) for t >= deg c.
Poly shifted_reciprocal(const Poly& c, int t);
// c(0) != 0 and c = c^dagger / c(0).
bool self_reciprocal(const Poly& c);

// X^n - 1 over GF(q).
Poly xn_minus_one(int q, int n);
// (X^n - 1)/(X - 1) = 1 + X + ... + X^(n-1), the polynomial of the word 1^n.
Poly all_one_poly(int q, int n);

// (a*b) mod (X^n - 1), computed by direct wraparound accumulation.
// Requires deg a, deg b < n.
Poly quotient_mul(const Poly& a, const Poly& b, int n);

Sym poly_eval(const Poly& p, Sym x);

}  // namespace dnacodes
