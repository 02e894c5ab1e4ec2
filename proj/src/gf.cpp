#include "dnacodes/gf.hpp"

#include <array>
#include <numeric>

#include "dnacodes/poly.hpp"

namespace dnacodes {

namespace {

// GF(4) multiplication table for x^2+x+1: w*w = w+1, w*(w+1) = 1.
constexpr std::array<std::array<Sym, 4>, 4> kGf4Mul = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};
constexpr std::array<Sym, 4> kGf4Inv = {0, 1, 3, 2};

// Lexicographically smallest primitive polynomial over GF(2) per degree,
// as a bitmask with bit i the coefficient of x^i. Degrees 1..32.
constexpr std::array<std::uint64_t, 33> kPrimPoly = {
    0,           0x3,        0x7,        0xB,        0x13,
    0x25,        0x43,       0x83,       0x11D,      0x211,
    0x409,       0x805,      0x1053,     0x201B,     0x402B,
    0x8003,      0x1002D,    0x20009,    0x40027,    0x80027,
    0x100009,    0x200005,   0x400003,   0x800021,   0x100001B,
    0x2000009,   0x4000047,  0x8000027,  0x10000009, 0x20000005,
    0x40000053,  0x80000009, 0x1000000AF,
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      fs.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

void require_q(int q) {
  if (!valid_q(q)) throw std::invalid_argument("field size must be 2 or 4");
}

void require_sym(int q, Sym a) {
  if (a >= q) throw std::invalid_argument("symbol code out of field range");
}

Sym gf_add(int q, Sym a, Sym b) {
  require_sym(q, a);
  require_sym(q, b);
  return a ^ b;
}

Sym gf_mul(int q, Sym a, Sym b) {
  require_sym(q, a);
  require_sym(q, b);
  if (q == 2) return a & b;
  return kGf4Mul[a][b];
}

Sym gf_inv(int q, Sym a) {
  require_sym(q, a);
  if (a == 0) throw std::domain_error("inversion of zero");
  return q == 2 ? Sym{1} : kGf4Inv[a];
}

Sym gf_pow(int q, Sym a, std::uint64_t e) {
  require_sym(q, a);
  Sym r = 1;
  while (e) {
    if (e & 1) r = gf_mul(q, r, a);
    a = gf_mul(q, a, a);
    e >>= 1;
  }
  return r;
}

char sym_to_base(Sym s) {
  switch (s) {
    case 0: return 'A';
    case 1: return 'T';
    case 2: return 'C';
    case 3: return 'G';
    default: throw std::invalid_argument("symbol outside GF(4)");
  }
}

Sym base_to_sym(char b) {
  switch (b) {
    case 'A': return 0;
    case 'T': return 1;
    case 'C': return 2;
    case 'G': return 3;
    default: throw std::invalid_argument("character outside DNA alphabet");
  }
}

ExtField ExtField::build(int q, int m) {
  require_q(q);
  if (m < 1 || m > 16) throw std::invalid_argument("extension degree out of range [1,16]");

  ExtField F;
  F.q_ = q;
  F.m_ = m;
  F.bin_deg_ = (q == 4) ? 2 * m : m;
  F.mod_mask_ = kPrimPoly[F.bin_deg_];
  F.order_ = std::uint64_t{1} << F.bin_deg_;
  F.factors_ = prime_factors(F.order_ - 1);

  if (F.bin_deg_ <= 16) {
    const std::uint32_t n = static_cast<std::uint32_t>(F.order_ - 1);
    F.exp_.assign(n, 0);
    F.log_.assign(F.order_, 0);
    std::uint64_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      F.exp_[i] = static_cast<std::uint32_t>(x);
      F.log_[x] = i;
      x = F.mul_notable(x, F.gen());
    }
    if (x != 1) throw std::logic_error("modulus table entry is not primitive");
  }

  if (q == 4) {
    F.omega_ = F.pow(F.gen(), (F.order_ - 1) / 3);
    // omega has order 3, so it satisfies x^2 + x + 1 = 0.
    if (F.mul(F.omega_, F.omega_) != (F.omega_ ^ 1))
      throw std::logic_error("GF(4) embedding failed");
  }

  // Minimal polynomial of gen() over GF(q) has degree exactly m and serves
  // as the declared modulus over the base field.
  F.modulus_over_base_ = std::make_shared<Poly>(minimal_polynomial(F, F.gen()));
  if (F.modulus_over_base_->degree() != m)
    throw std::logic_error("base-field modulus has wrong degree");
  return F;
}

const Poly& ExtField::modulus() const { return *modulus_over_base_; }

ExtField::Elem ExtField::mul_notable(Elem a, Elem b) const {
  Elem r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> bin_deg_) & 1) a ^= mod_mask_;
  }
  return r;
}

ExtField::Elem ExtField::mul(Elem a, Elem b) const {
  if (a >= order_ || b >= order_) throw std::invalid_argument("element out of field");
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t n = order_ - 1;
    std::uint64_t i = log_[a] + log_[b];
    if (i >= n) i -= n;
    return exp_[i];
  }
  return mul_notable(a, b);
}

ExtField::Elem ExtField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

ExtField::Elem ExtField::inv(Elem a) const {
  if (a >= order_) throw std::invalid_argument("element out of field");
  if (a == 0) throw std::domain_error("inversion of zero");
  if (!exp_.empty()) {
    const std::uint64_t n = order_ - 1;
    const std::uint64_t i = log_[a];
    return exp_[i == 0 ? 0 : n - i];
  }
  return pow(a, order_ - 2);
}

std::uint64_t ExtField::dlog(Elem a) const {
  if (a == 0) throw std::domain_error("discrete log of zero");
  if (a >= order_) throw std::invalid_argument("element out of field");
  if (!exp_.empty()) return log_[a];
  Elem x = 1;
  for (std::uint64_t i = 0; i < order_ - 1; ++i) {
    if (x == a) return i;
    x = mul(x, gen());
  }
  throw std::logic_error("discrete log not found");
}

ExtField::Elem ExtField::embed(Sym a) const {
  require_sym(q_, a);
  if (q_ == 2) return a;
  switch (a) {
    case 0: return 0;
    case 1: return 1;
    case 2: return omega_;
    default: return omega_ ^ 1;
  }
}

bool ExtField::in_base(Elem a) const {
  if (q_ == 2) return a <= 1;
  return a == 0 || a == 1 || a == omega_ || a == (omega_ ^ 1);
}

Sym ExtField::unembed(Elem a) const {
  if (q_ == 2) {
    if (a <= 1) return static_cast<Sym>(a);
  } else {
    if (a == 0 || a == 1) return static_cast<Sym>(a);
    if (a == omega_) return 2;
    if (a == (omega_ ^ 1)) return 3;
  }
  throw std::domain_error("element not in the base-field image");
}

ExtField::Elem ExtField::eval_poly(const Poly& p, Elem x) const {
  if (p.q != q_) throw std::invalid_argument("field mismatch");
  Elem acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = add(mul(acc, x), embed(p.c[i]));
  return acc;
}

Poly minimal_polynomial(const ExtField& F, ExtField::Elem a) {
  if (a == 0) throw std::domain_error("minimal polynomial of zero");
  // Conjugate orbit under the base-field Frobenius x -> x^q.
  std::vector<ExtField::Elem> orbit;
  ExtField::Elem x = a;
  do {
    orbit.push_back(x);
    x = F.pow(x, static_cast<std::uint64_t>(F.q()));
  } while (x != a);

  // Product of (X - root) with coefficients in the extension field.
  std::vector<ExtField::Elem> coeff = {1};
  for (ExtField::Elem root : orbit) {
    std::vector<ExtField::Elem> next(coeff.size() + 1, 0);
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      next[i + 1] ^= coeff[i];
      next[i] ^= F.mul(coeff[i], root);  // char 2: -root = root
    }
    coeff = std::move(next);
  }

  std::vector<Sym> base(coeff.size());
  for (std::size_t i = 0; i < coeff.size(); ++i) base[i] = F.unembed(coeff[i]);
  return Poly(F.q(), std::move(base));
}

bool is_primitive(const ExtField& F, ExtField::Elem a) {
  if (a == 0) throw std::domain_error("primitivity of zero");
  const std::uint64_t n = F.order() - 1;
  for (std::uint64_t p : F.order_factors())
    if (F.pow(a, n / p) == 1) return false;
  return true;
}

ExtField::Elem find_primitive_avoiding(const ExtField& F, const Poly& g) {
  if (g.q != F.q()) throw std::invalid_argument("field mismatch");
  if (g.is_zero()) throw std::invalid_argument("zero polynomial");
  const std::uint64_t n = F.order() - 1;
  for (std::uint64_t e = 0; e < std::max<std::uint64_t>(n, 1); ++e) {
    if (std::gcd(e, n) != 1) continue;
    const ExtField::Elem a = F.pow(F.gen(), e);
    if (F.eval_poly(g, a) != 0 && F.eval_poly(g, F.inv(a)) != 0) return a;
  }
  throw std::runtime_error("no primitive element avoids the given polynomial");
}

}  // namespace dnacodes
