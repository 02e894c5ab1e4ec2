#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace dnacodes {

// Symbol code of a base-field element. GF(2) uses {0,1}; GF(4) uses the
// 2-bit codes {0,1,2,3} = {0, 1, w, w+1} with w a root of x^2+x+1.
// Both fields have characteristic 2, so addition is XOR of codes.
using Sym = std::uint8_t;

inline bool valid_q(int q) { return q == 2 || q == 4; }

void require_q(int q);
void require_sym(int q, Sym a);

Sym gf_add(int q, Sym a, Sym b);
Sym gf_mul(int q, Sym a, Sym b);
Sym gf_inv(int q, Sym a);
Sym gf_pow(int q, Sym a, std::uint64_t e);

// DNA alphabet identification: 0 <-> A, 1 <-> T, w <-> C, w+1 <-> G.
// The Watson-Crick complement of a base corresponds to adding 1 in GF(4).
char sym_to_base(Sym s);
Sym base_to_sym(char b);

struct Poly;

// Extension field GF(q^m), q in {2,4}, 1 <= m <= 16, realized on a binary
// tower: GF(2^M) with M = m*log2(q), built from a fixed table of primitive
// binary polynomials (lexicographically smallest per degree). For q = 4 the
// base field embeds as {0} plus the order-3 subgroup, with w mapped to
// gen()^((q^m-1)/3). Elements are bitmask codes in [0, order).
class ExtField {
 public:
  using Elem = std::uint64_t;

  static ExtField build(int q, int m);

  int q() const { return q_; }
  int m() const { return m_; }
  int bin_degree() const { return bin_deg_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t modulus_mask() const { return mod_mask_; }
  // Prime factors of q^m - 1, found by trial division.
  const std::vector<std::uint64_t>& order_factors() const { return factors_; }
  // Degree-m irreducible polynomial over GF(q) with gen() as a root.
  const Poly& modulus() const;

  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  // The root of the binary modulus; primitive by table construction.
  Elem gen() const { return order_ > 2 ? 2 : 1; }
  // Discrete log with respect to gen(); a must be nonzero.
  std::uint64_t dlog(Elem a) const;

  Elem embed(Sym a) const;
  Sym unembed(Elem a) const;  // throws if a is outside the base-field image
  bool in_base(Elem a) const;

  // Evaluate a polynomial over GF(q) at a field element.
  Elem eval_poly(const Poly& p, Elem x) const;

  // Default-constructed fields are placeholders; use build().
  ExtField() = default;

 private:
  int q_ = 2;
  int m_ = 1;
  int bin_deg_ = 1;
  std::uint64_t order_ = 2;
  std::uint64_t mod_mask_ = 3;
  std::uint64_t omega_ = 1;  // embedding of the GF(4) code 2
  std::vector<std::uint64_t> factors_;
  std::vector<std::uint32_t> exp_;  // gen()^i, present when bin_degree <= 16
  std::vector<std::uint32_t> log_;
  std::vector<Sym> base_of_;        // unembed map for q = 4 small fields
  std::shared_ptr<Poly> modulus_over_base_;

  Elem mul_notable(Elem a, Elem b) const;
};

// Monic minimal polynomial of a nonzero element over the base field GF(q),
// computed as the product over the conjugate orbit {a, a^q, a^(q^2), ...}.
Poly minimal_polynomial(const ExtField& F, ExtField::Elem a);

// True iff the multiplicative order of a equals q^m - 1, decided through the
// stored factorization of the group order.
bool is_primitive(const ExtField& F, ExtField::Elem a);

// Smallest-discrete-log primitive element a with g(a) != 0 and g(1/a) != 0.
// Throws if no primitive element qualifies.
ExtField::Elem find_primitive_avoiding(const ExtField& F, const Poly& g);

}  // namespace dnacodes
