#include "doctest.h"
#include "dnacodes/gf.hpp"
#include "dnacodes/poly.hpp"
#include "dnacodes/word.hpp"

#include <numeric>

using namespace dnacodes;

namespace {

// Independent totient: count of 1 <= i < n coprime to n.
std::uint64_t totient(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i < n; ++i)
    if (std::gcd(i, n) == 1) ++count;
  return n == 1 ? 1 : count;
}

}  // namespace

TEST_CASE("GF(4) arithmetic fixed by x^2+x+1") {
  CHECK(gf_mul(4, 2, 2) == 3);  // w * w = w + 1
  CHECK(gf_mul(4, 2, 3) == 1);  // w * (w + 1) = 1
  CHECK(gf_add(4, 3, 3) == 0);  // characteristic 2
  for (Sym a = 1; a < 4; ++a) CHECK(gf_mul(4, a, gf_inv(4, a)) == 1);
  CHECK(gf_mul(2, 1, gf_inv(2, 1)) == 1);
  CHECK_THROWS_AS(gf_inv(4, 0), std::domain_error);
  CHECK_THROWS(gf_mul(2, 2, 1));  // field mismatch surfaces as range error
}

TEST_CASE("DNA alphabet map") {
  Word w(4, {0, 1, 2, 3});
  CHECK(to_dna(w) == "ATCG");
  CHECK(to_dna(complement(Word(4, {0, 2}))) == "TG");
  CHECK(to_dna(word_from_dna("GATTACA")) == "GATTACA");
  CHECK_THROWS_AS(word_from_dna("GATXACA"), std::invalid_argument);
  // Watson-Crick pairing is +1 in GF(4): A<->T, C<->G.
  CHECK(to_dna(complement(word_from_dna("ACGT"))) == "TGCA");
}

TEST_CASE("extension field construction") {
  auto F8 = ExtField::build(2, 3);
  CHECK(F8.order() == 8);
  CHECK(F8.modulus() == Poly(2, {1, 1, 0, 1}));  // x^3 + x + 1

  auto F16 = ExtField::build(2, 4);
  CHECK(F16.order() == 16);
  CHECK(F16.modulus() == Poly(2, {1, 1, 0, 0, 1}));  // x^4 + x + 1

  auto F16q = ExtField::build(4, 2);
  CHECK(F16q.order() == 16);
  CHECK(F16q.modulus().degree() == 2);
  // Degree-2 polynomial over GF(4) is irreducible iff it has no roots.
  for (Sym x = 0; x < 4; ++x) CHECK(poly_eval(F16q.modulus(), x) != 0);

  CHECK_THROWS_AS(ExtField::build(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(ExtField::build(2, 17), std::invalid_argument);
  CHECK_THROWS_AS(ExtField::build(3, 2), std::invalid_argument);
}

TEST_CASE("field axioms on sampled elements") {
  for (auto [q, m] : {std::pair{2, 5}, {4, 3}}) {
    auto F = ExtField::build(q, m);
    const std::uint64_t n = F.order();
    for (std::uint64_t a = 1; a < n; a += 3) {
      CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.pow(a, n - 1) == 1);
      for (std::uint64_t b = 1; b < n; b += 5)
        CHECK(F.mul(a, b) == F.mul(b, a));
    }
    // The base field embeds homomorphically.
    for (Sym a = 0; a < q; ++a)
      for (Sym b = 0; b < q; ++b) {
        CHECK(F.embed(gf_add(q, a, b)) == F.add(F.embed(a), F.embed(b)));
        CHECK(F.embed(gf_mul(q, a, b)) == F.mul(F.embed(a), F.embed(b)));
        CHECK(F.unembed(F.embed(a)) == a);
      }
  }
}

TEST_CASE("minimal polynomials") {
  auto F8 = ExtField::build(2, 3);
  CHECK(minimal_polynomial(F8, F8.gen()) == Poly(2, {1, 1, 0, 1}));
  CHECK(minimal_polynomial(F8, 1) == Poly(2, {1, 1}));  // x + 1
  CHECK_THROWS_AS(minimal_polynomial(F8, 0), std::domain_error);

  // M(a)(a) = 0, monic, degree divides m, and M(a) M(1/a) is
  // self-reciprocal; exhaustive over small fields.
  for (auto [q, m] : {std::pair{2, 3}, {2, 8}, {2, 10}, {4, 2}, {4, 4}}) {
    auto F = ExtField::build(q, m);
    for (std::uint64_t a = 1; a < F.order(); ++a) {
      Poly M = minimal_polynomial(F, a);
      CHECK(M.is_monic());
      CHECK(F.eval_poly(M, a) == 0);
      CHECK(m % M.degree() == 0);
      CHECK(self_reciprocal(M * minimal_polynomial(F, F.inv(a))));
    }
  }
  // Sampled above 2^12.
  for (auto [q, m] : {std::pair{2, 16}, {4, 8}}) {
    auto F = ExtField::build(q, m);
    for (std::uint64_t a = 1; a < F.order(); a += 257) {
      Poly M = minimal_polynomial(F, a);
      CHECK(F.eval_poly(M, a) == 0);
      CHECK(self_reciprocal(M * minimal_polynomial(F, F.inv(a))));
    }
  }
}

TEST_CASE("primitivity") {
  auto F8 = ExtField::build(2, 3);
  CHECK(is_primitive(F8, F8.gen()));
  CHECK_FALSE(is_primitive(F8, 1));
  CHECK_THROWS_AS(is_primitive(F8, 0), std::domain_error);

  auto F16 = ExtField::build(2, 4);
  int count = 0;
  for (std::uint64_t a = 1; a < 16; ++a) count += is_primitive(F16, a);
  CHECK(count == 8);  // phi(15)

  // Primitive-element count equals phi(q^m - 1) for all fields <= 2^12.
  for (auto [q, m] : {std::pair{2, 6}, {2, 12}, {4, 3}, {4, 5}}) {
    auto F = ExtField::build(q, m);
    std::uint64_t n = 0;
    for (std::uint64_t a = 1; a < F.order(); ++a) n += is_primitive(F, a);
    CHECK(n == totient(F.order() - 1));
  }
}

TEST_CASE("primitive element avoiding a polynomial") {
  auto F16 = ExtField::build(4, 2);
  SUBCASE("constant polynomial avoids nothing") {
    auto a = find_primitive_avoiding(F16, Poly::one(4));
    CHECK(a == F16.gen());  // smallest discrete log, and gen is primitive
  }
  SUBCASE("demo generator over GF(4)") {
    const Poly g(4, {1, 1, 3, 1, 3, 1, 1});
    auto a = find_primitive_avoiding(F16, g);
    CHECK(is_primitive(F16, a));
    CHECK(F16.eval_poly(g, a) != 0);
    CHECK(F16.eval_poly(g, F16.inv(a)) != 0);
    // Cross-check minimality by exhaustive scan over ascending dlog.
    for (std::uint64_t e = 0; e < F16.dlog(a); ++e) {
      auto b = F16.pow(F16.gen(), e);
      bool qualifies = is_primitive(F16, b) && F16.eval_poly(g, b) != 0 &&
                       F16.eval_poly(g, F16.inv(b)) != 0;
      CHECK_FALSE(qualifies);
    }
  }
  SUBCASE("exhausted search throws") {
    // Polynomial vanishing on every primitive element of GF(4): x^2+x+1.
    auto F4 = ExtField::build(4, 1);
    CHECK_THROWS_AS(find_primitive_avoiding(F4, Poly(4, {1, 1, 1})), std::runtime_error);
  }
}
