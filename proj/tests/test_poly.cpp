#include "doctest.h"
#include "dnacodes/poly.hpp"
#include "dnacodes/word.hpp"

#include <random>

using namespace dnacodes;

namespace {

Poly random_poly(int q, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(0, q - 1);
  std::vector<Sym> c(max_deg + 1);
  for (auto& x : c) x = static_cast<Sym>(coef(rng));
  return Poly(q, std::move(c));
}

}  // namespace

TEST_CASE("division with remainder") {
  const Poly f1 = xn_minus_one(2, 7);
  const Poly g1(2, {1, 1, 0, 1});  // x^3 + x + 1
  auto [q1, r1] = poly_divmod(f1, g1);
  CHECK(r1.is_zero());
  CHECK(q1 * g1 == f1);

  const Poly g4(4, {1, 1, 3, 1, 3, 1, 1});
  auto [q4, r4] = poly_divmod(xn_minus_one(4, 15), g4);
  CHECK(r4.is_zero());
  CHECK(q4 * g4 == xn_minus_one(4, 15));

  auto [qq, rr] = poly_divmod(g4, g4);
  CHECK(qq == Poly::one(4));
  CHECK(rr.is_zero());

  CHECK_THROWS_AS(poly_divmod(g1, Poly::zero(2)), std::domain_error);

  // a = q*b + r with deg r < deg b, random pairs over both fields.
  std::mt19937_64 rng(7);
  for (int q = 2; q <= 4; q += 2) {
    for (int t = 0; t < 200; ++t) {
      Poly a = random_poly(q, 12, rng), b = random_poly(q, 6, rng);
      if (b.is_zero()) continue;
      auto [quo, rem] = poly_divmod(a, b);
      CHECK(quo * b + rem == a);
      CHECK(rem.degree() < b.degree());
    }
  }
}

TEST_CASE("reciprocal polynomials") {
  CHECK(reciprocal(Poly(2, {1, 0, 1, 1})) == Poly(2, {1, 1, 0, 1}));
  const Poly g4(4, {1, 1, 3, 1, 3, 1, 1});
  CHECK(reciprocal(g4) == g4);
  CHECK(self_reciprocal(g4));
  CHECK_FALSE(self_reciprocal(Poly(2, {1, 1, 0, 1})));  // x^3+x+1 reverses to x^3+x^2+1
  CHECK(reciprocal(Poly(2, {0, 1, 1})) == Poly(2, {1, 1}));  // degree drops
  // The zero-degree sentinel survives transforms.
  CHECK(reciprocal(Poly::zero(4)).degree() == kZeroDeg);
}

TEST_CASE("quotient ring") {
  // X * (1 + x^(n-1)) wraps to 1 + x.
  for (int n : {4, 9}) {
    Poly a(2, std::vector<Sym>{1});
    Poly c = Poly(2, {1}) + Poly::x_pow(2, n - 1);
    CHECK(quotient_mul(Poly::x_pow(2, 1), c, n) == Poly(2, {1, 1}));
  }
  // (X^n - 1)/(X - 1) is the all-one word.
  for (int n : {7, 15}) {
    auto [q, r] = poly_divmod(xn_minus_one(4, n), Poly(4, {1, 1}));
    CHECK(r.is_zero());
    CHECK(q == all_one_poly(4, n));
    CHECK(word_from_poly(q, n) == Word(4, std::vector<Sym>(n, 1)));
  }

  // X^s c(X) is the word shifted s times; exhaustive shifts, sampled words.
  std::mt19937_64 rng(11);
  for (int q = 2; q <= 4; q += 2) {
    for (int n : {7, 15}) {
      for (int t = 0; t < 50; ++t) {
        Poly c = random_poly(q, n - 1, rng);
        Word w = word_from_poly(c, n);
        for (int s = 0; s < n; ++s)
          CHECK(word_from_poly(quotient_mul(Poly::x_pow(q, s), c, n), n) == shift(w, s));
      }
    }
  }

  // Wraparound accumulation agrees with schoolbook multiply-then-reduce.
  for (int q = 2; q <= 4; q += 2) {
    for (int n : {5, 14, 31}) {
      for (int t = 0; t < 60; ++t) {
        Poly a = random_poly(q, n - 1, rng), b = random_poly(q, n - 1, rng);
        CHECK(quotient_mul(a, b, n) == poly_mod(a * b, xn_minus_one(q, n)));
      }
    }
  }
}

TEST_CASE("X^(n-1) c(1/X) is the reversed word") {
  // Exhaustive over all binary words up to n = 15.
  for (int n = 1; n <= 15; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::vector<Sym> s(n);
      for (int i = 0; i < n; ++i) s[i] = (bits >> i) & 1;
      Word w(2, s);
      CHECK(word_from_poly(shifted_reciprocal(poly_from_word(w), n - 1), n) == reverse(w));
    }
  }
  // Exhaustive quaternary up to n = 6.
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t v = 0; v < (1u << (2 * n)); ++v) {
      std::vector<Sym> s(n);
      for (int i = 0; i < n; ++i) s[i] = (v >> (2 * i)) & 3;
      Word w(4, s);
      CHECK(word_from_poly(shifted_reciprocal(poly_from_word(w), n - 1), n) == reverse(w));
    }
  }
}
