#include "doctest.h"
#include "dnacodes/word.hpp"

#include <random>

using namespace dnacodes;

namespace {

Word random_word(int q, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(0, q - 1);
  std::vector<Sym> s(n);
  for (auto& x : s) x = static_cast<Sym>(coef(rng));
  return Word(q, std::move(s));
}

}  // namespace

TEST_CASE("word transforms") {
  CHECK(to_dna(reverse_complement(Word(4, {0, 2}))) == "GT");  // "CA" -> "GT"

  Word ones7(2, std::vector<Sym>(7, 1));
  Word flipped = flip_prefix(ones7, 4);
  CHECK(flipped == Word(2, {0, 0, 0, 0, 1, 1, 1}));
  CHECK(wt(flipped) == 3);

  // sigma^1 moves the last symbol to the front.
  CHECK(shift(Word(2, {1, 0, 0, 0, 1}), 1) == Word(2, {1, 1, 0, 0, 0}));

  Word a(4, {0, 1, 2, 3, 1});
  CHECK(subword(a, 2, 4) == Word(4, {1, 2, 3}));
  CHECK(subword(a, 4, 2) == Word(4, {3, 2, 1}));  // i > j reverses
  CHECK_THROWS_AS(subword(a, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(subword(a, 1, 6), std::out_of_range);
}

TEST_CASE("metrics") {
  const int n = 9;
  CHECK(hamming(Word::zero(2, n), Word(2, std::vector<Sym>(n, 1))) == n);
  Word ones7(2, std::vector<Sym>(7, 1));
  CHECK(wt1(ones7) == 4);
  CHECK(wt2(ones7) == 3);
  CHECK(gc_count(word_from_dna("ATCG")) == 2);
  CHECK_THROWS_AS(hamming(Word::zero(2, 3), Word::zero(2, 4)), std::invalid_argument);

  // wt = wt1 + wt2 and the metric triangle inequality, sampled.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 400; ++t) {
    Word x = random_word(4, 11, rng), y = random_word(4, 11, rng), z = random_word(4, 11, rng);
    CHECK(wt(x) == wt1(x) + wt2(x));
    CHECK(hamming(x, y) == hamming(y, x));
    CHECK(hamming(x, z) <= hamming(x, y) + hamming(y, z));
    CHECK((hamming(x, y) == 0) == (x == y));
  }
}

TEST_CASE("involutions, exhaustive quaternary up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t v = 0; v < (1u << (2 * n)); ++v) {
      std::vector<Sym> s(n);
      for (int i = 0; i < n; ++i) s[i] = (v >> (2 * i)) & 3;
      Word w(4, s);
      Word acc = w;
      for (int i = 0; i < n; ++i) acc = shift(acc, 1);
      CHECK(acc == w);  // sigma^n = id
      CHECK(reverse(reverse(w)) == w);
      CHECK(complement(complement(w)) == w);
      CHECK(reverse_complement(reverse_complement(w)) == w);
    }
  }
}

TEST_CASE("runs") {
  CHECK(max_run(Word(2, {1, 0, 0, 1, 0, 0, 1})) == 2);
  CHECK(max_run(Word(2, std::vector<Sym>(5, 1))) == 5);
  CHECK(is_constant(Word(4, {2, 2, 2})));
  CHECK_FALSE(is_constant(Word(4, {2, 2, 3})));
}
