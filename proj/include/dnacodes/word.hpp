#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnacodes/gf.hpp"
#include "dnacodes/poly.hpp"

namespace dnacodes {

// Fixed-length word over GF(q), 0-indexed internally. The word (c_0,...,
// c_{n-1}) is identified with the polynomial sum_i c_i X^i, so multiplying by
// X in GF(q)[X]/(X^n - 1) is one right cyclic shift.
struct Word {
  int q = 2;
  std::vector<Sym> s;

  Word() = default;
  Word(int q_, std::vector<Sym> syms);
  static Word zero(int q, int n) { return Word(q, std::vector<Sym>(n, 0)); }

  int size() const { return static_cast<int>(s.size()); }
  Sym operator[](int i) const { return s[i]; }
  Sym& operator[](int i) { return s[i]; }
  bool operator==(const Word& o) const = default;
  auto operator<=>(const Word& o) const = default;
};

// sigma^i: right cyclic shift i times, so shift(a,1) = (a_{n-1}, a_0, ...).
Word shift(const Word& a, int i);
Word reverse(const Word& a);
Word complement(const Word& a);          // adds 1 to every symbol
Word reverse_complement(const Word& a);  // complement of the reverse
// Adds 1 (q=2) or w (q=4) to the first len symbols.
Word flip_prefix(const Word& a, int len);
// Paper's 1-indexed subword a[i,j]; returns the reversed segment when i > j.
Word subword(const Word& a, int i, int j);

Word operator+(const Word& a, const Word& b);

int hamming(const Word& a, const Word& b);
int wt(const Word& a);
// Weight split for odd n: first (n+1)/2 positions and last (n-1)/2 positions.
int wt1(const Word& a);
int wt2(const Word& a);
// Number of symbols in {w, w+1}, i.e. bases C and G.
int gc_count(const Word& a);
bool is_constant(const Word& a);
// Longest run of equal symbols (as a plain substring, no wraparound).
int max_run(const Word& a);

Word word_from_poly(const Poly& p, int n);
Poly poly_from_word(const Word& w);

std::string to_dna(const Word& w);          // q = 4 only
Word word_from_dna(const std::string& s);   // throws on non-ACGT characters
std::string to_digits(const Word& w);       // "0213..." symbol codes
Word word_from_digits(int q, const std::string& s);

}  // namespace dnacodes
