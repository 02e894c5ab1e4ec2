#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dnacodes/cyclic.hpp"
#include "dnacodes/word.hpp"

namespace dnacodes {

// Binary: floor(n/2) or ceil(n/2) zeros. Quaternary: that many G/C symbols.
bool is_balanced(const Word& w);
// Weight (q=2) or GC-content (q=4) within {floor(n/2)-1, ..., ceil(n/2)+1}.
bool is_almost_balanced(const Word& w);

// Knuth's balancing index: the smallest z such that flipping the first z
// bits of w yields a balanced word. Always exists; z <= n.
int knuth_index(const Word& w);

// Smallest shift i such that flipping the first (n+1)/2 symbols of
// sigma^i(w) balances it (weight in {(n-1)/2, (n+1)/2} for q = 2,
// GC-content in {floor(n/2), ceil(n/2)} for q = 4). Requires odd n; the
// flip lemma guarantees existence.
std::pair<int, Word> balancing_shift(const Word& w);

// Coupling map: interleaves two binary words into one quaternary word,
// (a_i, b_i) = 00 -> A, 01 -> T, 10 -> C, 11 -> G.
Word couple(const Word& a, const Word& b);
std::pair<Word, Word> uncouple(const Word& c);

// Balanced binary code from a cyclic code: Tavares representatives are
// shifted, prefix-flipped and extended by a check bit so every emitted word
// has length n+1 and weight exactly (n+1)/2.
class BinBalancedCode {
 public:
  BinBalancedCode(CyclicCode B, Poly hstar);

  int message_len() const { return tav_.message_len(); }
  int n() const { return tav_.code().n + 1; }
  // Claimed distance 2*ceil(d/2) for an input code of distance d.
  static int claimed_distance(int d) { return 2 * ((d + 1) / 2); }

  Word encode(const Word& msg) const;
  Word decode(const Word& v) const;
  std::vector<Word> all_words() const;  // the 2^(k*) encodable codewords

 private:
  TavaresEncoder tav_;
};

// Census mode: one balanced word per cyclic class of B, via full orbit
// enumeration. Verification only; no encoder reaches these.
std::vector<Word> bin_balanced_census(const CyclicCode& B, std::uint64_t limit = 1u << 24);

// GC-balanced code from two binary linear codes: A = [n+p, n, d] systematic,
// B of length n with 2^(k_B) >= 2^p * n * M. Messages are pairs
// (m in F_2^n, i in [M]).
class GcBalancedCode {
 public:
  GcBalancedCode(LinearEncoder A, LinearEncoder B, int M);

  int n() const { return A_.k(); }
  int multiplicity() const { return M_; }

  Word encode(const Word& msg, int i) const;
  // Corrects up to floor((d-1)/2) symbol substitutions.
  std::optional<std::pair<Word, int>> decode(const Word& received) const;

 private:
  LinearEncoder A_;
  LinearEncoder B_;
  int M_ = 0;
  int p_ = 0;

  std::uint64_t pack(int i, int j, const Word& parity) const;
  void unpack(std::uint64_t idx, int& i, int& j, Word& parity) const;
};

}  // namespace dnacodes
