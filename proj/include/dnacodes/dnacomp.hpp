#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dnacodes/primer.hpp"
#include "dnacodes/word.hpp"

namespace dnacodes {

// s for the symmetric flip map: the unique integer in {(n-1)/4, (n+1)/4}.
int pi_s(int n);

// Adds w to the first s and the last s symbols. The mask is palindromic, so
// the map is an involution and commutes with reversal. Requires odd n.
Word pi_map(const Word& w);

// GC-balanced code with reverse and reverse-complement distance guarantees,
// built from a reversible cyclic code containing 1^n and a validated
// rc2-generating set: each subcode word u is emitted as pi(sigma^(i_u)(u))
// with i_u the smallest shift making the image GC-balanced.
class DnaComputingCode {
 public:
  DnaComputingCode(CyclicCode C, RcGenSet S);  // validates; requires rc2

  const RcSubcode& subcode() const { return sub_; }
  std::uint64_t size() const { return sub_.size(); }
  int n() const { return sub_.code().n; }

  Word encode(const Poly& m, int i) const;
  Word encode_at(std::uint64_t msg_index, int i) const;
  // Brute force over all n shifts: un-apply pi, un-shift, test subcode
  // membership. Throws when no shift yields a member.
  std::pair<Poly, int> decode(const Word& w) const;

  std::vector<Word> words(int deg_cap = -1) const;

 private:
  RcSubcode sub_;

  Word balance_word(const Word& u) const;
};

}  // namespace dnacodes
