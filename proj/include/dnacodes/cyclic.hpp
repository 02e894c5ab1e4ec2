#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dnacodes/gf.hpp"
#include "dnacodes/poly.hpp"
#include "dnacodes/word.hpp"

namespace dnacodes {

enum class DistStatus { exact, sampled_lower_bound, designed, unknown };

const char* dist_status_name(DistStatus s);

// Cyclic code of length n over GF(q) with monic generator g dividing X^n - 1.
// k = n - deg g and h = (X^n - 1)/g.
struct CyclicCode {
  int q = 2;
  int n = 0;
  int k = 0;
  Poly g;
  Poly h;
  std::optional<int> d;  // verified or designed distance, when known
  DistStatus d_status = DistStatus::unknown;

  bool contains(const Word& w) const;
  // Codeword of the message polynomial: m(X) g(X), deg m < k.
  Word codeword(const Poly& m) const;
  // Codeword for a message index, digits of the index in base q forming m.
  Word codeword_at(std::uint64_t index) const;
};

// Validates g and derives the code; throws if g is not monic, does not
// divide X^n - 1, or gcd(n, q) != 1 (repeated-root lengths are unsupported).
CyclicCode code_from_generator(int q, int n, const Poly& g);

struct CodeProperties {
  bool contains_all_one = false;  // g(1) != 0
  bool reversible = false;        // g self-reciprocal
};
CodeProperties code_properties(const CyclicCode& C);

// q^k as a capped 64-bit count: returns min(q^k, cap).
std::uint64_t code_size_capped(const CyclicCode& C, std::uint64_t cap);
// All q^k codewords; throws if the count exceeds limit.
std::vector<Word> enumerate_codewords(const CyclicCode& C, std::uint64_t limit);

// Lexicographically minimal rotation, the canonical cyclic-class key.
Word canonical_rotation(const Word& w);
// One representative (the canonical rotation) per cyclic class.
std::vector<Word> cyclic_class_representatives(const std::vector<Word>& words);

// Host field and cyclotomic cosets for length-n codes over GF(q): the field
// GF(q^w), w = ord_n(q), contains beta, a primitive n-th root of unity.
struct CyclotomicData {
  int q = 2;
  int n = 1;
  ExtField field;
  ExtField::Elem beta = 1;

  static CyclotomicData build(int q, int n);
  std::vector<int> coset_of(int e) const;  // {e q^j mod n}, sorted
  Poly min_poly_of_root(int e) const;      // M(beta^e) over GF(q)
  // Distinct irreducible factors of X^n - 1 over GF(q).
  std::vector<Poly> factors_of_xn_minus_one() const;
};

// Binary primitive narrow-sense BCH code of length 2^m - 1 and designed
// distance d: g = lcm of M(beta^i), i = 1..d-1.
CyclicCode bch_narrow_sense(int m, int d);

// Reversible cyclic code over GF(q) of length q^m - 1 containing 1^n, from
// the symmetric root set {beta^i : i = +-1..+-(delta-1)}. The BCH bound
// gives minimum distance >= delta; self-reciprocity of g and g(1) != 0 hold
// by construction and are re-checked.
CyclicCode reversible_bch(int q, int m, int delta);

// Systematic encoder for a (possibly shortened) cyclic code, with a
// syndrome-table bounded-distance decoder. Externally the message occupies
// the first k - shorten positions and the parity the last n - k.
class LinearEncoder {
 public:
  LinearEncoder(CyclicCode code, int shorten, int decode_distance);

  int n() const { return code_.n - shorten_; }
  int k() const { return code_.k - shorten_; }
  int parity_len() const { return code_.n - code_.k; }
  int t() const { return t_; }
  const CyclicCode& code() const { return code_; }

  Word encode(const Word& msg) const;
  Word parity_of(const Word& msg) const;
  // Corrects up to t substitutions; returns the message, or nullopt when no
  // codeword lies within radius t of the received word.
  std::optional<Word> decode_bd(const Word& received) const;

 private:
  CyclicCode code_;
  int shorten_ = 0;
  int t_ = 0;
  std::unordered_map<std::uint64_t, Word> syndrome_table_;  // -> ring error

  Word external_to_ring(const Word& ext) const;
  Word ring_to_external(const Word& ring) const;
  std::uint64_t syndrome_key(const Poly& rem) const;
};

// Monic divisors h* of h (assembled from the irreducible factorization of
// X^n - 1) such that h* does not divide X^s - 1 for any s in [n-1], sorted
// by ascending degree then coefficients.
std::vector<Poly> tavares_hstar_candidates(const CyclicCode& C);

// Encoder into pairwise distinct cyclic equivalence classes:
// B* = {(m(X) h*(X) + 1) g(X) : deg m < k*}, k* = k - deg h*.
class TavaresEncoder {
 public:
  TavaresEncoder(CyclicCode code, Poly hstar);

  int message_len() const { return kstar_; }
  const CyclicCode& code() const { return code_; }
  const Poly& hstar() const { return hstar_; }

  Word encode(const Word& msg) const;
  // Recovers (message, shift) from any cyclic shift of an encoded word; the
  // shift table X^s mod h*, s in [[n]], is precomputed at construction.
  std::pair<Word, int> decode(const Word& received) const;

 private:
  CyclicCode code_;
  Poly hstar_;
  int kstar_ = 0;
  std::map<std::vector<Sym>, int> shift_of_;  // coeffs of X^s mod h* -> s
};

}  // namespace dnacodes
