#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dnacodes/balance.hpp"
#include "dnacodes/cyclic.hpp"
#include "dnacodes/word.hpp"

namespace dnacodes {

// Run-length-limited map: a binary message of length L-1 becomes a word of
// length L containing no run of ell-1 equal symbols. Sequence replacement in
// the transition domain: a leading marker bit distinguishes payload from
// replacement blocks, each block holding one removed-run pointer of ell-3
// bits. Pointer capacity bounds the length: L <= 2^(ell-3) + ell - 3.
Word rll_encode(const Word& msg, int ell);
Word rll_decode(const Word& w, int ell);
int rll_max_len(int ell);

// ell-APD-constrained block code of length f = 2^(ell-4): every word ends
// with 1, contains 0 1^ell 0 exactly once and contains no 0^ell. Encoder
// domain: (slot in [f-ell-2]) x (binary message of f-ell-4 bits).
class ApdBlockCode {
 public:
  explicit ApdBlockCode(int ell);  // requires ell >= 8

  int ell() const { return ell_; }
  int f() const { return f_; }
  int slots() const { return f_ - ell_ - 2; }
  int msg_len() const { return f_ - ell_ - 4; }
  std::uint64_t size() const;

  Word encode(int slot, const Word& msg) const;  // slot in [1, slots]
  std::pair<int, Word> decode(const Word& w) const;
  Word encode_at(std::uint64_t index) const;
  std::vector<Word> all_words() const;

 private:
  int ell_ = 8;
  int f_ = 16;
};

// Construction of general primer codes: words 0 1^ell a p'_a where a is a
// concatenation of r APD-constrained blocks and p'_a is the systematic
// parity of a under B with a one inserted after every ell-1 bits plus a
// final appended one. Claimed type: (n, d; 1, 2f) over GF(2).
class GeneralPrimerCode {
 public:
  GeneralPrimerCode(int ell, int r, LinearEncoder B);  // B = [r f + p, r f, d]

  int n() const { return n_; }
  int r() const { return r_; }
  const ApdBlockCode& block_code() const { return A_; }
  std::uint64_t size() const;

  Word encode(const std::vector<std::pair<int, Word>>& blocks) const;
  Word encode_at(std::uint64_t index) const;
  std::vector<std::pair<int, Word>> decode(const Word& w) const;

 private:
  ApdBlockCode A_;
  LinearEncoder B_;
  int r_ = 1;
  int n_ = 0;
};

// Almost balanced WMU codebook from a cyclic code containing 1^n: every
// codeword u is shifted to its smallest balancing shift j and offset by the
// mask 1^(mu+1) 0^(mu-1) 1 (q=2) or w^(mu+1) 0^(mu-1) w (q=4), mu=(n-1)/2.
// One output word per codeword; claimed type: (n, d; k+1, n) over GF(q).
// Requires n odd, k <= ceil((n+1)/4), and 1^n in the code.
std::vector<Word> construct_primer_almost_balanced(const CyclicCode& B);
Word almost_balanced_mask(int q, int n);

enum class RcFlavor { rc, rc2 };

const char* rc_flavor_name(RcFlavor f);

// Divisor h* of the check polynomial plus coset polynomials p_i. The rc
// conditions (R1)-(R7) or the rc2 variant ((R5') replacing (R5)/(R6)) are
// established by validate_rc_generating, never assumed.
struct RcGenSet {
  Poly hstar;
  std::vector<Poly> ps;  // sorted by (degree, coefficient codes)
  RcFlavor flavor = RcFlavor::rc;

  void canonicalize();  // sorts ps into the decoder's enumeration order
};

struct RcViolation {
  std::string condition;  // "R1".."R7", "R5'"
  int i = 0, j = 0, s = 0;  // 1-based set indices where applicable
  std::string detail;
};

struct RcValidationResult {
  bool ok = true;
  std::optional<RcViolation> violation;
  std::uint64_t checks = 0;
};

// Checks every condition literally by polynomial remainder over all required
// (i, j, s); stops at the first violation. The (R4) scan additionally covers
// s = 0 for i != j, which rejects duplicated p_i (the decoder's injectivity
// needs it). Requires C reversible and containing 1^n.
RcValidationResult validate_rc_generating(const CyclicCode& C, const RcGenSet& S);

// Builds {M(a)M(1/a), 1} (rc) or {M(a)M(1/a), M(a)} (rc2) from the smallest
// primitive a with g(a) != 0 != g(1/a), then validates. Requires n = q^m - 1;
// the rc flavor additionally requires n - k < k - 1.
RcGenSet search_rc_generating(const CyclicCode& C, RcFlavor flavor);

// The subcode {(m(X) h*(X) + p_i(X)) g(X) : deg m < k*, i in [P]} with its
// exact algebraic decoder (divide by g, reduce mod h* to find p_i, divide
// the rest by h*).
class RcSubcode {
 public:
  RcSubcode(CyclicCode C, RcGenSet S);

  const CyclicCode& code() const { return C_; }
  const RcGenSet& set() const { return S_; }
  int kstar() const { return kstar_; }
  int P() const { return static_cast<int>(S_.ps.size()); }
  std::uint64_t size() const;  // q^(k*) * P

  Word encode(const Poly& m, int i) const;  // i in [P]
  Word encode_at(std::uint64_t msg_index, int i) const;
  std::pair<Poly, int> decode(const Word& w) const;

  // Materializes words for deg m < deg_cap (all of them when deg_cap < 0),
  // ordered by (message index, i).
  std::vector<Word> words(int deg_cap = -1) const;

 private:
  CyclicCode C_;
  RcGenSet S_;
  int kstar_ = 0;
};

// Construction of (n, d; k, k)_q-primer codes from a reversible cyclic code
// and a validated rc-generating set.
class RcPrimerCode {
 public:
  RcPrimerCode(CyclicCode C, RcGenSet S);  // validates; requires rc flavor

  const RcSubcode& subcode() const { return sub_; }
  std::uint64_t size() const { return sub_.size(); }
  Word encode(const Poly& m, int i) const { return sub_.encode(m, i); }
  Word encode_at(std::uint64_t idx, int i) const { return sub_.encode_at(idx, i); }
  std::pair<Poly, int> decode(const Word& w) const { return sub_.decode(w); }
  std::vector<Word> words(int deg_cap = -1) const { return sub_.words(deg_cap); }

 private:
  RcSubcode sub_;
};

// Bundled demo instance: the [15,9,5] quaternary reversible code with a
// 17-polynomial rc-generating set.
struct DemoInstance {
  Poly g;
  Poly hstar;
  std::vector<Poly> ps;
};
DemoInstance example1_instance();

}  // namespace dnacodes
