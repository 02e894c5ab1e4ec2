#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dnacodes/word.hpp"

namespace dnacodes::oracle {

// Brute-force ground truth. Everything here re-derives its predicates from
// raw symbol sequences and shares no implementation with the construction
// modules. Work is counted in elementary pair/window comparisons; a report
// that would exceed the budget switches to seeded sampling and says so.

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

enum class Verdict { pass, fail, sampled_pass };

const char* verdict_name(Verdict v);

struct VerificationReport {
  std::string property;
  Verdict verdict = Verdict::pass;
  std::string witness;                        // filled on failure
  std::vector<std::int64_t> witness_indices;  // word/window indices on failure
  std::uint64_t work = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  bool ok() const { return verdict != Verdict::fail; }
};

struct DistanceResult {
  int d = 0;                 // n+1 sentinel when fewer than two words
  bool single_word = false;
  bool exhaustive = true;
  std::uint64_t work = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
};

// Minimum pairwise Hamming distance. Exhaustive when the pair count fits the
// budget, otherwise a sampled lower bound (seeded).
DistanceResult min_distance(const std::vector<Word>& words,
                            std::uint64_t budget = kDefaultBudget,
                            std::uint64_t seed = 1);

// Minimum nonzero weight; the exhaustive route for full enumerations of
// linear codes, where it equals the minimum distance.
DistanceResult min_weight_nonzero(const std::vector<Word>& words);

VerificationReport verify_min_distance(const std::vector<Word>& words, int d,
                                       std::uint64_t budget = kDefaultBudget,
                                       std::uint64_t seed = 1);

// kappa-WMU: no proper prefix of length in [kappa, n-1] of any codeword
// equals a suffix of any codeword (ordered pairs, a = b included).
VerificationReport verify_wmu(const std::vector<Word>& words, int kappa,
                              std::uint64_t budget = kDefaultBudget,
                              std::uint64_t seed = 1,
                              std::uint64_t sample_trials = 10000);

// f-APD: the complement of any length-f window of a word appears nowhere as
// a forward or reversed window of any word (ordered pairs, a = b included).
VerificationReport verify_apd(const std::vector<Word>& words, int f,
                              std::uint64_t budget = kDefaultBudget,
                              std::uint64_t seed = 1,
                              std::uint64_t sample_trials = 10000);

enum class BalanceMode { balanced, gc, almost };

VerificationReport verify_balance(const std::vector<Word>& words, BalanceMode mode);

// DNA computing constraints: d(a, b^r) >= d and d(a, b^rc) >= d over all
// ordered pairs including a = b.
VerificationReport verify_reverse_distances(const std::vector<Word>& words, int d,
                                            std::uint64_t budget = kDefaultBudget,
                                            std::uint64_t seed = 1,
                                            std::uint64_t sample_trials = 10000);

// Longest run of equal symbols over all non-constant words (plain substring
// runs); 0 when every word is constant.
int max_run(const std::vector<Word>& words);

struct CensusResult {
  std::uint64_t classes = 0;
  std::vector<std::uint64_t> orbit_sizes;  // descending
  std::uint64_t total = 0;
};

// Partition into cyclic equivalence classes keyed by the lexicographically
// minimal rotation.
CensusResult cyclic_class_census(const std::vector<Word>& words);

}  // namespace dnacodes::oracle
