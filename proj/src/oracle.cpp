#include "dnacodes/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace dnacodes::oracle {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "sampled-pass";
  }
}

namespace {

// 2-bit packing, 32 symbols per 64-bit block; works for q = 2 and q = 4.
using Packed = std::vector<std::uint64_t>;
constexpr std::uint64_t kLowBits = 0x5555555555555555ull;

Packed pack(const std::vector<Sym>& s) {
  Packed p((s.size() + 31) / 32, 0);
  for (std::size_t i = 0; i < s.size(); ++i)
    p[i / 32] |= static_cast<std::uint64_t>(s[i]) << (2 * (i % 32));
  return p;
}

int packed_distance(const Packed& a, const Packed& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t x = a[i] ^ b[i];
    d += std::popcount((x | (x >> 1)) & kLowBits);
  }
  return d;
}

std::vector<Sym> rev(const std::vector<Sym>& s) {
  return std::vector<Sym>(s.rbegin(), s.rend());
}

std::vector<Sym> comp(const std::vector<Sym>& s) {
  std::vector<Sym> r(s);
  for (Sym& x : r) x ^= 1;
  return r;
}

void require_uniform(const std::vector<Word>& words) {
  for (const Word& w : words)
    if (w.size() != words.front().size() || w.q != words.front().q)
      throw std::invalid_argument("words must share length and field");
}

std::string word_str(const Word& w) {
  std::string s;
  for (Sym x : w.s) s.push_back(static_cast<char>('0' + x));
  return s;
}

}  // namespace

DistanceResult min_distance(const std::vector<Word>& words, std::uint64_t budget,
                            std::uint64_t seed) {
  DistanceResult res;
  if (words.size() < 2) {
    res.single_word = true;
    res.d = words.empty() ? 0 : words.front().size() + 1;
    return res;
  }
  require_uniform(words);
  const std::size_t m = words.size();
  std::vector<Packed> packed(m);
  for (std::size_t i = 0; i < m; ++i) packed[i] = pack(words[i].s);

  const int n = words.front().size();
  int best = n + 1;
  const std::uint64_t pairs = static_cast<std::uint64_t>(m) * (m - 1) / 2;
  if (pairs <= budget) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        best = std::min(best, packed_distance(packed[i], packed[j]));
    res.work = pairs;
  } else {
    res.exhaustive = false;
    res.seed = seed;
    res.trials = budget;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::uint64_t t = 0; t < res.trials; ++t) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      best = std::min(best, packed_distance(packed[i], packed[j]));
    }
    res.work = res.trials;
  }
  res.d = best;
  return res;
}

DistanceResult min_weight_nonzero(const std::vector<Word>& words) {
  DistanceResult res;
  if (words.empty()) {
    res.single_word = true;
    return res;
  }
  require_uniform(words);
  const Packed zero(pack(std::vector<Sym>(words.front().size(), 0)));
  int best = words.front().size() + 1;
  for (const Word& w : words) {
    const int d = packed_distance(pack(w.s), zero);
    if (d > 0) best = std::min(best, d);
  }
  res.d = best;
  res.work = words.size();
  res.single_word = best == words.front().size() + 1 && words.size() < 2;
  return res;
}

VerificationReport verify_min_distance(const std::vector<Word>& words, int d,
                                       std::uint64_t budget, std::uint64_t seed) {
  VerificationReport rep;
  rep.property = "min-distance>=" + std::to_string(d);
  DistanceResult r = min_distance(words, budget, seed);
  rep.work = r.work;
  rep.exhaustive = r.exhaustive;
  rep.seed = r.seed;
  rep.trials = r.trials;
  if (!r.single_word && r.d < d) {
    rep.verdict = Verdict::fail;
    rep.witness = "minimum distance " + std::to_string(r.d);
  } else {
    rep.verdict = r.exhaustive ? Verdict::pass : Verdict::sampled_pass;
  }
  return rep;
}

namespace {

// Violating (a, b, ell): prefix of length ell of a equals suffix of b.
bool wmu_pair_violation(const Word& a, const Word& b, int kappa, int& ell_out) {
  const int n = a.size();
  for (int ell = kappa; ell <= n - 1; ++ell) {
    bool eq = true;
    for (int t = 0; t < ell && eq; ++t) eq = a.s[t] == b.s[n - ell + t];
    if (eq) {
      ell_out = ell;
      return true;
    }
  }
  return false;
}

// Violating (a, b, i, j): complement of a[i..i+f-1] equals the forward or
// reversed window of b at j (0-indexed starts).
bool apd_pair_violation(const Word& a, const Word& b, int f, int& i_out, int& j_out,
                        bool& reversed_out) {
  const int n = a.size();
  for (int i = 0; i + f <= n; ++i) {
    for (int j = 0; j + f <= n; ++j) {
      bool fwd = true, bwd = true;
      for (int t = 0; t < f && (fwd || bwd); ++t) {
        const Sym ca = a.s[i + t] ^ 1;
        if (ca != b.s[j + t]) fwd = false;
        if (ca != b.s[j + f - 1 - t]) bwd = false;
      }
      if (fwd || bwd) {
        i_out = i;
        j_out = j;
        reversed_out = !fwd;
        return true;
      }
    }
  }
  return false;
}

template <typename PairCheck>
VerificationReport scan_ordered_pairs(const std::vector<Word>& words,
                                      std::string property,
                                      std::uint64_t per_pair_work,
                                      std::uint64_t budget, std::uint64_t seed,
                                      std::uint64_t sample_trials,
                                      PairCheck check) {
  VerificationReport rep;
  rep.property = std::move(property);
  if (words.empty()) return rep;
  require_uniform(words);
  const std::uint64_t m = words.size();
  const std::uint64_t total = m * m * per_pair_work;
  if (total <= budget) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (check(i, j, rep)) return rep;
    rep.work = total;
  } else {
    rep.exhaustive = false;
    rep.seed = seed;
    rep.trials = sample_trials;
    rep.work = sample_trials * per_pair_work;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::uint64_t t = 0; t < sample_trials; ++t)
      if (check(pick(rng), pick(rng), rep)) return rep;
    rep.verdict = Verdict::sampled_pass;
  }
  return rep;
}

}  // namespace

VerificationReport verify_wmu(const std::vector<Word>& words, int kappa,
                              std::uint64_t budget, std::uint64_t seed,
                              std::uint64_t sample_trials) {
  if (kappa < 1) throw std::invalid_argument("kappa must be at least 1");
  const int n = words.empty() ? 0 : words.front().size();
  const std::uint64_t per_pair = std::max(0, n - kappa);
  return scan_ordered_pairs(
      words, "wmu(kappa=" + std::to_string(kappa) + ")", std::max<std::uint64_t>(per_pair, 1),
      budget, seed, sample_trials, [&](std::size_t i, std::size_t j, VerificationReport& rep) {
        int ell = 0;
        if (wmu_pair_violation(words[i], words[j], kappa, ell)) {
          rep.verdict = Verdict::fail;
          rep.witness_indices = {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), ell};
          std::ostringstream os;
          os << "prefix of length " << ell << " of word " << i << " (" << word_str(words[i])
             << ") is a suffix of word " << j << " (" << word_str(words[j]) << ")";
          rep.witness = os.str();
          return true;
        }
        return false;
      });
}

VerificationReport verify_apd(const std::vector<Word>& words, int f,
                              std::uint64_t budget, std::uint64_t seed,
                              std::uint64_t sample_trials) {
  const int n = words.empty() ? 0 : words.front().size();
  if (!words.empty() && (f < 1 || f > n)) throw std::invalid_argument("window length out of range");
  const std::uint64_t wpos = n + 1 - f;
  return scan_ordered_pairs(
      words, "apd(f=" + std::to_string(f) + ")", std::max<std::uint64_t>(wpos * wpos, 1),
      budget, seed, sample_trials, [&](std::size_t i, std::size_t j, VerificationReport& rep) {
        int wi = 0, wj = 0;
        bool reversed = false;
        if (apd_pair_violation(words[i], words[j], f, wi, wj, reversed)) {
          rep.verdict = Verdict::fail;
          rep.witness_indices = {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), wi, wj};
          std::ostringstream os;
          os << "complement of window [" << wi << "," << wi + f - 1 << "] of word " << i
             << " matches " << (reversed ? "reversed " : "") << "window at " << wj
             << " of word " << j;
          rep.witness = os.str();
          return true;
        }
        return false;
      });
}

VerificationReport verify_balance(const std::vector<Word>& words, BalanceMode mode) {
  VerificationReport rep;
  rep.property = mode == BalanceMode::balanced ? "balanced"
                 : mode == BalanceMode::gc     ? "gc-balanced"
                                               : "almost-balanced";
  for (std::size_t idx = 0; idx < words.size(); ++idx) {
    const Word& w = words[idx];
    const int n = w.size();
    int count = 0;
    if (mode == BalanceMode::gc || (mode == BalanceMode::almost && w.q == 4)) {
      for (Sym x : w.s) count += (x & 2) != 0;
    } else if (mode == BalanceMode::balanced && w.q == 2) {
      for (Sym x : w.s) count += x == 0;  // zeros, per the balanced definition
    } else {
      for (Sym x : w.s) count += x != 0;
    }
    const int lo = mode == BalanceMode::almost ? n / 2 - 1 : n / 2;
    const int hi = mode == BalanceMode::almost ? (n + 1) / 2 + 1 : (n + 1) / 2;
    ++rep.work;
    if (count < lo || count > hi) {
      rep.verdict = Verdict::fail;
      rep.witness_indices = {static_cast<std::int64_t>(idx)};
      rep.witness = "word " + std::to_string(idx) + " (" + word_str(w) + ") has count " +
                    std::to_string(count);
      return rep;
    }
  }
  return rep;
}

VerificationReport verify_reverse_distances(const std::vector<Word>& words, int d,
                                            std::uint64_t budget, std::uint64_t seed,
                                            std::uint64_t sample_trials) {
  std::vector<Packed> fwd(words.size()), bwd(words.size()), bwdc(words.size());
  if (!words.empty()) require_uniform(words);
  for (std::size_t i = 0; i < words.size(); ++i) {
    fwd[i] = pack(words[i].s);
    const auto r = rev(words[i].s);
    bwd[i] = pack(r);
    bwdc[i] = pack(comp(r));
  }
  return scan_ordered_pairs(
      words, "reverse-distances>=" + std::to_string(d), 2, budget, seed, sample_trials,
      [&](std::size_t i, std::size_t j, VerificationReport& rep) {
        const int dr = packed_distance(fwd[i], bwd[j]);
        const int drc = packed_distance(fwd[i], bwdc[j]);
        if (dr < d || drc < d) {
          rep.verdict = Verdict::fail;
          rep.witness_indices = {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                                 std::min(dr, drc)};
          std::ostringstream os;
          os << "d(word " << i << ", " << (dr < d ? "reverse" : "reverse-complement")
             << " of word " << j << ") = " << std::min(dr, drc);
          rep.witness = os.str();
          return true;
        }
        return false;
      });
}

int max_run(const std::vector<Word>& words) {
  int best = 0;
  for (const Word& w : words) {
    if (w.size() == 0) continue;
    bool constant = true;
    for (Sym x : w.s) constant = constant && x == w.s[0];
    if (constant) continue;
    int cur = 1;
    for (int i = 1; i < w.size(); ++i) {
      cur = (w.s[i] == w.s[i - 1]) ? cur + 1 : 1;
      best = std::max(best, cur);
    }
    best = std::max(best, 1);
  }
  return best;
}

CensusResult cyclic_class_census(const std::vector<Word>& words) {
  CensusResult res;
  std::map<std::vector<Sym>, std::uint64_t> classes;
  for (const Word& w : words) {
    // Lexicographically minimal rotation as the class key.
    std::vector<Sym> best = w.s;
    const int n = w.size();
    std::vector<Sym> rot = w.s;
    for (int i = 1; i < n; ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    ++classes[best];
  }
  res.classes = classes.size();
  res.total = words.size();
  for (const auto& [key, count] : classes) res.orbit_sizes.push_back(count);
  std::sort(res.orbit_sizes.rbegin(), res.orbit_sizes.rend());
  return res;
}

}  // namespace dnacodes::oracle
