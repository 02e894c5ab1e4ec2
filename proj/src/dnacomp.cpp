#include "dnacodes/dnacomp.hpp"

#include "dnacodes/balance.hpp"

namespace dnacodes {

int pi_s(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("length must be odd and >= 3");
  return (n % 4 == 1) ? (n - 1) / 4 : (n + 1) / 4;
}

Word pi_map(const Word& w) {
  if (w.q != 4) throw std::invalid_argument("the flip map is quaternary");
  const int n = w.size();
  const int s = pi_s(n);
  Word r(w);
  for (int i = 0; i < s; ++i) {
    r.s[i] ^= 2;
    r.s[n - 1 - i] ^= 2;
  }
  return r;
}

DnaComputingCode::DnaComputingCode(CyclicCode C, RcGenSet S)
    : sub_(std::move(C), std::move(S)) {
  if (sub_.code().q != 4) throw std::invalid_argument("construction is quaternary");
  if (sub_.code().n % 2 == 0) throw std::invalid_argument("length must be odd");
  if (sub_.set().flavor != RcFlavor::rc2)
    throw std::invalid_argument("DNA computing construction takes an rc2-flavor set");
  const auto check = validate_rc_generating(sub_.code(), sub_.set());
  if (!check.ok)
    throw std::invalid_argument("set is not rc2-generating: violation at " +
                                check.violation->condition);
}

Word DnaComputingCode::balance_word(const Word& u) const {
  for (int i = 0; i < u.size(); ++i) {
    Word v = pi_map(shift(u, i));
    if (is_balanced(v)) return v;
  }
  // The flip lemma guarantees a balancing shift exists; reaching this line
  // means the construction is broken.
  throw std::logic_error("no GC-balancing shift found");
}

Word DnaComputingCode::encode(const Poly& m, int i) const {
  return balance_word(sub_.encode(m, i));
}

Word DnaComputingCode::encode_at(std::uint64_t msg_index, int i) const {
  return balance_word(sub_.encode_at(msg_index, i));
}

std::pair<Poly, int> DnaComputingCode::decode(const Word& w) const {
  if (w.q != 4 || w.size() != n()) throw std::invalid_argument("word has wrong shape");
  const Word x = pi_map(w);
  for (int s = 0; s < n(); ++s) {
    const Word u = shift(x, (n() - s) % n());
    try {
      auto [m, i] = sub_.decode(u);
      // Canonical check: the smallest balancing shift must reproduce w.
      if (balance_word(u) == w) return {m, i};
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("no shift yields a subcode member");
}

std::vector<Word> DnaComputingCode::words(int deg_cap) const {
  std::vector<Word> out;
  for (const Word& u : sub_.words(deg_cap)) out.push_back(balance_word(u));
  return out;
}

}  // namespace dnacodes
