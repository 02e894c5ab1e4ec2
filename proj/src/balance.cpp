#include "dnacodes/balance.hpp"

#include <algorithm>

namespace dnacodes {

bool is_balanced(const Word& w) {
  const int n = w.size();
  const int count = (w.q == 2) ? n - wt(w) : gc_count(w);  // zeros, or G/C
  return count == n / 2 || count == (n + 1) / 2;
}

bool is_almost_balanced(const Word& w) {
  const int n = w.size();
  const int count = (w.q == 2) ? wt(w) : gc_count(w);
  return count >= n / 2 - 1 && count <= (n + 1) / 2 + 1;
}

int knuth_index(const Word& w) {
  if (w.q != 2) throw std::invalid_argument("Knuth balancing is binary");
  for (int z = 0; z <= w.size(); ++z) {
    if (is_balanced(flip_prefix(w, z))) return z;
  }
  throw std::logic_error("no balancing index exists");  // unreachable
}

std::pair<int, Word> balancing_shift(const Word& w) {
  const int n = w.size();
  if (n % 2 == 0) throw std::invalid_argument("balancing shift requires odd length");
  for (int i = 0; i < n; ++i) {
    Word v = flip_prefix(shift(w, i), (n + 1) / 2);
    const bool ok = (w.q == 2) ? (wt(v) == (n - 1) / 2 || wt(v) == (n + 1) / 2)
                               : is_balanced(v);
    if (ok) return {i, v};
  }
  throw std::logic_error("flip lemma violated: no balancing shift found");
}

Word couple(const Word& a, const Word& b) {
  if (a.q != 2 || b.q != 2) throw std::invalid_argument("coupling takes binary words");
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  Word c(4, std::vector<Sym>(a.size(), 0));
  for (int i = 0; i < a.size(); ++i)
    c.s[i] = static_cast<Sym>((a.s[i] << 1) | b.s[i]);
  return c;
}

std::pair<Word, Word> uncouple(const Word& c) {
  if (c.q != 4) throw std::invalid_argument("uncoupling takes a quaternary word");
  Word a(2, std::vector<Sym>(c.size(), 0)), b = a;
  for (int i = 0; i < c.size(); ++i) {
    a.s[i] = c.s[i] >> 1;
    b.s[i] = c.s[i] & 1;
  }
  return {a, b};
}

namespace {

// Check-bit step of the balanced construction: appends 0 if the flipped word
// has weight (n+1)/2 and 1 if it has weight (n-1)/2.
Word append_check_bit(const Word& v) {
  const int n = v.size();
  Word out = v;
  if (wt(v) == (n + 1) / 2) out.s.push_back(0);
  else if (wt(v) == (n - 1) / 2) out.s.push_back(1);
  else throw std::logic_error("word is not within one flip of balance");
  return out;
}

}  // namespace

BinBalancedCode::BinBalancedCode(CyclicCode B, Poly hstar)
    : tav_(std::move(B), std::move(hstar)) {
  if (tav_.code().q != 2) throw std::invalid_argument("construction is binary");
  if (tav_.code().n % 2 == 0) throw std::invalid_argument("length must be odd");
}

Word BinBalancedCode::encode(const Word& msg) const {
  Word u = tav_.encode(msg);
  auto [j, v] = balancing_shift(u);
  (void)j;
  return append_check_bit(v);
}

Word BinBalancedCode::decode(const Word& v) const {
  if (v.size() != n()) throw std::invalid_argument("wrong length");
  Word w(v.q, std::vector<Sym>(v.s.begin(), v.s.end() - 1));
  Word a = flip_prefix(w, (w.size() + 1) / 2);  // undo phi; involution
  return tav_.decode(a).first;
}

std::vector<Word> BinBalancedCode::all_words() const {
  std::vector<Word> out;
  const std::uint64_t count = std::uint64_t{1} << message_len();
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<Sym> digits(message_len());
    for (int b = 0; b < message_len(); ++b) digits[b] = (i >> b) & 1;
    out.push_back(encode(Word(2, std::move(digits))));
  }
  return out;
}

std::vector<Word> bin_balanced_census(const CyclicCode& B, std::uint64_t limit) {
  if (B.q != 2 || B.n % 2 == 0) throw std::invalid_argument("binary odd-length input required");
  std::vector<Word> out;
  for (const Word& u : cyclic_class_representatives(enumerate_codewords(B, limit))) {
    auto [j, v] = balancing_shift(u);
    (void)j;
    out.push_back(append_check_bit(v));
  }
  return out;
}

GcBalancedCode::GcBalancedCode(LinearEncoder A, LinearEncoder B, int M)
    : A_(std::move(A)), B_(std::move(B)), M_(M) {
  if (A_.code().q != 2 || B_.code().q != 2)
    throw std::invalid_argument("input codes must be binary");
  p_ = A_.parity_len();
  if (B_.n() != A_.k())
    throw std::invalid_argument("B must have length equal to A's message length");
  if (M < 1) throw std::invalid_argument("multiplicity must be positive");
  // Size requirement: 2^(k_B) >= 2^p * n * M.
  const int n = A_.k();
  if (B_.k() >= 64 - p_) return;  // cannot overflow below
  const std::uint64_t need = (std::uint64_t{1} << p_) * static_cast<std::uint64_t>(n) * M;
  if ((std::uint64_t{1} << B_.k()) < need)
    throw std::invalid_argument("B is too small for the index packing");
}

std::uint64_t GcBalancedCode::pack(int i, int j, const Word& parity) const {
  std::uint64_t pbits = 0;
  for (int b = 0; b < p_; ++b) pbits |= static_cast<std::uint64_t>(parity.s[b]) << b;
  return ((static_cast<std::uint64_t>(i) * A_.k() + j) << p_) | pbits;
}

void GcBalancedCode::unpack(std::uint64_t idx, int& i, int& j, Word& parity) const {
  parity = Word(2, std::vector<Sym>(p_, 0));
  for (int b = 0; b < p_; ++b) parity.s[b] = (idx >> b) & 1;
  idx >>= p_;
  j = static_cast<int>(idx % A_.k());
  i = static_cast<int>(idx / A_.k());
}

Word GcBalancedCode::encode(const Word& msg, int i) const {
  if (msg.q != 2 || msg.size() != n()) throw std::invalid_argument("message has wrong shape");
  if (i < 1 || i > M_) throw std::invalid_argument("index out of [M]");
  const int j = knuth_index(msg);
  if (j >= n()) throw std::logic_error("balancing index out of packing range");
  Word a = flip_prefix(msg, j);
  Word parity = A_.parity_of(a);
  const std::uint64_t idx = pack(i - 1, j, parity);
  std::vector<Sym> mb(B_.k(), 0);
  for (int b = 0; b < B_.k(); ++b) mb[b] = (idx >> b) & 1;
  Word bword = B_.encode(Word(2, std::move(mb)));
  return couple(a, bword);
}

std::optional<std::pair<Word, int>> GcBalancedCode::decode(const Word& received) const {
  if (received.q != 4 || received.size() != n())
    throw std::invalid_argument("received word has wrong shape");
  auto [ahat, bhat] = uncouple(received);
  auto bmsg = B_.decode_bd(bhat);
  if (!bmsg) return std::nullopt;
  std::uint64_t idx = 0;
  for (int b = 0; b < B_.k(); ++b) idx |= static_cast<std::uint64_t>(bmsg->s[b]) << b;
  int i0 = 0, j = 0;
  Word parity(2, {});
  unpack(idx, i0, j, parity);
  if (i0 >= M_ || j >= n()) return std::nullopt;
  // Decode a p_m in A; the parity symbols are already correct.
  Word recA = ahat;
  recA.s.insert(recA.s.end(), parity.s.begin(), parity.s.end());
  auto a = A_.decode_bd(recA);
  if (!a) return std::nullopt;
  return std::make_pair(flip_prefix(*a, j), i0 + 1);
}

}  // namespace dnacodes
