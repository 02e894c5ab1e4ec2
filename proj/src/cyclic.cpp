#include "dnacodes/cyclic.hpp"

#include <algorithm>
#include <numeric>

namespace dnacodes {

const char* dist_status_name(DistStatus s) {
  switch (s) {
    case DistStatus::exact: return "exact";
    case DistStatus::sampled_lower_bound: return "sampled";
    case DistStatus::designed: return "designed";
    default: return "unknown";
  }
}

bool CyclicCode::contains(const Word& w) const {
  if (w.q != q || w.size() != n) return false;
  return poly_mod(poly_from_word(w), g).is_zero();
}

Word CyclicCode::codeword(const Poly& m) const {
  if (m.degree() >= k) throw std::invalid_argument("message degree exceeds k-1");
  return word_from_poly(m * g, n);
}

Word CyclicCode::codeword_at(std::uint64_t index) const {
  std::vector<Sym> digits(k, 0);
  for (int i = 0; i < k && index; ++i) {
    digits[i] = static_cast<Sym>(index % q);
    index /= q;
  }
  if (index) throw std::invalid_argument("message index exceeds q^k");
  return codeword(Poly(q, std::move(digits)));
}

CyclicCode code_from_generator(int q, int n, const Poly& g) {
  require_q(q);
  if (g.q != q) throw std::invalid_argument("field mismatch");
  if (n < 1) throw std::invalid_argument("length must be positive");
  if (std::gcd(n, q) != 1) throw std::invalid_argument("gcd(n, q) must be 1");
  if (!g.is_monic()) throw std::invalid_argument("generator must be monic");
  auto [h, rem] = poly_divmod(xn_minus_one(q, n), g);
  if (!rem.is_zero()) throw std::invalid_argument("generator does not divide X^n - 1");
  CyclicCode C;
  C.q = q;
  C.n = n;
  C.k = n - g.degree();
  if (C.k < 1) throw std::invalid_argument("dimension must be at least 1");
  C.g = g;
  C.h = h;
  return C;
}

CodeProperties code_properties(const CyclicCode& C) {
  CodeProperties p;
  p.contains_all_one = poly_eval(C.g, 1) != 0;
  p.reversible = self_reciprocal(C.g);
  return p;
}

std::uint64_t code_size_capped(const CyclicCode& C, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (int i = 0; i < C.k; ++i) {
    if (size > cap / C.q) return cap;
    size *= C.q;
  }
  return std::min(size, cap);
}

std::vector<Word> enumerate_codewords(const CyclicCode& C, std::uint64_t limit) {
  const std::uint64_t size = code_size_capped(C, limit + 1);
  if (size > limit) throw std::invalid_argument("code too large to enumerate");
  std::vector<Word> words;
  words.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i) words.push_back(C.codeword_at(i));
  return words;
}

Word canonical_rotation(const Word& w) {
  Word best = w;
  for (int i = 1; i < w.size(); ++i) {
    Word r = shift(w, i);
    if (r.s < best.s) best = r;
  }
  return best;
}

std::vector<Word> cyclic_class_representatives(const std::vector<Word>& words) {
  std::vector<Word> reps;
  for (const Word& w : words) {
    Word c = canonical_rotation(w);
    if (std::find(reps.begin(), reps.end(), c) == reps.end()) reps.push_back(c);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

CyclotomicData CyclotomicData::build(int q, int n) {
  require_q(q);
  if (n < 1 || std::gcd(n, q) != 1)
    throw std::invalid_argument("need gcd(n, q) = 1");
  // w = ord_n(q), the smallest w with n | q^w - 1.
  int w = 1;
  std::uint64_t pw = q % n;
  while (pw != 1 % n) {
    pw = (pw * q) % n;
    if (++w > 64) throw std::invalid_argument("length has no small splitting field");
  }
  CyclotomicData cd;
  cd.q = q;
  cd.n = n;
  cd.field = ExtField::build(q, w);
  cd.beta = cd.field.pow(cd.field.gen(), (cd.field.order() - 1) / n);
  return cd;
}

std::vector<int> CyclotomicData::coset_of(int e) const {
  e = ((e % n) + n) % n;
  std::vector<int> coset;
  int x = e;
  do {
    coset.push_back(x);
    x = static_cast<int>((static_cast<std::int64_t>(x) * q) % n);
  } while (x != e);
  std::sort(coset.begin(), coset.end());
  return coset;
}

Poly CyclotomicData::min_poly_of_root(int e) const {
  e = ((e % n) + n) % n;
  return minimal_polynomial(field, field.pow(beta, e));
}

std::vector<Poly> CyclotomicData::factors_of_xn_minus_one() const {
  std::vector<Poly> factors;
  std::vector<bool> seen(n, false);
  for (int e = 0; e < n; ++e) {
    if (seen[e]) continue;
    for (int x : coset_of(e)) seen[x] = true;
    factors.push_back(min_poly_of_root(e));
  }
  return factors;
}

namespace {

CyclicCode code_from_root_exponents(const CyclotomicData& cd,
                                    const std::vector<int>& exponents) {
  std::vector<std::vector<int>> cosets;
  Poly g = Poly::one(cd.q);
  for (int e : exponents) {
    auto coset = cd.coset_of(e);
    if (std::find(cosets.begin(), cosets.end(), coset) != cosets.end()) continue;
    cosets.push_back(coset);
    g = g * cd.min_poly_of_root(e);
  }
  return code_from_generator(cd.q, cd.n, g);
}

}  // namespace

CyclicCode bch_narrow_sense(int m, int d) {
  if (m < 2 || m > 16) throw std::invalid_argument("m out of range");
  const int n = (1 << m) - 1;
  if (d < 2 || d > n) throw std::invalid_argument("designed distance out of range");
  auto cd = CyclotomicData::build(2, n);
  std::vector<int> exps(d - 1);
  std::iota(exps.begin(), exps.end(), 1);
  CyclicCode C = code_from_root_exponents(cd, exps);
  C.d = d;
  C.d_status = DistStatus::designed;
  return C;
}

CyclicCode reversible_bch(int q, int m, int delta) {
  require_q(q);
  if (m < 1 || (q == 2 && m > 16) || (q == 4 && m > 8))
    throw std::invalid_argument("m out of range");
  std::int64_t n64 = 1;
  for (int i = 0; i < m; ++i) n64 *= q;
  const int n = static_cast<int>(n64 - 1);
  if (delta < 2 || delta >= n) throw std::invalid_argument("delta out of range [2, n)");
  auto cd = CyclotomicData::build(q, n);
  std::vector<int> exps;
  for (int i = 1; i < delta; ++i) {
    exps.push_back(i);
    exps.push_back(n - i);
  }
  CyclicCode C = code_from_root_exponents(cd, exps);
  C.d = delta;
  C.d_status = DistStatus::designed;
  auto props = code_properties(C);
  if (!props.reversible || !props.contains_all_one)
    throw std::logic_error("symmetric root set failed to produce a reversible code containing 1^n");
  return C;
}

LinearEncoder::LinearEncoder(CyclicCode code, int shorten, int decode_distance)
    : code_(std::move(code)), shorten_(shorten) {
  if (shorten < 0 || shorten >= code_.k)
    throw std::invalid_argument("shorten count out of range");
  if (decode_distance < 1) throw std::invalid_argument("distance must be positive");
  t_ = (decode_distance - 1) / 2;

  // Error patterns of weight <= t on the n - shorten transmitted positions.
  // Transmitted ring positions: parity 0..n-k-1 and message n-k+shorten..n-1.
  std::vector<int> positions;
  for (int i = 0; i < code_.n - code_.k; ++i) positions.push_back(i);
  for (int i = code_.n - code_.k + shorten_; i < code_.n; ++i) positions.push_back(i);

  Word zero = Word::zero(code_.q, code_.n);
  syndrome_table_.emplace(0, zero);
  std::vector<std::pair<Word, int>> frontier = {{zero, -1}};
  for (int w = 1; w <= t_; ++w) {
    std::vector<std::pair<Word, int>> next;
    for (const auto& [err, last] : frontier) {
      for (std::size_t pi = last + 1; pi < positions.size(); ++pi) {
        const int pos = positions[pi];
        for (Sym v = 1; v < code_.q; ++v) {
          Word e = err;
          e.s[pos] = v;
          const std::uint64_t key = syndrome_key(poly_mod(poly_from_word(e), code_.g));
          if (!syndrome_table_.emplace(key, e).second)
            throw std::logic_error("syndrome collision: distance too large for this code");
          next.emplace_back(std::move(e), static_cast<int>(pi));
        }
      }
    }
    frontier = std::move(next);
  }
}

std::uint64_t LinearEncoder::syndrome_key(const Poly& rem) const {
  std::uint64_t key = 0;
  for (int i = rem.degree(); i >= 0; --i) key = (key << 2) | rem.c[i];
  key = (key << 6) | static_cast<unsigned>(rem.degree() + 1);
  return key;
}

Word LinearEncoder::external_to_ring(const Word& ext) const {
  Word ring = Word::zero(code_.q, code_.n);
  const int kk = k(), par = parity_len();
  for (int i = 0; i < kk; ++i) ring.s[par + shorten_ + i] = ext.s[i];
  for (int j = 0; j < par; ++j) ring.s[j] = ext.s[kk + j];
  return ring;
}

Word LinearEncoder::ring_to_external(const Word& ring) const {
  Word ext = Word::zero(code_.q, n());
  const int kk = k(), par = parity_len();
  for (int i = 0; i < kk; ++i) ext.s[i] = ring.s[par + shorten_ + i];
  for (int j = 0; j < par; ++j) ext.s[kk + j] = ring.s[j];
  return ext;
}

Word LinearEncoder::encode(const Word& msg) const {
  if (msg.q != code_.q || msg.size() != k())
    throw std::invalid_argument("message has wrong length or field");
  // c = X^(n-k) m'(X) - (X^(n-k) m'(X) mod g), message part placed verbatim.
  std::vector<Sym> shifted(code_.n, 0);
  for (int i = 0; i < k(); ++i) shifted[parity_len() + shorten_ + i] = msg.s[i];
  Poly p(code_.q, std::move(shifted));
  Poly rem = poly_mod(p, code_.g);
  Word ring = word_from_poly(p + rem, code_.n);
  return ring_to_external(ring);
}

Word LinearEncoder::parity_of(const Word& msg) const {
  Word c = encode(msg);
  return Word(code_.q, std::vector<Sym>(c.s.begin() + k(), c.s.end()));
}

std::optional<Word> LinearEncoder::decode_bd(const Word& received) const {
  if (received.q != code_.q || received.size() != n())
    throw std::invalid_argument("received word has wrong length or field");
  Word ring = external_to_ring(received);
  const std::uint64_t key = syndrome_key(poly_mod(poly_from_word(ring), code_.g));
  auto it = syndrome_table_.find(key);
  if (it == syndrome_table_.end()) return std::nullopt;
  Word corrected = ring + it->second;
  // Shortened positions must still read zero.
  for (int i = 0; i < shorten_; ++i)
    if (corrected.s[parity_len() + i] != 0) return std::nullopt;
  Word ext = ring_to_external(corrected);
  return Word(code_.q, std::vector<Sym>(ext.s.begin(), ext.s.begin() + k()));
}

std::vector<Poly> tavares_hstar_candidates(const CyclicCode& C) {
  auto cd = CyclotomicData::build(C.q, C.n);
  std::vector<Poly> hfactors;
  for (const Poly& f : cd.factors_of_xn_minus_one())
    if (divides(f, C.h)) hfactors.push_back(f);

  std::vector<Poly> out;
  const std::size_t subsets = std::size_t{1} << hfactors.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    Poly hstar = Poly::one(C.q);
    for (std::size_t i = 0; i < hfactors.size(); ++i)
      if (mask >> i & 1) hstar = hstar * hfactors[i];
    // Need ord(X mod h*) = n, i.e. h* divides no X^s - 1 with s in [n-1].
    bool ok = true;
    Poly xs = poly_mod(Poly::x_pow(C.q, 1), hstar);
    for (int s = 1; s < C.n && ok; ++s) {
      if (xs == Poly::one(C.q)) ok = false;
      xs = poly_mod(xs * Poly::x_pow(C.q, 1), hstar);
    }
    if (ok) out.push_back(hstar);
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c < b.c;
  });
  return out;
}

TavaresEncoder::TavaresEncoder(CyclicCode code, Poly hstar)
    : code_(std::move(code)), hstar_(std::move(hstar)) {
  if (hstar_.q != code_.q) throw std::invalid_argument("field mismatch");
  if (!hstar_.is_monic() || !divides(hstar_, code_.h))
    throw std::invalid_argument("h* must be a monic divisor of h");
  kstar_ = code_.k - hstar_.degree();
  if (kstar_ < 1) throw std::invalid_argument("k* must be at least 1");
  Poly xs = poly_mod(Poly::one(code_.q), hstar_);
  for (int s = 0; s < code_.n; ++s) {
    if (!shift_of_.emplace(xs.c, s).second)
      throw std::invalid_argument("h* divides some X^s - 1, shifts are not recoverable");
    xs = poly_mod(xs * Poly::x_pow(code_.q, 1), hstar_);
  }
}

Word TavaresEncoder::encode(const Word& msg) const {
  if (msg.q != code_.q || msg.size() != kstar_)
    throw std::invalid_argument("message has wrong length or field");
  Poly m = poly_from_word(msg);
  return word_from_poly((m * hstar_ + Poly::one(code_.q)) * code_.g, code_.n);
}

std::pair<Word, int> TavaresEncoder::decode(const Word& received) const {
  if (received.q != code_.q || received.size() != code_.n)
    throw std::invalid_argument("received word has wrong length or field");
  auto [mc, rem] = poly_divmod(poly_from_word(received), code_.g);
  if (!rem.is_zero())
    throw std::invalid_argument("received word is not a codeword");
  auto it = shift_of_.find(poly_mod(mc, hstar_).c);
  if (it == shift_of_.end())
    throw std::invalid_argument("received word is not a shift of an encoded word");
  const int s = it->second;
  // X^(n-s) mc = m h* + 1 in GF(q)[X]/(h), and deg(m h*) < k, so the
  // reduction mod h is exact.
  Poly u = poly_mod(quotient_mul(Poly::x_pow(code_.q, (code_.n - s) % code_.n), mc, code_.n), code_.h);
  auto [m, r2] = poly_divmod(u + Poly::one(code_.q), hstar_);
  if (!r2.is_zero() || m.degree() >= kstar_)
    throw std::invalid_argument("received word is not a shift of an encoded word");
  return {word_from_poly(m, kstar_), s};
}

}  // namespace dnacodes
