#include "dnacodes/primer.hpp"

#include <algorithm>
#include <numeric>

namespace dnacodes {

int rll_max_len(int ell) { return (1 << (ell - 3)) + ell - 2; }

namespace {

void require_rll_params(int ell, int L) {
  if (ell < 5) throw std::invalid_argument("run-length parameter must be at least 5");
  if (L < 2) throw std::invalid_argument("message must be nonempty");
  if (L > rll_max_len(ell))
    throw std::invalid_argument("length exceeds replacement-pointer capacity");
}

// First position of a zero-run of length a, or -1.
int find_zero_run(const std::vector<Sym>& u, int a) {
  int run = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    run = (u[i] == 0) ? run + 1 : 0;
    if (run == a) return static_cast<int>(i) - a + 1;
  }
  return -1;
}

}  // namespace

Word rll_encode(const Word& msg, int ell) {
  if (msg.q != 2) throw std::invalid_argument("run-length coding is binary");
  const int L = msg.size() + 1;
  require_rll_params(ell, L);
  const int a = ell - 2;       // forbidden zero-run in the transition domain
  const int ptr_bits = ell - 3;

  // Transition-domain content: leading marker, then all but the first
  // message bit (that bit becomes the initial symbol of the output).
  std::vector<Sym> u;
  u.reserve(L - 1);
  u.push_back(1);
  u.insert(u.end(), msg.s.begin() + 1, msg.s.end());

  for (int iter = 0; iter <= L; ++iter) {
    const int p = find_zero_run(u, a);
    if (p < 0) break;
    if (p == 0) throw std::logic_error("zero run at marker position");
    if (iter == L) throw std::logic_error("replacement loop failed to terminate");
    u.erase(u.begin() + p, u.begin() + p + a);
    std::vector<Sym> block(1 + ptr_bits, 0);
    for (int t = 0; t < ptr_bits; ++t) block[1 + t] = (p >> t) & 1;
    u.insert(u.begin(), block.begin(), block.end());
  }

  Word w(2, std::vector<Sym>(L, 0));
  w.s[0] = msg.s[0];
  for (int i = 0; i + 1 < L; ++i) w.s[i + 1] = w.s[i] ^ u[i];
  if (max_run(w) >= ell - 1) throw std::logic_error("run-length bound violated");
  return w;
}

Word rll_decode(const Word& w, int ell) {
  if (w.q != 2) throw std::invalid_argument("run-length coding is binary");
  const int L = w.size();
  require_rll_params(ell, L);
  const int a = ell - 2;
  const int ptr_bits = ell - 3;

  std::vector<Sym> u(L - 1);
  for (int i = 0; i + 1 < L; ++i) u[i] = w.s[i] ^ w.s[i + 1];

  for (int iter = 0;; ++iter) {
    if (iter > L) throw std::invalid_argument("malformed run-length word");
    if (u.empty()) throw std::invalid_argument("malformed run-length word");
    if (u[0] == 1) break;
    int p = 0;
    for (int t = 0; t < ptr_bits; ++t) p |= static_cast<int>(u[1 + t]) << t;
    std::vector<Sym> v(u.begin() + 1 + ptr_bits, u.end());
    if (p < 1 || p > static_cast<int>(v.size()))
      throw std::invalid_argument("malformed replacement pointer");
    u.clear();
    u.insert(u.end(), v.begin(), v.begin() + p);
    u.insert(u.end(), a, 0);
    u.insert(u.end(), v.begin() + p, v.end());
  }

  std::vector<Sym> msg;
  msg.reserve(L - 1);
  msg.push_back(w.s[0]);
  msg.insert(msg.end(), u.begin() + 1, u.end());
  return Word(2, std::move(msg));
}

ApdBlockCode::ApdBlockCode(int ell) : ell_(ell) {
  if (ell < 8 || ell > 10) throw std::invalid_argument("block parameter out of range [8,10]");
  f_ = 1 << (ell - 4);
}

std::uint64_t ApdBlockCode::size() const {
  return static_cast<std::uint64_t>(slots()) << msg_len();
}

Word ApdBlockCode::encode(int slot, const Word& msg) const {
  if (slot < 1 || slot > slots()) throw std::invalid_argument("slot out of range");
  if (msg.q != 2 || msg.size() != msg_len())
    throw std::invalid_argument("message has wrong shape");
  const Word a0 = rll_encode(msg, ell_);  // length f-ell-3, no run >= ell-1
  std::vector<Sym> out;
  out.reserve(f_);
  const int s = slot - 1;
  out.insert(out.end(), a0.s.begin(), a0.s.begin() + s);
  out.push_back(0);
  out.insert(out.end(), ell_, 1);
  out.push_back(0);
  out.insert(out.end(), a0.s.begin() + s, a0.s.end());
  out.push_back(1);
  return Word(2, std::move(out));
}

std::pair<int, Word> ApdBlockCode::decode(const Word& w) const {
  if (w.q != 2 || w.size() != f_) throw std::invalid_argument("word has wrong shape");
  // Locate the unique occurrence of 0 1^ell 0.
  int pos = -1, count = 0;
  for (int i = 0; i + ell_ + 2 <= f_; ++i) {
    bool hit = w.s[i] == 0 && w.s[i + ell_ + 1] == 0;
    for (int t = 1; hit && t <= ell_; ++t) hit = w.s[i + t] == 1;
    if (hit) {
      pos = i;
      ++count;
    }
  }
  if (count != 1) throw std::invalid_argument("marker substring not unique");
  if (w.s[f_ - 1] != 1) throw std::invalid_argument("word does not end with one");
  std::vector<Sym> a0(w.s.begin(), w.s.begin() + pos);
  a0.insert(a0.end(), w.s.begin() + pos + ell_ + 2, w.s.end() - 1);
  return {pos + 1, rll_decode(Word(2, std::move(a0)), ell_)};
}

Word ApdBlockCode::encode_at(std::uint64_t index) const {
  if (index >= size()) throw std::invalid_argument("index out of range");
  const std::uint64_t per_slot = std::uint64_t{1} << msg_len();
  const int slot = static_cast<int>(index / per_slot) + 1;
  std::uint64_t bits = index % per_slot;
  std::vector<Sym> msg(msg_len(), 0);
  for (int b = 0; b < msg_len(); ++b) msg[b] = (bits >> b) & 1;
  return encode(slot, Word(2, std::move(msg)));
}

std::vector<Word> ApdBlockCode::all_words() const {
  std::vector<Word> out;
  out.reserve(size());
  for (std::uint64_t i = 0; i < size(); ++i) out.push_back(encode_at(i));
  return out;
}

GeneralPrimerCode::GeneralPrimerCode(int ell, int r, LinearEncoder B)
    : A_(ell), B_(std::move(B)), r_(r) {
  if (r < 1) throw std::invalid_argument("block count must be positive");
  if (B_.code().q != 2) throw std::invalid_argument("input code must be binary");
  if (B_.k() != r * A_.f())
    throw std::invalid_argument("B message length must equal r*f");
  const int f = A_.f(), p = B_.parity_len();
  if (ell + 3 > f) throw std::invalid_argument("need ell + 3 <= f");
  if (p + p / (ell - 1) + 1 > f)
    throw std::invalid_argument("parity too long for the marker spacing");
  n_ = r * f + p + p / (ell - 1) + ell + 2;
}

std::uint64_t GeneralPrimerCode::size() const {
  std::uint64_t s = 1;
  for (int i = 0; i < r_; ++i) s *= A_.size();
  return s;
}

Word GeneralPrimerCode::encode(const std::vector<std::pair<int, Word>>& blocks) const {
  if (static_cast<int>(blocks.size()) != r_)
    throw std::invalid_argument("expected r blocks");
  std::vector<Sym> a;
  a.reserve(r_ * A_.f());
  for (const auto& [slot, msg] : blocks) {
    const Word b = A_.encode(slot, msg);
    a.insert(a.end(), b.s.begin(), b.s.end());
  }
  const Word parity = B_.parity_of(Word(2, a));

  std::vector<Sym> out;
  out.reserve(n_);
  out.push_back(0);
  out.insert(out.end(), A_.ell(), 1);
  out.insert(out.end(), a.begin(), a.end());
  // Parity with a one inserted after every ell-1 bits and a final one.
  for (int i = 0; i < parity.size(); ++i) {
    out.push_back(parity.s[i]);
    if ((i + 1) % (A_.ell() - 1) == 0) out.push_back(1);
  }
  out.push_back(1);
  if (static_cast<int>(out.size()) != n_) throw std::logic_error("length bookkeeping failed");
  return Word(2, std::move(out));
}

Word GeneralPrimerCode::encode_at(std::uint64_t index) const {
  std::vector<std::pair<int, Word>> blocks(r_);
  const std::uint64_t per_slot = std::uint64_t{1} << A_.msg_len();
  for (int b = r_ - 1; b >= 0; --b) {
    const std::uint64_t sub = index % A_.size();
    index /= A_.size();
    std::vector<Sym> msg(A_.msg_len(), 0);
    for (int t = 0; t < A_.msg_len(); ++t) msg[t] = ((sub % per_slot) >> t) & 1;
    blocks[b] = {static_cast<int>(sub / per_slot) + 1, Word(2, std::move(msg))};
  }
  if (index) throw std::invalid_argument("index out of range");
  return encode(blocks);
}

std::vector<std::pair<int, Word>> GeneralPrimerCode::decode(const Word& w) const {
  if (w.q != 2 || w.size() != n_) throw std::invalid_argument("word has wrong shape");
  const int ell = A_.ell(), f = A_.f();
  if (w.s[0] != 0) throw std::invalid_argument("bad prefix");
  for (int i = 1; i <= ell; ++i)
    if (w.s[i] != 1) throw std::invalid_argument("bad prefix");
  std::vector<Sym> a(w.s.begin() + 1 + ell, w.s.begin() + 1 + ell + r_ * f);

  // The tail before the final one is the parity stream with a marker one
  // after every ell-1 parity bits; strip the markers.
  std::vector<Sym> plain;
  plain.reserve(B_.parity_len());
  int run = 0;
  for (std::size_t i = 1 + ell + r_ * f; i < w.s.size() - 1; ++i) {
    if (run == ell - 1) {
      if (w.s[i] != 1) throw std::invalid_argument("missing parity marker");
      run = 0;
      continue;
    }
    plain.push_back(w.s[i]);
    ++run;
  }
  if (static_cast<int>(plain.size()) != B_.parity_len())
    throw std::invalid_argument("parity length mismatch");
  if (w.s.back() != 1) throw std::invalid_argument("missing final one");

  const Word amsg(2, a);
  if (B_.parity_of(amsg) != Word(2, plain))
    throw std::invalid_argument("parity check failed");

  std::vector<std::pair<int, Word>> blocks;
  for (int b = 0; b < r_; ++b) {
    std::vector<Sym> seg(a.begin() + b * f, a.begin() + (b + 1) * f);
    blocks.push_back(A_.decode(Word(2, std::move(seg))));
  }
  return blocks;
}

Word almost_balanced_mask(int q, int n) {
  require_q(q);
  if (n % 2 == 0 || n < 3) throw std::invalid_argument("length must be odd and >= 3");
  const int mu = (n - 1) / 2;
  const Sym unit = (q == 2) ? 1 : 2;
  std::vector<Sym> mask(n, 0);
  for (int i = 0; i <= mu; ++i) mask[i] = unit;
  mask[n - 1] = unit;
  return Word(q, std::move(mask));
}

std::vector<Word> construct_primer_almost_balanced(const CyclicCode& B) {
  if (B.n % 2 == 0) throw std::invalid_argument("length must be odd");
  if (B.k > (B.n + 1 + 3) / 4)
    throw std::invalid_argument("dimension exceeds ceil((n+1)/4)");
  const auto props = code_properties(B);
  if (!props.contains_all_one) throw std::invalid_argument("code must contain 1^n");

  const Word mask = almost_balanced_mask(B.q, B.n);
  std::vector<Word> out;
  for (const Word& u : enumerate_codewords(B, std::uint64_t{1} << 22)) {
    auto [j, flipped] = balancing_shift(u);
    (void)flipped;
    out.push_back(shift(u, j) + mask);
  }
  return out;
}

const char* rc_flavor_name(RcFlavor f) { return f == RcFlavor::rc ? "rc" : "rc2"; }

void RcGenSet::canonicalize() {
  std::sort(ps.begin(), ps.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c < b.c;
  });
}

namespace {

RcValidationResult fail_at(std::string cond, int i, int j, int s, std::string detail,
                           std::uint64_t checks) {
  RcValidationResult r;
  r.ok = false;
  r.violation = RcViolation{std::move(cond), i, j, s, std::move(detail)};
  r.checks = checks;
  return r;
}

}  // namespace

RcValidationResult validate_rc_generating(const CyclicCode& C, const RcGenSet& S) {
  const auto props = code_properties(C);
  if (!props.reversible || !props.contains_all_one)
    throw std::invalid_argument("host code must be reversible and contain 1^n");

  const Poly& hstar = S.hstar;
  const int q = C.q, n = C.n, k = C.k;
  const int P = static_cast<int>(S.ps.size());
  std::uint64_t checks = 0;

  // (R1) h* divides h.
  ++checks;
  if (hstar.is_zero() || !hstar.is_monic() || !divides(hstar, C.h))
    return fail_at("R1", 0, 0, 0, "h* is not a monic divisor of h", checks);
  const int dstar = hstar.degree();

  // (R2) h*(1) != 0.
  ++checks;
  if (poly_eval(hstar, 1) == 0) return fail_at("R2", 0, 0, 0, "h*(1) = 0", checks);

  // (R3) h* = X^(d*) h*(1/X) / h*(0).
  ++checks;
  if (hstar.at(0) == 0 || !self_reciprocal(hstar))
    return fail_at("R3", 0, 0, 0, "h* is not self-reciprocal", checks);

  // (R7) deg p_i < deg h*.
  for (int i = 0; i < P; ++i) {
    ++checks;
    if (S.ps[i].q != q) throw std::invalid_argument("field mismatch in p list");
    if (S.ps[i].degree() >= dstar)
      return fail_at("R7", i + 1, 0, 0, "deg p exceeds deg h* - 1", checks);
  }

  // (R4) h* does not divide X^s p_i - p_j, s in [n-1]; s = 0 added for
  // i != j so that duplicated p_i are rejected.
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j) {
      Poly xs_pi = S.ps[i];  // X^s p_i, s advancing from 0
      for (int s = 0; s <= n - 1; ++s) {
        if (s > 0 || i != j) {
          ++checks;
          if (divides(hstar, xs_pi + S.ps[j]))
            return fail_at("R4", i + 1, j + 1, s, "h* divides X^s p_i - p_j", checks);
        }
        xs_pi = xs_pi * Poly::x_pow(q, 1);
      }
    }
  }

  const bool rc2 = S.flavor == RcFlavor::rc2;
  const int s_max_5 = rc2 ? n - 1 : n - k;
  const char* name5 = rc2 ? "R5'" : "R5";

  // (R5)/(R5') h* does not divide X^s p_i - X^(k-1) p_j(1/X).
  for (int j = 0; j < P; ++j) {
    const Poly pj_rev = shifted_reciprocal(S.ps[j], k - 1);
    for (int i = 0; i < P; ++i) {
      Poly xs_pi = S.ps[i];
      for (int s = 0; s <= s_max_5; ++s) {
        ++checks;
        if (divides(hstar, xs_pi + pj_rev))
          return fail_at(name5, i + 1, j + 1, s,
                         "h* divides X^s p_i - X^(k-1) p_j(1/X)", checks);
        xs_pi = xs_pi * Poly::x_pow(q, 1);
      }
    }
  }

  // (R6) h* does not divide X^(s+k-1) p_i(1/X) - p_j, rc flavor only.
  if (!rc2) {
    for (int i = 0; i < P; ++i) {
      Poly xs_pi_rev = shifted_reciprocal(S.ps[i], k - 1);
      for (int s = 0; s <= n - k; ++s) {
        for (int j = 0; j < P; ++j) {
          ++checks;
          if (divides(hstar, xs_pi_rev + S.ps[j]))
            return fail_at("R6", i + 1, j + 1, s,
                           "h* divides X^(s+k-1) p_i(1/X) - p_j", checks);
        }
        xs_pi_rev = xs_pi_rev * Poly::x_pow(q, 1);
      }
    }
  }

  RcValidationResult r;
  r.checks = checks;
  return r;
}

RcGenSet search_rc_generating(const CyclicCode& C, RcFlavor flavor) {
  const auto props = code_properties(C);
  if (!props.reversible || !props.contains_all_one)
    throw std::invalid_argument("host code must be reversible and contain 1^n");
  if (flavor == RcFlavor::rc && !(C.n - C.k < C.k - 1))
    throw std::invalid_argument("rc search requires n - k < k - 1");

  // The host field must have n = q^m - 1 so primitive elements are exactly
  // the primitive n-th roots of unity.
  int m = 0;
  {
    std::int64_t t = C.n + 1;
    while (t % C.q == 0 && t > 1) {
      t /= C.q;
      ++m;
    }
    if (t != 1 || m < 1) throw std::invalid_argument("length is not q^m - 1");
  }
  const ExtField F = ExtField::build(C.q, m);
  const ExtField::Elem alpha = find_primitive_avoiding(F, C.g);

  RcGenSet S;
  S.flavor = flavor;
  S.hstar = minimal_polynomial(F, alpha) * minimal_polynomial(F, F.inv(alpha));
  if (flavor == RcFlavor::rc) S.ps = {Poly::one(C.q)};
  else S.ps = {minimal_polynomial(F, alpha)};
  S.canonicalize();

  const auto check = validate_rc_generating(C, S);
  if (!check.ok)
    throw std::runtime_error("constructed set failed validation at " +
                             check.violation->condition);
  return S;
}

RcSubcode::RcSubcode(CyclicCode C, RcGenSet S) : C_(std::move(C)), S_(std::move(S)) {
  S_.canonicalize();
  if (S_.hstar.q != C_.q) throw std::invalid_argument("field mismatch");
  if (!S_.hstar.is_monic() || !divides(S_.hstar, C_.h))
    throw std::invalid_argument("h* must be a monic divisor of h");
  kstar_ = C_.k - S_.hstar.degree();
  if (kstar_ < 1) throw std::invalid_argument("k* must be at least 1");
  if (S_.ps.empty()) throw std::invalid_argument("empty p list");
  for (const Poly& p : S_.ps)
    if (p.degree() >= S_.hstar.degree())
      throw std::invalid_argument("p degree must be below deg h*");
}

std::uint64_t RcSubcode::size() const {
  std::uint64_t s = static_cast<std::uint64_t>(P());
  for (int i = 0; i < kstar_; ++i) s *= C_.q;
  return s;
}

Word RcSubcode::encode(const Poly& m, int i) const {
  if (m.q != C_.q || m.degree() >= kstar_)
    throw std::invalid_argument("message degree must be below k*");
  if (i < 1 || i > P()) throw std::invalid_argument("p index out of [P]");
  return word_from_poly((m * S_.hstar + S_.ps[i - 1]) * C_.g, C_.n);
}

Word RcSubcode::encode_at(std::uint64_t msg_index, int i) const {
  std::vector<Sym> digits(kstar_, 0);
  for (int t = 0; t < kstar_ && msg_index; ++t) {
    digits[t] = static_cast<Sym>(msg_index % C_.q);
    msg_index /= C_.q;
  }
  if (msg_index) throw std::invalid_argument("message index exceeds q^(k*)");
  return encode(Poly(C_.q, std::move(digits)), i);
}

std::pair<Poly, int> RcSubcode::decode(const Word& w) const {
  if (w.q != C_.q || w.size() != C_.n) throw std::invalid_argument("word has wrong shape");
  auto [inner, rem_g] = poly_divmod(poly_from_word(w), C_.g);
  if (!rem_g.is_zero()) throw std::invalid_argument("word is not in the host code");
  auto [m, rem_h] = poly_divmod(inner, S_.hstar);
  const auto it = std::find(S_.ps.begin(), S_.ps.end(), rem_h);
  if (it == S_.ps.end()) throw std::invalid_argument("word is not in the subcode");
  if (m.degree() >= kstar_) throw std::invalid_argument("word is not in the subcode");
  return {m, static_cast<int>(it - S_.ps.begin()) + 1};
}

std::vector<Word> RcSubcode::words(int deg_cap) const {
  const int cap = deg_cap < 0 ? kstar_ : deg_cap;
  if (cap > kstar_) throw std::invalid_argument("degree cap exceeds k*");
  std::uint64_t count = 1;
  for (int i = 0; i < cap; ++i) count *= C_.q;
  if (count > (std::uint64_t{1} << 26)) throw std::invalid_argument("too many words");
  std::vector<Word> out;
  out.reserve(count * P());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Sym> digits(cap, 0);
    std::uint64_t v = idx;
    for (int t = 0; t < cap; ++t) {
      digits[t] = static_cast<Sym>(v % C_.q);
      v /= C_.q;
    }
    const Poly m(C_.q, digits);
    for (int i = 1; i <= P(); ++i) out.push_back(encode(m, i));
  }
  return out;
}

RcPrimerCode::RcPrimerCode(CyclicCode C, RcGenSet S) : sub_(std::move(C), std::move(S)) {
  if (sub_.set().flavor != RcFlavor::rc)
    throw std::invalid_argument("primer construction takes an rc-flavor set");
  const auto check = validate_rc_generating(sub_.code(), sub_.set());
  if (!check.ok)
    throw std::invalid_argument("set is not rc-generating: violation at " +
                                check.violation->condition);
}

DemoInstance example1_instance() {
  DemoInstance d;
  d.g = Poly(4, {1, 1, 3, 1, 3, 1, 1});
  d.hstar = Poly(4, {1, 2, 2, 2, 1});
  d.ps = {
      Poly(4, {2}),          Poly(4, {3}),          Poly(4, {1}),
      Poly(4, {2, 2}),       Poly(4, {3, 3}),       Poly(4, {1, 1}),
      Poly(4, {3, 2, 2}),    Poly(4, {1, 0, 3, 2}), Poly(4, {0, 1, 3, 2}),
      Poly(4, {3, 1, 3, 2}), Poly(4, {1, 1, 3, 2}), Poly(4, {0, 0, 1, 2}),
      Poly(4, {1, 1, 1, 2}), Poly(4, {2, 2, 2, 3}), Poly(4, {3, 3, 2, 3}),
      Poly(4, {1, 2, 1, 3}), Poly(4, {3, 3, 2, 1}),
  };
  return d;
}

}  // namespace dnacodes
