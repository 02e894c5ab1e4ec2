#include "dnacodes/word.hpp"

#include <algorithm>

namespace dnacodes {

Word::Word(int q_, std::vector<Sym> syms) : q(q_), s(std::move(syms)) {
  require_q(q);
  for (Sym x : s) require_sym(q, x);
}

Word shift(const Word& a, int i) {
  const int n = a.size();
  if (i < 0 || i >= n) throw std::out_of_range("shift count outside [0,n)");
  Word r(a);
  for (int j = 0; j < n; ++j) r.s[(j + i) % n] = a.s[j];
  return r;
}

Word reverse(const Word& a) {
  Word r(a);
  std::reverse(r.s.begin(), r.s.end());
  return r;
}

Word complement(const Word& a) {
  Word r(a);
  for (Sym& x : r.s) x ^= 1;
  return r;
}

Word reverse_complement(const Word& a) { return complement(reverse(a)); }

Word flip_prefix(const Word& a, int len) {
  if (len < 0 || len > a.size()) throw std::out_of_range("prefix length out of range");
  const Sym delta = (a.q == 2) ? 1 : 2;  // 1 for GF(2), w for GF(4)
  Word r(a);
  for (int i = 0; i < len; ++i) r.s[i] ^= delta;
  return r;
}

Word subword(const Word& a, int i, int j) {
  const int n = a.size();
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("subword index out of range");
  Word r(a.q, {});
  if (i <= j) {
    for (int t = i; t <= j; ++t) r.s.push_back(a.s[t - 1]);
  } else {
    for (int t = j; t <= i; ++t) r.s.push_back(a.s[t - 1]);
    std::reverse(r.s.begin(), r.s.end());
  }
  return r;
}

Word operator+(const Word& a, const Word& b) {
  if (a.q != b.q) throw std::invalid_argument("field mismatch");
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  Word r(a);
  for (int i = 0; i < a.size(); ++i) r.s[i] ^= b.s[i];
  return r;
}

int hamming(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  int d = 0;
  for (int i = 0; i < a.size(); ++i) d += a.s[i] != b.s[i];
  return d;
}

int wt(const Word& a) {
  int w = 0;
  for (Sym x : a.s) w += x != 0;
  return w;
}

int wt1(const Word& a) {
  if (a.size() % 2 == 0) throw std::invalid_argument("weight split requires odd length");
  const int half = (a.size() + 1) / 2;
  int w = 0;
  for (int i = 0; i < half; ++i) w += a.s[i] != 0;
  return w;
}

int wt2(const Word& a) { return wt(a) - wt1(a); }

int gc_count(const Word& a) {
  int g = 0;
  for (Sym x : a.s) g += (x & 2) != 0;
  return g;
}

bool is_constant(const Word& a) {
  return std::all_of(a.s.begin(), a.s.end(), [&](Sym x) { return x == a.s[0]; });
}

int max_run(const Word& a) {
  if (a.size() == 0) return 0;
  int best = 1, cur = 1;
  for (int i = 1; i < a.size(); ++i) {
    cur = (a.s[i] == a.s[i - 1]) ? cur + 1 : 1;
    best = std::max(best, cur);
  }
  return best;
}

Word word_from_poly(const Poly& p, int n) {
  if (p.degree() >= n) throw std::invalid_argument("polynomial degree exceeds word length");
  Word w = Word::zero(p.q, n);
  for (int i = 0; i <= p.degree(); ++i) w.s[i] = p.c[i];
  return w;
}

Poly poly_from_word(const Word& w) { return Poly(w.q, w.s); }

std::string to_dna(const Word& w) {
  if (w.q != 4) throw std::invalid_argument("DNA output requires GF(4)");
  std::string s;
  s.reserve(w.size());
  for (Sym x : w.s) s.push_back(sym_to_base(x));
  return s;
}

Word word_from_dna(const std::string& s) {
  std::vector<Sym> v;
  v.reserve(s.size());
  for (char c : s) v.push_back(base_to_sym(c));
  return Word(4, std::move(v));
}

std::string to_digits(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Sym x : w.s) s.push_back(static_cast<char>('0' + x));
  return s;
}

Word word_from_digits(int q, const std::string& s) {
  std::vector<Sym> v;
  v.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '3') throw std::invalid_argument("digit outside symbol range");
    v.push_back(static_cast<Sym>(c - '0'));
  }
  return Word(q, std::move(v));
}

}  // namespace dnacodes
