#include "horo/psl2.hpp"

#include <algorithm>

namespace horo {

Gen gen_inverse(Gen g) {
  switch (g) {
    case Gen::S: return Gen::S;
    case Gen::T: return Gen::Tinv;
    case Gen::U: return Gen::Uinv;
    case Gen::Tinv: return Gen::T;
    case Gen::Uinv: return Gen::U;
  }
  fail(errc::parse_error, "bad generator");
}

char gen_char(Gen g) {
  switch (g) {
    case Gen::S: return 'S';
    case Gen::T: return 'T';
    case Gen::U: return 'U';
    case Gen::Tinv: return 't';
    case Gen::Uinv: return 'u';
  }
  fail(errc::parse_error, "bad generator");
}

Gen gen_of_char(char c) {
  switch (c) {
    case 'S': return Gen::S;
    case 'T': return Gen::T;
    case 'U': return Gen::U;
    case 't': return Gen::Tinv;
    case 'u': return Gen::Uinv;
  }
  fail(errc::parse_error, std::string("bad generator letter '") + c + "'");
}

PSL2Mat::PSL2Mat(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) fail(errc::not_unimodular, "determinant must be 1");
  canonicalize();
}

void PSL2Mat::canonicalize() {
  const BigInt* entries[4] = {&a_, &b_, &c_, &d_};
  for (const BigInt* e : entries) {
    if (*e == 0) continue;
    if (*e < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
    return;
  }
}

PSL2Mat PSL2Mat::generator(Gen g) {
  switch (g) {
    case Gen::S: return S();
    case Gen::T: return T();
    case Gen::U: return U();
    case Gen::Tinv: return T().inverse();
    case Gen::Uinv: return U().inverse();
  }
  fail(errc::parse_error, "bad generator");
}

PSL2Mat PSL2Mat::operator*(const PSL2Mat& o) const {
  return PSL2Mat(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                 c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

Rational PSL2Mat::apply(const Rational& x) const {
  return Rational(a_ * x.num() + b_ * x.den(), c_ * x.num() + d_ * x.den());
}

std::string PSL2Mat::str() const {
  return "[" + a_.str() + "," + b_.str() + ";" + c_.str() + "," + d_.str() + "]";
}

PSL2Word PSL2Word::parse(const std::string& s) {
  std::vector<Gen> out;
  for (char c : s) {
    if (c == 'I' || c == ' ') continue;  // "I" spells the empty word
    out.push_back(gen_of_char(c));
  }
  return PSL2Word(std::move(out));
}

bool PSL2Word::is_normal_form() const {
  std::size_t i = 0;
  if (i < letters_.size() && letters_[i] == Gen::S) ++i;
  if (i == letters_.size()) return true;
  bool positive = (letters_[i] == Gen::T || letters_[i] == Gen::U);
  for (; i < letters_.size(); ++i) {
    Gen g = letters_[i];
    if (g == Gen::S) return false;
    bool pos = (g == Gen::T || g == Gen::U);
    if (pos != positive) return false;
  }
  return true;
}

PSL2Word PSL2Word::concat(const PSL2Word& o) const {
  std::vector<Gen> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return PSL2Word(std::move(out));
}

std::string PSL2Word::str() const {
  if (letters_.empty()) return "I";
  std::string s;
  for (Gen g : letters_) s += gen_char(g);
  return s;
}

PSL2Mat mat_of_word(const PSL2Word& w) {
  PSL2Mat m;
  for (Gen g : w.letters()) m = m * PSL2Mat::generator(g);
  return m;
}

namespace {

// Signed representative with all entries >= 0, if one exists.
bool nonneg_rep(const PSL2Mat& m, BigInt out[4]) {
  BigInt e[4] = {m.a(), m.b(), m.c(), m.d()};
  bool any_pos = false, any_neg = false;
  for (auto& x : e) {
    if (x > 0) any_pos = true;
    if (x < 0) any_neg = true;
  }
  if (any_pos && any_neg) return false;
  for (int i = 0; i < 4; ++i) out[i] = any_neg ? BigInt(-e[i]) : e[i];
  return true;
}

// Peel a matrix of the free monoid on {T,U} (nonnegative, det 1) into letters.
// Greedy Stern-Brocot descent: exactly one of T^-1 A, U^-1 A stays nonnegative.
std::vector<Gen> peel_positive(BigInt a, BigInt b, BigInt c, BigInt d) {
  std::vector<Gen> out;
  while (!(a == 1 && b == 0 && c == 0 && d == 1)) {
    if (a >= c && b >= d) {  // A = T * A'
      out.push_back(Gen::T);
      a -= c;
      b -= d;
    } else if (c >= a && d >= b) {  // A = U * A'
      out.push_back(Gen::U);
      c -= a;
      d -= b;
    } else {
      fail(errc::not_unimodular, "matrix not in the positive monoid");
    }
  }
  return out;
}

}  // namespace

PSL2Word word_of_mat(const PSL2Mat& m) {
  const PSL2Mat S = PSL2Mat::S();
  BigInt e[4];

  if (m.is_identity()) return PSL2Word();
  if (m == S) return PSL2Word({Gen::S});

  // w in {U,T}+
  if (nonneg_rep(m, e)) return PSL2Word(peel_positive(e[0], e[1], e[2], e[3]));

  // w in {U^-1,T^-1}+  <=>  S w S in {T,U}+ with T <-> U^-1, U <-> T^-1.
  if (nonneg_rep(S * m * S, e)) {
    std::vector<Gen> pos = peel_positive(e[0], e[1], e[2], e[3]);
    std::vector<Gen> out;
    out.reserve(pos.size());
    for (Gen g : pos) out.push_back(g == Gen::T ? Gen::Uinv : Gen::Tinv);
    return PSL2Word(std::move(out));
  }

  // Remaining classes carry a leading S.
  PSL2Mat rest = S * m;  // m = S * rest, rest in one of the semigroup classes
  if (nonneg_rep(rest, e)) {
    std::vector<Gen> out{Gen::S};
    auto body = peel_positive(e[0], e[1], e[2], e[3]);
    out.insert(out.end(), body.begin(), body.end());
    return PSL2Word(std::move(out));
  }
  if (nonneg_rep(S * rest * S, e)) {
    std::vector<Gen> out{Gen::S};
    for (Gen g : peel_positive(e[0], e[1], e[2], e[3]))
      out.push_back(g == Gen::T ? Gen::Uinv : Gen::Tinv);
    return PSL2Word(std::move(out));
  }
  fail(errc::not_unimodular, "matrix escaped the normal-form classification");
}

}  // namespace horo
