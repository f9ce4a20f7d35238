#include "horo/rational.hpp"

#include <ostream>

namespace horo {

namespace {
BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

Rational::Rational(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) fail(errc::parse_error, "0/0 is not a point of Q u {inf}");
  if (q_ < 0) {
    p_ = -p_;
    q_ = -q_;
  }
  if (q_ == 0) {
    p_ = 1;  // all p/0 are the single point at infinity
  } else {
    BigInt g = gcd(p_, q_);
    if (g > 1) {
      p_ /= g;
      q_ /= g;
    }
  }
}

BigInt Rational::farey_pairing(const Rational& a, const Rational& b) {
  BigInt d = a.p_ * b.q_ - a.q_ * b.p_;
  return d < 0 ? BigInt(-d) : d;
}

double Rational::to_double() const {
  if (is_infinity()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(p_) / static_cast<double>(q_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  if (is_infinity() && o.is_infinity()) return std::strong_ordering::equal;
  if (is_infinity()) return std::strong_ordering::greater;
  if (o.is_infinity()) return std::strong_ordering::less;
  BigInt lhs = p_ * o.q_, rhs = o.p_ * q_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const { return p_.str() + "/" + q_.str(); }

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad rational '" + s + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace horo
