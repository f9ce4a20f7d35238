#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <utility>

#include "horo/error.hpp"

namespace horo {

using BigInt = boost::multiprecision::cpp_int;

// Point of Q union {infinity}: reduced fraction p/q with q >= 0 and
// gcd(p,q) = 1; infinity is canonically (1,0). Farey denominators grow
// exponentially with generation, hence arbitrary precision throughout.
class Rational {
 public:
  Rational() : p_(0), q_(1) {}
  Rational(BigInt p, BigInt q);
  Rational(long long p, long long q) : Rational(BigInt(p), BigInt(q)) {}

  static Rational infinity() { return Rational(1, 0); }
  static Rational from_integer(long long n) { return Rational(n, 1); }

  const BigInt& num() const { return p_; }
  const BigInt& den() const { return q_; }
  bool is_infinity() const { return q_ == 0; }

  // Mediant (p+r)/(q+s) of the raw representatives; the Stern-Brocot child.
  static Rational mediant(const Rational& a, const Rational& b) {
    return Rational(a.p_ + b.p_, a.q_ + b.q_);
  }

  // |ps - qr|, the Farey pairing; value 1 means tessellation neighbors.
  static BigInt farey_pairing(const Rational& a, const Rational& b);
  static bool farey_neighbors(const Rational& a, const Rational& b) {
    return farey_pairing(a, b) == 1;
  }

  double to_double() const;

  bool operator==(const Rational& o) const { return p_ == o.p_ && q_ == o.q_; }
  // Total order on Q union {infinity} with infinity greatest.
  std::strong_ordering operator<=>(const Rational& o) const;

  std::string str() const;                     // "p/q", infinity as "1/0"
  static Rational parse(const std::string&);   // inverse of str(); accepts "-3" style too

 private:
  BigInt p_, q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace horo
