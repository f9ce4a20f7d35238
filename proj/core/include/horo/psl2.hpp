#pragma once

#include <string>
#include <vector>

#include "horo/rational.hpp"

namespace horo {

// Generator letters of the modular group. Lowercase string forms t, u
// denote the inverses; S is an involution so it has no inverse letter.
enum class Gen { S, T, U, Tinv, Uinv };

Gen gen_inverse(Gen g);
char gen_char(Gen g);
Gen gen_of_char(char c);

// Element of PSL2(Z) as an integer matrix with det 1, normalized so the
// first nonzero entry of (a,b,c,d) is positive.
class PSL2Mat {
 public:
  PSL2Mat() : a_(1), b_(0), c_(0), d_(1) {}
  PSL2Mat(BigInt a, BigInt b, BigInt c, BigInt d);

  static PSL2Mat S() { return PSL2Mat(0, -1, 1, 0); }
  static PSL2Mat T() { return PSL2Mat(1, 1, 0, 1); }
  static PSL2Mat U() { return PSL2Mat(1, 0, 1, 1); }
  static PSL2Mat generator(Gen g);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  PSL2Mat operator*(const PSL2Mat& o) const;
  PSL2Mat inverse() const { return PSL2Mat(d_, -b_, -c_, a_); }
  bool operator==(const PSL2Mat& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }
  auto operator<=>(const PSL2Mat& o) const = default;

  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  // Fractional linear action on Q u {infinity}, exact.
  Rational apply(const Rational& x) const;

  std::string str() const;

 private:
  PSL2Mat(BigInt a, BigInt b, BigInt c, BigInt d, int /*raw*/)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  void canonicalize();

  BigInt a_, b_, c_, d_;
};

// Word in the letters {S, T, U, T^-1, U^-1}. Arbitrary words may be formed
// and multiplied out; word_of_mat returns the unique normal form:
// empty | w | S w, with w a nonempty word in the free semigroup on {U,T}
// or on {U^-1,T^-1}.
class PSL2Word {
 public:
  PSL2Word() = default;
  explicit PSL2Word(std::vector<Gen> letters) : letters_(std::move(letters)) {}

  static PSL2Word parse(const std::string& s);  // over {S,T,U,t,u}

  const std::vector<Gen>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  bool is_normal_form() const;
  PSL2Word concat(const PSL2Word& o) const;

  std::string str() const;  // empty word prints as "I"
  bool operator==(const PSL2Word& o) const = default;

 private:
  std::vector<Gen> letters_;
};

PSL2Mat mat_of_word(const PSL2Word& w);
PSL2Word word_of_mat(const PSL2Mat& m);  // unique normal form

}  // namespace horo
