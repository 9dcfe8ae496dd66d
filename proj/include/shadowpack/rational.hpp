#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace shadowpack {

/// Arbitrary-precision rational, always kept in canonical form
/// (gcd(|num|, den) = 1, den > 0).  All arithmetic is exact.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(int n) : v_(n) {}
  Rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}

  /// Parses "p/q" or "p"; also accepts plain decimals like "1.25" and "-0.8".
  static Rat parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat square() const { return *this * *this; }
  Rat cube() const { return *this * *this * *this; }

  double to_double() const { return v_.get_d(); }

  /// Canonical "p/q" form ("3/1" for integers) used in all JSON I/O.
  std::string str() const;
  /// Shorter form without "/1" on integers, for logs and CSV.
  std::string pretty() const;

  friend Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
  friend Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat operator*(long a, const Rat& b) { return Rat(a) * b; }
inline Rat operator+(long a, const Rat& b) { return Rat(a) + b; }
inline Rat operator-(long a, const Rat& b) { return Rat(a) - b; }

/// floor(x) as an integer.
mpz_class rat_floor(const Rat& x);
mpz_class rat_ceil(const Rat& x);

}  // namespace shadowpack
