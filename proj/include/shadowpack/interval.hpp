#pragma once

#include <string>

#include "shadowpack/rational.hpp"

namespace shadowpack {

enum class Cmp3 { Less, Greater, Undecided };

/// Certified enclosure [lo, hi] of a real number.  Endpoints are exact
/// rationals, so every operation below returns an enclosure of the true
/// result with no rounding step to reason about.  Width is controlled
/// explicitly via coarsen() / by construction (sqrt takes a precision).
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(Rat point) : lo_(point), hi_(point) {}
  Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
  }

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat mid() const { return (lo_ + hi_) / Rat(2); }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  Interval operator-() const { return Interval(-hi_, -lo_); }
  Interval operator+(const Interval& o) const { return Interval(lo_ + o.lo_, hi_ + o.hi_); }
  Interval operator-(const Interval& o) const { return Interval(lo_ - o.hi_, hi_ - o.lo_); }
  Interval operator*(const Interval& o) const;
  /// Throws if the divisor encloses zero.
  Interval operator/(const Interval& o) const;

  Interval& operator+=(const Interval& o) { *this = *this + o; return *this; }
  Interval& operator-=(const Interval& o) { *this = *this - o; return *this; }
  Interval& operator*=(const Interval& o) { *this = *this * o; return *this; }

  Interval square() const;
  Interval cube() const { return *this * this->square(); }
  Interval pow(unsigned n) const;

  /// Three-valued comparison against an exact rational.
  Cmp3 compare(const Rat& x) const {
    if (hi_ < x) return Cmp3::Less;
    if (lo_ > x) return Cmp3::Greater;
    return Cmp3::Undecided;
  }
  /// Three-valued comparison against another enclosure.
  Cmp3 compare(const Interval& o) const {
    if (hi_ < o.lo_) return Cmp3::Less;
    if (lo_ > o.hi_) return Cmp3::Greater;
    return Cmp3::Undecided;
  }

  /// Widens endpoints outward onto the dyadic grid 2^-bits, bounding
  /// the size of endpoint representations after long computations.
  Interval coarsen(unsigned bits) const;

  /// Decimal string of an endpoint, rounded outward, for JSON output.
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;

  friend Interval min(const Interval& a, const Interval& b) {
    return Interval(min(a.lo_, b.lo_), min(a.hi_, b.hi_));
  }
  friend Interval max(const Interval& a, const Interval& b) {
    return Interval(max(a.lo_, b.lo_), max(a.hi_, b.hi_));
  }
  friend Interval hull(const Interval& a, const Interval& b) {
    return Interval(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
  }

 private:
  Rat lo_, hi_;
};

/// Enclosure of sqrt(x) with width <= 2^-bits; pre: x >= 0.
Interval sqrt_enclosure(const Rat& x, unsigned bits);
Interval sqrt_enclosure(const Interval& x, unsigned bits);

std::ostream& operator<<(std::ostream& os, const Interval& iv);

}  // namespace shadowpack
