#include "shadowpack/interval.hpp"

#include <algorithm>
#include <ostream>

namespace shadowpack {

Interval Interval::operator*(const Interval& o) const {
  Rat a = lo_ * o.lo_;
  Rat b = lo_ * o.hi_;
  Rat c = hi_ * o.lo_;
  Rat d = hi_ * o.hi_;
  return Interval(min(min(a, b), min(c, d)), max(max(a, b), max(c, d)));
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero()) throw std::domain_error("interval division by enclosure of zero");
  Rat a = lo_ / o.lo_;
  Rat b = lo_ / o.hi_;
  Rat c = hi_ / o.lo_;
  Rat d = hi_ / o.hi_;
  return Interval(min(min(a, b), min(c, d)), max(max(a, b), max(c, d)));
}

Interval Interval::square() const {
  Rat a = lo_.square(), b = hi_.square();
  if (contains_zero()) return Interval(Rat(0), max(a, b));
  return Interval(min(a, b), max(a, b));
}

Interval Interval::pow(unsigned n) const {
  if (n == 0) return Interval(Rat(1));
  Interval acc = *this;
  for (unsigned i = 1; i < n; ++i) acc = acc * *this;
  if (n % 2 == 0 && acc.lo_.sign() < 0) acc.lo_ = Rat(0);
  return acc;
}

namespace {

Rat dyadic_floor(const Rat& x, unsigned bits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Rat scaled = x * Rat(scale);
  return Rat(rat_floor(scaled)) / Rat(scale);
}

Rat dyadic_ceil(const Rat& x, unsigned bits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Rat scaled = x * Rat(scale);
  return Rat(rat_ceil(scaled)) / Rat(scale);
}

}  // namespace

Interval Interval::coarsen(unsigned bits) const {
  return Interval(dyadic_floor(lo_, bits), dyadic_ceil(hi_, bits));
}

Interval sqrt_enclosure(const Rat& x, unsigned bits) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative rational");
  // floor(sqrt(x * 4^bits)) = s gives s/2^bits <= sqrt(x) <= (s+1)/2^bits.
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, bits);
  mpz_class scaled_num = x.num() * four_pow;
  mpz_class t;
  mpz_fdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), x.den().get_mpz_t());
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, bits);
  Rat lo = Rat(s) / Rat(two_pow);
  Rat hi = Rat(mpz_class(s + 1)) / Rat(two_pow);
  // Tighten hi when the root is exact.
  if (lo * lo == x) hi = lo;
  return Interval(lo, hi);
}

Interval sqrt_enclosure(const Interval& x, unsigned bits) {
  Rat lo = x.lo().sign() < 0 ? Rat(0) : x.lo();
  return Interval(sqrt_enclosure(lo, bits).lo(), sqrt_enclosure(x.hi(), bits).hi());
}

namespace {

// Decimal expansion of x truncated toward -inf (floor mode) or +inf.
std::string decimal_string(const Rat& x, int digits, bool round_up) {
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
  Rat scaled = x * Rat(pow10);
  mpz_class units = round_up ? rat_ceil(scaled) : rat_floor(scaled);
  bool neg = units < 0;
  mpz_class mag = neg ? mpz_class(-units) : units;
  std::string s = mag.get_str();
  if ((int)s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  s.insert(s.size() - digits, ".");
  // trim trailing zeros but keep at least one fractional digit
  size_t last = s.find_last_not_of('0');
  if (s[last] == '.') ++last;
  s = s.substr(0, last + 1);
  return neg ? "-" + s : s;
}

}  // namespace

std::string Interval::lo_string(int digits) const { return decimal_string(lo_, digits, false); }
std::string Interval::hi_string(int digits) const { return decimal_string(hi_, digits, true); }

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << "[" << iv.lo_string(12) << ", " << iv.hi_string(12) << "]";
}

}  // namespace shadowpack
