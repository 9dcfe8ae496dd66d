#include "shadowpack/rational.hpp"

#include <ostream>

namespace shadowpack {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(q);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0) throw std::invalid_argument("bad decimal literal: " + s);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(q);
  }
  return Rat(mpq_class(mpz_class(s, 10)));
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::pretty() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.pretty();
}

mpz_class rat_floor(const Rat& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

mpz_class rat_ceil(const Rat& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

}  // namespace shadowpack
