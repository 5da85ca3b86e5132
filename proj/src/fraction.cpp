#include "qsh/fraction.hpp"

#include <stdexcept>

namespace qsh {

ScalarFraction::ScalarFraction(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("fraction with zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly(1L);
    return;
  }
  if (den.is_monomial()) {
    // num / (c m) = (num m^-1) / c, then strip the integer content.
    const auto& [m, c] = den.leading();
    num = num.times(m.inverse());
    Integer g;
    Integer n_content = num.content();
    mpz_gcd(g.get_mpz_t(), n_content.get_mpz_t(), c.get_mpz_t());
    Integer d = c / g;
    num = num.divide_content(g);
    if (d < 0) {
      d = -d;
      num = -num;
    }
    num_ = std::move(num);
    den_ = LaurentPoly(d);
    return;
  }
  LaurentPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = *divide_exact(num, g);
    den = *divide_exact(den, g);
  }
  // Move the monomial part of den into num.
  Monomial shift = den.min_exponents();
  if (!shift.is_one()) {
    den = den.times(shift.inverse());
    num = num.times(shift.inverse());
  }
  if (den.leading().second < 0) {
    den = -den;
    num = -num;
  }
  if (den.is_constant() && den.leading().second != 1) {
    // Only possible when den was reduced to an integer c > 1.
    Integer c = den.leading().second, g2;
    Integer n_content = num.content();
    mpz_gcd(g2.get_mpz_t(), n_content.get_mpz_t(), c.get_mpz_t());
    num = num.divide_content(g2);
    den = LaurentPoly(Integer(c / g2));
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

ScalarFraction fraction_reduce(const LaurentPoly& num, const LaurentPoly& den) {
  return ScalarFraction(num, den);
}

ScalarFraction ScalarFraction::operator-() const { return {-num_, den_, Canonical{}}; }

ScalarFraction& ScalarFraction::operator+=(const ScalarFraction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = ScalarFraction(num_ + o.num_, den_);
    return *this;
  }
  *this = ScalarFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

ScalarFraction& ScalarFraction::operator-=(const ScalarFraction& o) { return *this += -o; }

ScalarFraction& ScalarFraction::operator*=(const ScalarFraction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = ScalarFraction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  *this = ScalarFraction(num_ * o.num_, den_ * o.den_);
  return *this;
}

ScalarFraction& ScalarFraction::operator/=(const ScalarFraction& o) { return *this *= o.inverse(); }

ScalarFraction ScalarFraction::inverse() const {
  if (is_zero()) throw NonInvertibleError("inverse of zero");
  return ScalarFraction(den_, num_);
}

ScalarFraction ScalarFraction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  ScalarFraction result(1L), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

}  // namespace qsh
