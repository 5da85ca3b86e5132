#pragma once

// Quotients of Laurent polynomials, kept in a canonical reduced form:
//   * gcd(num, den) = 1 (full multivariate gcd),
//   * den has all minimum exponents equal to zero (monomial units live in num),
//   * den's leading coefficient is positive,
//   * den = 1 whenever the value is a Laurent polynomial.
// With that normal form structural equality is value equality.

#include <string>

#include "qsh/laurent.hpp"

namespace qsh {

class ScalarFraction {
 public:
  ScalarFraction() : den_(1L) {}
  ScalarFraction(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  ScalarFraction(LaurentPoly p) : num_(std::move(p)), den_(1L) {}  // NOLINT
  ScalarFraction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  ScalarFraction operator-() const;
  ScalarFraction& operator+=(const ScalarFraction& o);
  ScalarFraction& operator-=(const ScalarFraction& o);
  ScalarFraction& operator*=(const ScalarFraction& o);
  ScalarFraction& operator/=(const ScalarFraction& o);
  friend ScalarFraction operator+(ScalarFraction a, const ScalarFraction& b) { return a += b; }
  friend ScalarFraction operator-(ScalarFraction a, const ScalarFraction& b) { return a -= b; }
  friend ScalarFraction operator*(ScalarFraction a, const ScalarFraction& b) { return a *= b; }
  friend ScalarFraction operator/(ScalarFraction a, const ScalarFraction& b) { return a /= b; }

  // Throws NonInvertibleError on zero.
  ScalarFraction inverse() const;
  ScalarFraction pow(int k) const;

  friend bool operator==(const ScalarFraction&, const ScalarFraction&) = default;

 private:
  struct Canonical {};
  ScalarFraction(LaurentPoly num, LaurentPoly den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}
  LaurentPoly num_;
  LaurentPoly den_;
};

// Canonical reduction of num/den.  Throws std::domain_error when den = 0.
ScalarFraction fraction_reduce(const LaurentPoly& num, const LaurentPoly& den);

using Scalar = ScalarFraction;

}  // namespace qsh
