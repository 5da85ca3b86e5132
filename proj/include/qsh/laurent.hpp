#pragma once

// Sparse Laurent polynomials in v and the puncture symbols s(p,i).
//
// A monomial is a fixed-width exponent vector.  Slot 0 is always v (with
// v^2 = q); slots 1.. hold puncture symbols in the order fixed by
// SymbolTable (see scalar_io.hpp).  Coefficients are arbitrary precision
// integers.  Terms are stored sorted by strictly decreasing monomial in
// lexicographic slot order, so two polynomials are equal iff their term
// vectors are equal.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qsh {

using Integer = mpz_class;

inline constexpr std::size_t kSlots = 16;

class NonInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Monomial {
  std::array<int32_t, kSlots> e{};

  static Monomial one() { return {}; }
  static Monomial var(std::size_t slot, int32_t power = 1) {
    Monomial m;
    m.e.at(slot) = power;
    return m;
  }

  bool is_one() const {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }
  int32_t operator[](std::size_t i) const { return e[i]; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kSlots; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Monomial inverse() const {
    Monomial r;
    for (std::size_t i = 0; i < kSlots; ++i) r.e[i] = -e[i];
    return r;
  }
  Monomial pow(int32_t k) const {
    Monomial r;
    for (std::size_t i = 0; i < kSlots; ++i) r.e[i] = e[i] * k;
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e <=> b.e; }
};

class LaurentPoly {
 public:
  using Term = std::pair<Monomial, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Monomial& m, const Integer& c = 1);
  static LaurentPoly v(int32_t power = 1) { return monomial(Monomial::var(0, power)); }
  static LaurentPoly var(std::size_t slot, int32_t power = 1) {
    return monomial(Monomial::var(slot, power));
  }
  // Builds from arbitrary (possibly repeated, possibly zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_unit() const;  // +-monomial
  bool is_constant() const;
  bool is_one() const;
  // True when only slot 0 (v) carries nonzero exponents.
  bool is_univariate() const;

  const Term& leading() const { return terms_.front(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly times(const Monomial& m, const Integer& c = 1) const;
  LaurentPoly pow(int k) const;  // negative k only for units

  // Inverse of a unit (+-monomial); throws NonInvertibleError otherwise.
  LaurentPoly inverse() const;

  // Componentwise minimum/maximum exponent over the support (zero vector for 0).
  Monomial min_exponents() const;
  Monomial max_exponents() const;
  int32_t max_degree(std::size_t slot) const;
  int32_t min_degree(std::size_t slot) const;

  // gcd of the integer coefficients (0 for the zero polynomial).
  Integer content() const;
  LaurentPoly divide_content(const Integer& c) const;

  // Replace v by v^k (k may be negative).  Puncture slots are untouched.
  LaurentPoly substitute_v(int32_t k) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coeffs
};

// Exact quotient a/b if b divides a in Z[v^+-1, s^+-1], otherwise nullopt.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Greatest common divisor, normalized: shifted so all minimum exponents are
// zero and the leading coefficient is positive.  gcd(0,0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qsh
