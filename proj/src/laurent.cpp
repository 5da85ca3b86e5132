#include "qsh/laurent.hpp"

#include <algorithm>
#include <map>

namespace qsh {

namespace {

bool term_greater(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
  return a.first > b.first;
}

// Merge two sorted term lists, b scaled by sign.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, bool negate_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, negate_b ? Integer(-b[j].second) : b[j].second);
      ++j;
    } else {
      Integer c = negate_b ? Integer(a[i].second - b[j].second) : Integer(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(Monomial::one(), Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(Monomial::one(), c);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

bool LaurentPoly::is_univariate() const {
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 1; i < kSlots; ++i)
      if (m.e[i] != 0) return false;
  return true;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times(a.terms_[0].first, a.terms_[0].second);
  if (b.size() == 1) return a.times(b.terms_[0].first, b.terms_[0].second);
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly LaurentPoly::times(const Monomial& m, const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the lexicographic order.
  for (const auto& [mt, ct] : terms_) r.terms_.emplace_back(mt * m, ct * c);
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  LaurentPoly result(1L), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_unit()) throw NonInvertibleError("polynomial is not a unit of the Laurent ring");
  return monomial(terms_[0].first.inverse(), terms_[0].second);
}

Monomial LaurentPoly::min_exponents() const {
  Monomial m;
  if (terms_.empty()) return m;
  m = terms_[0].first;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kSlots; ++i) m.e[i] = std::min(m.e[i], t.first.e[i]);
  return m;
}

Monomial LaurentPoly::max_exponents() const {
  Monomial m;
  if (terms_.empty()) return m;
  m = terms_[0].first;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kSlots; ++i) m.e[i] = std::max(m.e[i], t.first.e[i]);
  return m;
}

int32_t LaurentPoly::max_degree(std::size_t slot) const { return max_exponents().e[slot]; }
int32_t LaurentPoly::min_degree(std::size_t slot) const { return min_exponents().e[slot]; }

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::divide_content(const Integer& c) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
  return r;
}

LaurentPoly LaurentPoly::substitute_v(int32_t k) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n.e[0] *= k;
    out.emplace_back(n, c);
  }
  return from_terms(std::move(out));
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  const auto& [lmb, lcb] = b.leading();
  if (b.is_monomial()) {
    for (const auto& t : a.terms())
      if (!mpz_divisible_p(t.second.get_mpz_t(), lcb.get_mpz_t())) return std::nullopt;
    LaurentPoly q = a.times(lmb.inverse());
    return q.divide_content(lcb);
  }
  // Quotient monomials are confined to the box [min a - min b, max a - max b].
  Monomial lo = a.min_exponents(), hi = a.max_exponents();
  Monomial blo = b.min_exponents(), bhi = b.max_exponents();
  for (std::size_t i = 0; i < kSlots; ++i) {
    lo.e[i] -= blo.e[i];
    hi.e[i] -= bhi.e[i];
    if (lo.e[i] > hi.e[i]) return std::nullopt;
  }
  std::vector<LaurentPoly::Term> quotient;
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const auto& [lmr, lcr] = r.leading();
    if (!mpz_divisible_p(lcr.get_mpz_t(), lcb.get_mpz_t())) return std::nullopt;
    Monomial m = lmr * lmb.inverse();
    for (std::size_t i = 0; i < kSlots; ++i)
      if (m.e[i] < lo.e[i] || m.e[i] > hi.e[i]) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), lcr.get_mpz_t(), lcb.get_mpz_t());
    r -= b.times(m, c);
    quotient.emplace_back(m, std::move(c));
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

namespace {

// --- recursive gcd on genuine polynomials (all exponents >= 0) ---

LaurentPoly shift_to_polynomial(const LaurentPoly& p) {
  return p.times(p.min_exponents().inverse());
}

LaurentPoly positive_leading(LaurentPoly p) {
  if (!p.is_zero() && p.leading().second < 0) p = -p;
  return p;
}

std::map<int32_t, LaurentPoly> coefficients_in(const LaurentPoly& p, std::size_t slot) {
  std::map<int32_t, std::vector<LaurentPoly::Term>> buckets;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.e[slot] = 0;
    buckets[m.e[slot]].emplace_back(rest, c);
  }
  std::map<int32_t, LaurentPoly> out;
  for (auto& [k, ts] : buckets) out.emplace(k, LaurentPoly::from_terms(std::move(ts)));
  return out;
}

LaurentPoly leading_coefficient_in(const LaurentPoly& p, std::size_t slot) {
  return coefficients_in(p, slot).rbegin()->second;
}

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *q;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, std::size_t slot) {
  LaurentPoly g;
  for (const auto& [k, c] : coefficients_in(p, slot)) {
    g = g.is_zero() ? positive_leading(c) : poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

LaurentPoly primitive_in(const LaurentPoly& p, std::size_t slot) {
  return positive_leading(exact(p, content_in(p, slot)));
}

LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t slot) {
  const int32_t db = b.max_degree(slot);
  const LaurentPoly lb = leading_coefficient_in(b, slot);
  while (!a.is_zero()) {
    const int32_t da = a.max_degree(slot);
    if (da < db) break;
    LaurentPoly la = leading_coefficient_in(a, slot);
    a = lb * a - (la * b).times(Monomial::var(slot, da - db));
  }
  return a;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return positive_leading(b);
  if (b.is_zero()) return positive_leading(a);
  const Monomial ea = a.max_exponents(), eb = b.max_exponents();
  std::size_t slot = kSlots;
  for (std::size_t i = 0; i < kSlots; ++i)
    if (ea.e[i] > 0 || eb.e[i] > 0) {
      slot = i;
      break;
    }
  if (slot == kSlots) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.leading().second.get_mpz_t(), b.leading().second.get_mpz_t());
    return LaurentPoly(g);
  }
  if (ea.e[slot] == 0) return poly_gcd(a, content_in(b, slot));
  if (eb.e[slot] == 0) return poly_gcd(content_in(a, slot), b);

  LaurentPoly ca = content_in(a, slot), cb = content_in(b, slot);
  LaurentPoly g = poly_gcd(ca, cb);
  LaurentPoly pa = exact(a, ca), pb = exact(b, cb);
  if (pa.max_degree(slot) < pb.max_degree(slot)) std::swap(pa, pb);
  while (true) {
    LaurentPoly r = pseudo_remainder(pa, pb, slot);
    if (r.is_zero()) break;
    if (r.max_degree(slot) == 0) {
      pb = LaurentPoly(1L);
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, slot);
  }
  return positive_leading(g * primitive_in(pb, slot));
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return positive_leading(shift_to_polynomial(b));
  if (b.is_zero()) return positive_leading(shift_to_polynomial(a));
  if (a.is_monomial() || b.is_monomial()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    return LaurentPoly(g);
  }
  LaurentPoly g = poly_gcd(shift_to_polynomial(a), shift_to_polynomial(b));
  return positive_leading(shift_to_polynomial(g));
}

}  // namespace qsh
