#include "qsh/qnumbers.hpp"

#include <stdexcept>
#include <string>

namespace qsh {

namespace {

void require_unit(const LaurentPoly& x) {
  if (!x.is_unit() || x.leading().second != 1)
    throw std::domain_error("quantum number variable must be a monic monomial");
}

void require_nonnegative(int k) {
  if (k < 0) throw std::domain_error("quantum number index must be nonnegative, got " + std::to_string(k));
}

void require_range(int k, int l) {
  require_nonnegative(k);
  if (l < 0 || l > k)
    throw std::domain_error("binomial index out of range: l=" + std::to_string(l) + ", k=" + std::to_string(k));
}

}  // namespace

LaurentPoly asym_int(int k, const LaurentPoly& x) {
  require_unit(x);
  require_nonnegative(k);
  LaurentPoly r, p(1L);
  for (int i = 0; i < k; ++i) {
    r += p;
    p *= x;
  }
  return r;
}

LaurentPoly asym_factorial(int k, const LaurentPoly& x) {
  require_nonnegative(k);
  LaurentPoly r(1L);
  for (int i = 2; i <= k; ++i) r *= asym_int(i, x);
  return r;
}

LaurentPoly asym_binomial(int k, int l, const LaurentPoly& x) {
  require_range(k, l);
  auto q = divide_exact(asym_factorial(k, x), asym_factorial(l, x) * asym_factorial(k - l, x));
  if (!q) throw std::logic_error("asymmetric binomial: inexact division");
  return *q;
}

LaurentPoly sym_int(int k, const LaurentPoly& x) {
  require_unit(x);
  require_nonnegative(k);
  LaurentPoly r;
  for (int i = 0; i < k; ++i) r += x.pow(k - 1 - 2 * i);
  return r;
}

LaurentPoly sym_factorial(int k, const LaurentPoly& x) {
  require_nonnegative(k);
  LaurentPoly r(1L);
  for (int i = 2; i <= k; ++i) r *= sym_int(i, x);
  return r;
}

LaurentPoly sym_binomial(int k, int l, const LaurentPoly& x) {
  require_range(k, l);
  auto q = divide_exact(sym_factorial(k, x), sym_factorial(l, x) * sym_factorial(k - l, x));
  if (!q) throw std::logic_error("symmetric binomial: inexact division");
  return *q;
}

LaurentPoly brace(int k, const LaurentPoly& x) {
  require_unit(x);
  require_nonnegative(k);
  return x.pow(k) - x.pow(-k);
}

LaurentPoly brace_factorial(int k, const LaurentPoly& x) {
  require_nonnegative(k);
  LaurentPoly r(1L);
  for (int i = 1; i <= k; ++i) r *= brace(i, x);
  return r;
}

LaurentPoly qnum(QKind kind, int k, std::optional<int> l, const LaurentPoly& var) {
  auto need_l = [&]() {
    if (!l) throw std::domain_error("binomial requires a lower index");
    return *l;
  };
  switch (kind) {
    case QKind::asym: return asym_int(k, var);
    case QKind::asym_fact: return asym_factorial(k, var);
    case QKind::asym_binom: return asym_binomial(k, need_l(), var);
    case QKind::sym: return sym_int(k, var);
    case QKind::sym_fact: return sym_factorial(k, var);
    case QKind::sym_binom: return sym_binomial(k, need_l(), var);
    case QKind::brace: return brace(k, var);
    case QKind::brace_fact: return brace_factorial(k, var);
  }
  throw std::logic_error("unknown quantum number kind");
}

}  // namespace qsh
