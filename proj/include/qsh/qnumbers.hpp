#pragma once

// Quantum integers, factorials and binomials, both the asymmetric family
// (k)_x = 1 + x + ... + x^{k-1} and the symmetric family
// [k]_x = (x^k - x^-k)/(x - x^-1), plus {k}_x = x^k - x^-k.
// The variable x must be a monomial unit (usually a power of v).

#include <optional>

#include "qsh/laurent.hpp"

namespace qsh {

enum class QKind { asym, asym_fact, asym_binom, sym, sym_fact, sym_binom, brace, brace_fact };

LaurentPoly qnum(QKind kind, int k, std::optional<int> l, const LaurentPoly& var);

LaurentPoly asym_int(int k, const LaurentPoly& x);
LaurentPoly asym_factorial(int k, const LaurentPoly& x);
LaurentPoly asym_binomial(int k, int l, const LaurentPoly& x);
LaurentPoly sym_int(int k, const LaurentPoly& x);
LaurentPoly sym_factorial(int k, const LaurentPoly& x);
LaurentPoly sym_binomial(int k, int l, const LaurentPoly& x);
LaurentPoly brace(int k, const LaurentPoly& x);
LaurentPoly brace_factorial(int k, const LaurentPoly& x);

}  // namespace qsh
