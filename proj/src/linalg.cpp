#include "qsh/linalg.hpp"

#include <algorithm>
#include <utility>

namespace qsh {

namespace {

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("Bareiss step: inexact division");
  return *q;
}

// Runs Bareiss elimination in place; returns (rank, sign of row swaps).
std::pair<std::size_t, int> bareiss(PolyMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  LaurentPoly prev(1L);
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = rows;
    std::size_t best = 0;
    for (std::size_t i = r; i < rows; ++i)
      if (!m(i, col).is_zero() && (pivot == rows || m(i, col).size() < best)) {
        pivot = i;
        best = m(i, col).size();
      }
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        LaurentPoly t = m(r, col) * m(i, j) - m(i, col) * m(r, j);
        m(i, j) = exact_div(t, prev);
      }
      m(i, col) = LaurentPoly();
    }
    prev = m(r, col);
    ++r;
  }
  return {r, sign};
}

// Multiplies each row by the lcm of its denominators.
PolyMatrix clear_denominators(const ScalarMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    LaurentPoly l(1L);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const LaurentPoly& d = m(i, j).den();
      if (d.is_one()) continue;
      LaurentPoly g = gcd(l, d);
      l = l * exact_div(d, g);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& x = m(i, j);
      out(i, j) = x.num() * exact_div(l, x.den());
    }
  }
  return out;
}

std::size_t weight(const Scalar& s) { return s.num().size() + s.den().size(); }

}  // namespace

std::size_t rank(PolyMatrix m) { return bareiss(m).first; }

std::size_t rank(const ScalarMatrix& m) { return rank(clear_denominators(m)); }

LaurentPoly determinant(PolyMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return LaurentPoly(1L);
  auto [r, sign] = bareiss(m);
  if (r < m.rows()) return {};
  LaurentPoly d = m(m.rows() - 1, m.cols() - 1);
  return sign < 0 ? -d : d;
}

Scalar determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Scalar scale(1L);
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    LaurentPoly l(1L);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const LaurentPoly& d = m(i, j).den();
      if (d.is_one()) continue;
      l = l * exact_div(d, gcd(l, d));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = m(i, j).num() * exact_div(l, m(i, j).den());
    scale *= Scalar(LaurentPoly(1L), l);
  }
  return Scalar(determinant(std::move(p))) * scale;
}

bool RowEchelon::insert(std::vector<LaurentPoly> row) {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  for (const auto& [piv, basis] : rows_) {
    if (row[piv].is_zero()) continue;
    const LaurentPoly a = basis[piv], b = row[piv];
    for (std::size_t j = 0; j < cols_; ++j) row[j] = a * row[j] - b * basis[j];
    LaurentPoly g;
    for (const auto& x : row)
      if (!x.is_zero()) {
        g = g.is_zero() ? x : gcd(g, x);
        if (g.is_one()) break;
      }
    if (!g.is_zero() && !g.is_one())
      for (auto& x : row) x = exact_div(x, g);
  }
  std::size_t piv = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!row[j].is_zero()) {
      piv = j;
      break;
    }
  if (piv == cols_) return false;
  auto it = std::lower_bound(rows_.begin(), rows_.end(), piv,
                             [](const auto& entry, std::size_t p) { return entry.first < p; });
  rows_.insert(it, {piv, std::move(row)});
  return true;
}

SolveResult solve(const ScalarMatrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side size mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  ScalarMatrix m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m(i, col).is_zero() && (pivot == rows || weight(m(i, col)) < weight(m(pivot, col)))) pivot = i;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j <= cols; ++j) std::swap(m(r, j), m(pivot, j));
    const Scalar inv = m(r, col).inverse();
    for (std::size_t j = col; j <= cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      const Scalar f = m(i, col);
      for (std::size_t j = col; j <= cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  SolveResult res;
  res.rank = r;
  for (std::size_t i = r; i < rows; ++i)
    if (!m(i, cols).is_zero()) {
      res.status = SolveResult::Status::inconsistent;
      return res;
    }
  if (r < cols) {
    res.status = SolveResult::Status::underdetermined;
    return res;
  }
  res.status = SolveResult::Status::unique;
  res.x.assign(cols, Scalar());
  for (std::size_t k = 0; k < r; ++k) res.x[pivot_col[k]] = m(k, cols);
  return res;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ScalarMatrix w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = Scalar(1L);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t i = col; i < n; ++i)
      if (!w(i, col).is_zero() && (pivot == n || weight(w(i, col)) < weight(w(pivot, col)))) pivot = i;
    if (pivot == n) throw NonInvertibleError("singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w(col, j), w(pivot, j));
    const Scalar inv = w(col, col).inverse();
    for (std::size_t j = 0; j < 2 * n; ++j)
      if (!w(col, j).is_zero()) w(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w(i, col).is_zero()) continue;
      const Scalar f = w(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j)
        if (!w(col, j).is_zero()) w(i, j) -= f * w(col, j);
    }
  }
  ScalarMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = w(i, n + j);
  return out;
}

}  // namespace qsh
