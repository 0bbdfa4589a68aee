#pragma once

// Exact rational scalars and the small amount of dense linear algebra the
// rest of the library needs: rank, linear solve, determinant and an
// incrementally built row space for membership tests.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pluck/errors.hpp"

namespace pluck {

using Rational = mpq_class;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

namespace detail {

// In-place reduced row echelon form. Returns the pivot column of each
// nonzero row, in order.
inline std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && sgn(m[sel][c]) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(QMatrix m) { return detail::rref(m).size(); }

inline Rational determinant(QMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) throw InvalidArgument("determinant: matrix is not square");
    std::size_t sel = c;
    while (sel < n && sgn(m[sel][c]) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(m[c], m[sel]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

// Some solution x of a·x = b, or nullopt when the system is inconsistent.
// Free variables are set to zero.
inline std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("solve: row count mismatch");
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  QMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = detail::rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  QVector x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

inline QMatrix transpose(const QMatrix& m) {
  if (m.empty()) return {};
  QMatrix t(m.front().size(), QVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix aug(n, QVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = detail::rref(aug);
  if (pivots.size() < n || pivots[n - 1] >= n) throw InvalidArgument("inverse: singular matrix");
  QMatrix inv(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

// Row space grown one vector at a time; rows are kept fully reduced so
// membership is a single reduction pass.
class RowSpace {
 public:
  explicit RowSpace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  QVector reduce(QVector v) const {
    if (v.size() != ambient_) throw InvalidArgument("RowSpace: dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (sgn(v[p]) == 0) continue;
      const Rational f = v[p];
      for (std::size_t j = p; j < ambient_; ++j) v[j] -= f * rows_[r][j];
    }
    return v;
  }

  bool contains(const QVector& v) const {
    for (const auto& x : reduce(v))
      if (sgn(x) != 0) return false;
    return true;
  }

  // Adds v; returns true when the dimension grew.
  bool insert(const QVector& v) {
    QVector w = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && sgn(w[p]) == 0) ++p;
    if (p == ambient_) return false;
    const Rational inv = 1 / w[p];
    for (std::size_t j = p; j < ambient_; ++j) w[j] *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (sgn(rows_[r][p]) == 0) continue;
      const Rational f = rows_[r][p];
      for (std::size_t j = p; j < ambient_; ++j) rows_[r][j] -= f * w[j];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t ambient_;
  QMatrix rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace pluck
