// Dense exact linear algebra over Q.
//
// Rank is computed fraction-free (Bareiss) after clearing denominators;
// kernels, solves and RREF use plain rational Gaussian elimination.  All
// routines are deterministic: pivots are chosen by lowest row/column index.
#ifndef GRES_LINALG_HPP
#define GRES_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gres/rational.hpp"

namespace gres {

class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Q(0)) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Q& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Q& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  QMatrix operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch");
    QMatrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Q& a = (*this)(r, k);
        if (is_zero(a)) continue;
        for (std::size_t c = 0; c < o.cols_; ++c)
          if (!is_zero(o(k, c))) p(r, c) += a * o(k, c);
      }
    return p;
  }

  QMatrix operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("QMatrix: shape mismatch");
    QMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
    return s;
  }

  QMatrix operator*(const Q& s) const {
    QMatrix m = *this;
    for (auto& x : m.data_) x *= s;
    return m;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Q> data_;
};

// Fraction-free rank: clear denominators row by row, then Bareiss.
inline std::size_t rank(const QMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  std::vector<std::vector<Z>> a(nr, std::vector<Z>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    Z lcm = 1;
    for (std::size_t c = 0; c < nc; ++c)
      lcm = ::lcm(lcm, m(r, c).get_den());
    for (std::size_t c = 0; c < nc; ++c) {
      Q v = m(r, c) * Q(lcm);
      a[r][c] = v.get_num();
    }
  }
  Z prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < nc && rk < nr; ++c) {
    std::size_t piv = rk;
    while (piv < nr && sgn(a[piv][c]) == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[rk], a[piv]);
    for (std::size_t r = rk + 1; r < nr; ++r) {
      for (std::size_t k = c + 1; k < nc; ++k)
        a[r][k] = (a[rk][c] * a[r][k] - a[r][c] * a[rk][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

// Reduced row echelon form; returns pivot column indices.
inline std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(lead, k), m(piv, k));
    Q inv = 1 / m(lead, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || is_zero(m(r, c))) continue;
      Q f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

// Basis of the right kernel {v : m v = 0}, as columns of the result.
inline QMatrix kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMatrix k(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    k(free_cols[j], j) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      k(pivots[i], j) = -r(i, free_cols[j]);
  }
  return k;
}

// One solution of m x = b, if any.
inline std::optional<std::vector<Q>> solve(const QMatrix& m,
                                           const std::vector<Q>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Q> x(m.cols(), Q(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

// Solve m X = B columnwise; nullopt if any column is unsolvable.
inline std::optional<QMatrix> solve_matrix(const QMatrix& m, const QMatrix& B) {
  QMatrix X(m.cols(), B.cols());
  for (std::size_t c = 0; c < B.cols(); ++c) {
    std::vector<Q> b(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) b[r] = B(r, c);
    auto x = solve(m, b);
    if (!x) return std::nullopt;
    for (std::size_t r = 0; r < m.cols(); ++r) X(r, c) = (*x)[r];
  }
  return X;
}

// Incremental row-space tracker: feed vectors, learn which enlarge the span.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t dim) : dim_(dim) {}

  std::size_t dim_span() const { return rows_.size(); }

  // Returns true if v was independent of the current span (and absorbs it).
  bool add(std::vector<Q> v) {
    if (v.size() != dim_) throw std::invalid_argument("SpanTracker: bad length");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Q& c = v[lead_[i]];
      if (!is_zero(c)) {
        for (std::size_t k = 0; k < dim_; ++k) v[k] -= c * rows_[i][k];
      }
    }
    std::size_t lead = 0;
    while (lead < dim_ && is_zero(v[lead])) ++lead;
    if (lead == dim_) return false;
    Q inv = 1 / v[lead];
    for (auto& x : v) x *= inv;
    // Back-reduce earlier rows so membership tests stay cheap.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Q& c = rows_[i][lead];
      if (!is_zero(c))
        for (std::size_t k = 0; k < dim_; ++k) rows_[i][k] -= c * v[k];
    }
    rows_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
  }

  bool contains(std::vector<Q> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Q& c = v[lead_[i]];
      if (!is_zero(c))
        for (std::size_t k = 0; k < dim_; ++k) v[k] -= c * rows_[i][k];
    }
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<Q>> rows_;
  std::vector<std::size_t> lead_;
};

}  // namespace gres

#endif  // GRES_LINALG_HPP
