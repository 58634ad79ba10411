#ifndef NILREP_MATRIX_HPP
#define NILREP_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilrep/rational.hpp"

namespace nilrep {

using Vec = std::vector<Rational>;

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec& add_scaled(Vec& dst, const Rational& c, const Vec& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
  return dst;
}

inline Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec operator*(const Rational& c, Vec v) {
  for (auto& x : v) x *= c;
  return v;
}

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void set_row(std::size_t i, const Vec& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }

  // Skips zero entries; representation matrices are sparse in practice.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (bkj == 0) continue;
          c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend Matrix operator*(const Rational& c, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
    return r;
  }

  /// Matrix-vector product (v as a column).
  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw Error("matrix apply: shape mismatch");
    Vec out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Rational& a = (*this)(i, j);
        if (a != 0) out[i] += a * v[j];
      }
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Reduced row echelon form (unique canonical form) and its pivot columns.
inline std::pair<Matrix, std::vector<std::size_t>> rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < m.rows() && m(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(lead, j), m(pivot_row, j));
    const Rational inv = 1 / m(lead, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

/// Basis of {v : Mv = 0}, one vector per free column, in column order.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols(), Rational(0));
    v[j] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coordinates c with c * rows = target, if target lies in the row space.
inline std::optional<Vec> solve_row_combination(const Matrix& rows, const Vec& target) {
  if (target.size() != rows.cols()) throw Error("solve: shape mismatch");
  // Augmented system rows^T * c = target^T.
  Matrix aug(rows.cols(), rows.rows() + 1);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) aug(j, i) = rows(i, j);
  for (std::size_t j = 0; j < rows.cols(); ++j) aug(j, rows.rows()) = target[j];
  auto [r, pivots] = rref(std::move(aug));
  Vec c(rows.rows(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == rows.rows()) return std::nullopt;  // inconsistent
    c[pivots[i]] = r(i, rows.rows());
  }
  return c;
}

}  // namespace nilrep

#endif
