#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace x4 {

using Z = mpz_class;
using Q = mpq_class;
using ZVec = std::vector<Z>;

// Dense integer matrix, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Z& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Z& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Z& v = (*this)(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }

  ZVec operator*(const ZVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector: dimension mismatch");
    ZVec r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Mat operator+(const Mat& o) const {
    require_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    require_same_shape(o);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  // Fraction-free Bareiss determinant.
  Z det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    int n = rows_;
    if (n == 0) return 1;
    Mat m = *this;
    Z prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (m(k, k) == 0) {
        int p = -1;
        for (int i = k + 1; i < n; ++i)
          if (m(i, k) != 0) {
            p = i;
            break;
          }
        if (p < 0) return 0;
        for (int j = 0; j < n; ++j) swap(m(k, j), m(p, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) {
          Z t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
          mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
      prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Z(-m(n - 1, n - 1));
  }

  std::vector<Z>& data() { return a_; }
  const std::vector<Z>& data() const { return a_; }

 private:
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  int rows_, cols_;
  std::vector<Z> a_;
};

// Solves m * x = b exactly over the rationals; returns true on success.
bool solve_rational(const Mat& m, const std::vector<Q>& b, std::vector<Q>& x);

// Exact inverse of a square integer matrix with det = ±1; throws if singular
// or the inverse is not integral.
Mat inverse_unimodular(const Mat& m);

// Characteristic polynomial of a square matrix: coefficients c[0..n] of
// det(xI - m) = c[n] x^n + ... + c[0], computed by Faddeev-LeVerrier
// (all divisions exact).
ZVec char_poly(const Mat& m);

inline Z dot(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Z s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::string vec_str(const ZVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}

}  // namespace x4
