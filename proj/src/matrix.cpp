#include "x4/matrix.hpp"

namespace x4 {

bool solve_rational(const Mat& m, const std::vector<Q>& b, std::vector<Q>& x) {
  int n = m.rows();
  if (m.cols() != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("solve_rational: shape mismatch");
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Q(m(i, j));
    a[i][n] = b[i];
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) return false;
    std::swap(a[c], a[p]);
    Q inv = 1 / a[c][c];
    for (int j = c; j <= n; ++j) a[c][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Q f = a[r][c];
      for (int j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  x.resize(n);
  for (int i = 0; i < n; ++i) {
    a[i][n].canonicalize();
    x[i] = a[i][n];
  }
  return true;
}

Mat inverse_unimodular(const Mat& m) {
  int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: not square");
  Mat inv(n, n);
  for (int col = 0; col < n; ++col) {
    std::vector<Q> b(n), x;
    b[col] = 1;
    if (!solve_rational(m, b, x)) throw std::invalid_argument("inverse: singular matrix");
    for (int i = 0; i < n; ++i) {
      if (x[i].get_den() != 1) throw std::invalid_argument("inverse: not integral");
      inv(i, col) = x[i].get_num();
    }
  }
  return inv;
}

ZVec char_poly(const Mat& m) {
  int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("char_poly: not square");
  ZVec c(n + 1);
  c[n] = 1;
  Mat mk = Mat::identity(n);  // M_0 = I
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    Z tr = 0;
    for (int i = 0; i < n; ++i) tr += mk(i, i);
    Z ck;
    mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    ck = -ck;
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) mk(i, i) += ck;
  }
  return c;
}

}  // namespace x4
