#include "x4/snf.hpp"

#include <algorithm>

namespace x4 {

namespace {

void swap_rows(Mat& m, int i, int j) {
  for (int c = 0; c < m.cols(); ++c) swap(m(i, c), m(j, c));
}
void swap_cols(Mat& m, int i, int j) {
  for (int r = 0; r < m.rows(); ++r) swap(m(r, i), m(r, j));
}
// row i -= q * row j
void row_op(Mat& m, int i, int j, const Z& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols(); ++c) m(i, c) -= q * m(j, c);
}
void col_op(Mat& m, int i, int j, const Z& q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows(); ++r) m(r, i) -= q * m(r, j);
}
void negate_row(Mat& m, int i) {
  for (int c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}
void negate_col(Mat& m, int j) {
  for (int r = 0; r < m.rows(); ++r) m(r, j) = -m(r, j);
}

}  // namespace

namespace {

// Quotient minimizing |a - q b| (keeps elimination entries small).
Z balanced_quot(const Z& a, const Z& b) {
  Z q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Z ab = abs(b);
  if (2 * r > ab) q += sgn(b);
  return q;
}

}  // namespace

SmithResult smith_normal_form(const Mat& m) {
  int rows = m.rows(), cols = m.cols();
  SmithResult res{m, Mat::identity(rows), Mat::identity(cols)};
  Mat& d = res.d;
  Mat& u = res.u;
  Mat& v = res.v;
  int t = 0;
  int limit = std::min(rows, cols);
  while (t < limit) {
    // Pivot on a smallest-magnitude nonzero entry of the remaining block.
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (d(i, j) != 0 && (pr < 0 || abs(d(i, j)) < abs(d(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    if (pr != t) {
      swap_rows(d, t, pr);
      swap_rows(u, t, pr);
    }
    if (pc != t) {
      swap_cols(d, t, pc);
      swap_cols(v, t, pc);
    }
    bool again = true;
    while (again) {
      again = false;
      // Keep pivoting on the smallest entry of row/column t.
      for (int i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Z q = balanced_quot(d(i, t), d(t, t));
        row_op(d, i, t, q);
        row_op(u, i, t, q);
        if (d(i, t) != 0) {
          swap_rows(d, t, i);
          swap_rows(u, t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Z q = balanced_quot(d(t, j), d(t, t));
        col_op(d, j, t, q);
        col_op(v, j, t, q);
        if (d(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(v, t, j);
          again = true;
        }
      }
    }
    // Enforce divisibility of the remaining block by the pivot.
    bool redo = false;
    for (int i = t + 1; i < rows && !redo; ++i)
      for (int j = t + 1; j < cols; ++j)
        if (d(i, j) % d(t, t) != 0) {
          // add row i to row t, restart elimination at t
          row_op(d, t, i, Z(-1));
          row_op(u, t, i, Z(-1));
          redo = true;
          break;
        }
    if (redo) continue;
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
    ++t;
  }
  return res;
}

Mat hermite_normal_form(const Mat& m) {
  int rows = m.rows(), cols = m.cols();
  Mat h = m;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Clear column c below row r via gcd row operations.
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (h(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) swap_rows(h, r, piv);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Z q = h(i, c) / h(r, c);
        row_op(h, i, r, q);
        if (h(i, c) != 0) {
          swap_rows(h, r, i);
          changed = true;
        }
      }
    }
    if (h(r, c) < 0) negate_row(h, r);
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Z q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      row_op(h, i, r, q);
    }
    ++r;
  }
  return h;
}

Mat integer_kernel(const Mat& m) {
  SmithResult s = smith_normal_form(m);
  int cols = m.cols();
  int limit = std::min(m.rows(), cols);
  int rank = 0;
  for (int i = 0; i < limit; ++i)
    if (s.d(i, i) != 0) ++rank;
  Mat k(cols, cols - rank);
  for (int j = rank; j < cols; ++j)
    for (int i = 0; i < cols; ++i) k(i, j - rank) = s.v(i, j);
  return k;
}

Signature signature_of(const Mat& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("signature_of: not symmetric");
  ZVec c = char_poly(gram);
  int n = gram.rows();
  int zero = 0;
  while (zero <= n && c[zero] == 0) ++zero;
  auto sign_changes = [&](bool flip) {
    int changes = 0, last = 0;
    for (int i = zero; i <= n; ++i) {
      if (c[i] == 0) continue;
      int s = sgn(c[i]);
      if (flip && ((n - i) % 2 == 1)) s = -s;  // coefficient of p(-x)
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  Signature sig;
  sig.zero = zero;
  sig.positive = sign_changes(false);
  sig.negative = sign_changes(true);
  if (sig.positive + sig.negative + sig.zero != n)
    throw std::logic_error("signature_of: Descartes count mismatch");
  return sig;
}

}  // namespace x4
