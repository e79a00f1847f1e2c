#include "x4/lattice.hpp"

#include <algorithm>

namespace x4 {

Z pairing(const IntLattice& l, const ZVec& x, const ZVec& y) {
  if (static_cast<int>(x.size()) != l.rank() || static_cast<int>(y.size()) != l.rank())
    throw std::invalid_argument("pairing: dimension mismatch");
  Z s = 0;
  for (int i = 0; i < l.rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < l.rank(); ++j) s += x[i] * l.gram()(i, j) * y[j];
  }
  return s;
}

Z pairing(const LatticeVector& x, const LatticeVector& y) {
  if (x.lattice != y.lattice) throw std::invalid_argument("pairing: different lattices");
  return pairing(*x.lattice, x.coords, y.coords);
}

Isometry::Isometry(Mat matrix, const IntLattice* lattice) : m_(std::move(matrix)), lat_(lattice) {
  if (m_.rows() != lat_->rank() || m_.cols() != lat_->rank())
    throw std::invalid_argument("Isometry: size mismatch");
  if (m_.transpose() * lat_->gram() * m_ != lat_->gram())
    throw std::invalid_argument("Isometry: does not preserve the Gram form");
  Z d = m_.det();
  if (d != 1 && d != -1) throw std::invalid_argument("Isometry: determinant not +-1");
}

DiscriminantGroup discriminant_group(const IntLattice& l) {
  if (l.det() == 0) throw std::invalid_argument("discriminant_group: degenerate lattice");
  DiscriminantGroup g;
  g.transform = smith_normal_form(l.gram());
  for (int i = 0; i < l.rank(); ++i) {
    const Z& d = g.transform.d(i, i);
    if (d > 1) g.invariant_factors.push_back(d);
  }
  return g;
}

SaturationResult saturate_overlattice(const RationalSpan& span) {
  const IntLattice& amb = *span.ambient;
  int n = amb.rank();
  const Z& den = span.denominator;
  if (den < 1) throw std::invalid_argument("saturate_overlattice: denominator must be >= 1");
  Z den2 = den * den;
  // Integrality / evenness of all pairings among generators.
  bool even = true;
  for (size_t i = 0; i < span.numerators.size(); ++i)
    for (size_t j = i; j < span.numerators.size(); ++j) {
      Z p = pairing(amb, span.numerators[i], span.numerators[j]);
      if (p % den2 != 0)
        throw std::invalid_argument("saturate_overlattice: non-integral pairing among generators");
      if (i == j && (p / den2) % 2 != 0) even = false;
    }
  Mat gens(static_cast<int>(span.numerators.size()), n);
  for (size_t i = 0; i < span.numerators.size(); ++i)
    for (int j = 0; j < n; ++j) gens(static_cast<int>(i), j) = span.numerators[i][j];
  Mat h = hermite_normal_form(gens);
  int rank = 0;
  for (int i = 0; i < h.rows(); ++i) {
    bool nz = false;
    for (int j = 0; j < n; ++j)
      if (h(i, j) != 0) nz = true;
    if (nz) ++rank;
  }
  if (rank != n) throw std::invalid_argument("saturate_overlattice: generators do not span full rank");
  Mat basis(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis(i, j) = h(i, j);
  Mat gram(n, n);
  for (int i = 0; i < n; ++i) {
    ZVec bi(n), bj(n);
    for (int k = 0; k < n; ++k) bi[k] = basis(i, k);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) bj[k] = basis(j, k);
      gram(i, j) = pairing(amb, bi, bj) / den2;
    }
  }
  // Index over the declared ambient sublattice.
  Mat amb_rows(n, n);
  if (span.ambient_numerators.empty()) {
    for (int i = 0; i < n; ++i) amb_rows(i, i) = den;
  } else {
    if (static_cast<int>(span.ambient_numerators.size()) != n)
      throw std::invalid_argument("saturate_overlattice: ambient sublattice must have full rank");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) amb_rows(i, j) = span.ambient_numerators[i][j];
  }
  Z da = amb_rows.det(), db = basis.det();
  if (da == 0 || db == 0 || da % db != 0)
    throw std::invalid_argument("saturate_overlattice: ambient sublattice not contained in span");
  Z index = abs(da / db);
  return SaturationResult{IntLattice(gram), basis, index, even};
}

FixedAntiResult fixed_and_anti_sublattice(const Isometry& f) {
  const Mat& m = f.matrix();
  int n = m.rows();
  if (m * m != Mat::identity(n)) throw std::invalid_argument("fixed_and_anti_sublattice: not an involution");
  Mat id = Mat::identity(n);
  FixedAntiResult r{integer_kernel(m - id), integer_kernel(m + id)};
  if (r.fixed.cols() + r.anti.cols() != n)
    throw std::logic_error("fixed_and_anti_sublattice: rank sum mismatch");
  return r;
}

DiscriminantAction discriminant_action(const Isometry& f) {
  const IntLattice& l = f.lattice();
  if (l.det() == 0) throw std::invalid_argument("discriminant_action: degenerate lattice");
  DiscriminantGroup dg = discriminant_group(l);
  int n = l.rank();
  // Dual vectors are G^{-1} y; the isometry acts on y-coordinates by
  // N = (M^T)^{-1} = G M G^{-1}.  In Smith coordinates z = U y the quotient
  // Z^n / G Z^n is generated by the unit vectors with orders d_i, and the
  // action is A = U N U^{-1} reduced modulo the invariant factors.
  Mat mt_inv = inverse_unimodular(f.matrix().transpose());
  Mat a = dg.transform.u * mt_inv * inverse_unimodular(dg.transform.u);
  std::vector<int> idx;
  std::vector<Z> facs;
  for (int i = 0; i < n; ++i)
    if (dg.transform.d(i, i) > 1) {
      idx.push_back(i);
      facs.push_back(dg.transform.d(i, i));
    }
  int k = static_cast<int>(idx.size());
  Mat act(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      Z v;
      mpz_fdiv_r(v.get_mpz_t(), a(idx[r], idx[c]).get_mpz_t(), facs[r].get_mpz_t());
      act(r, c) = v;
    }
  auto is_scalar = [&](int scalar) {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        Z want = (r == c) ? Z(scalar) : Z(0);
        Z w;
        mpz_fdiv_r(w.get_mpz_t(), want.get_mpz_t(), facs[r].get_mpz_t());
        if (act(r, c) != w) return false;
      }
    return true;
  };
  DiscriminantAction da;
  da.action = act;
  da.factors = facs;
  if (k == 0 || is_scalar(1))
    da.kind = DiscActionKind::trivial;
  else if (is_scalar(-1))
    da.kind = DiscActionKind::negation;
  else
    da.kind = DiscActionKind::neither;
  return da;
}

Isometry reflection_in_vector(const LatticeVector& e) {
  const IntLattice& l = *e.lattice;
  int n = l.rank();
  Z ee = pairing(l, e.coords, e.coords);
  if (ee == 0) throw std::invalid_argument("reflection_in_vector: (e,e) = 0");
  Mat m(n, n);
  for (int j = 0; j < n; ++j) {
    ZVec basis_j(n);
    basis_j[j] = 1;
    Z ex = pairing(l, e.coords, basis_j);
    Z num = 2 * ex;
    if (num % ee != 0)
      throw std::invalid_argument("reflection_in_vector: not a lattice reflection");
    Z c = num / ee;
    for (int i = 0; i < n; ++i) m(i, j) = (i == j ? Z(1) : Z(0)) - c * e.coords[i];
  }
  return Isometry(m, &l);
}

Z restricted_det(const IntLattice& l, const Mat& basis_columns) {
  Mat g = basis_columns.transpose() * l.gram() * basis_columns;
  return g.det();
}

Z divisibility(const IntLattice& l, const ZVec& v) {
  Z g = 0;
  for (int j = 0; j < l.rank(); ++j) {
    ZVec basis_j(static_cast<size_t>(l.rank()));
    basis_j[j] = 1;
    Z p = pairing(l, v, basis_j);
    g = gcd(g, p);
  }
  return abs(g);
}

}  // namespace x4
