#pragma once

#include "x4/matrix.hpp"

namespace x4 {

struct SmithResult {
  Mat d;  // diagonal, d_i | d_{i+1}, nonnegative
  Mat u;  // unimodular, u * m * v = d
  Mat v;  // unimodular
};

SmithResult smith_normal_form(const Mat& m);

// Row-style Hermite normal form of the subgroup of Z^cols generated by the
// rows of m: returns a matrix whose nonzero rows are a canonical basis
// (row echelon, positive pivots, entries above a pivot reduced mod it).
Mat hermite_normal_form(const Mat& m);

// Saturated basis of the right integer kernel {x : m x = 0}, as columns.
Mat integer_kernel(const Mat& m);

// Signature of a symmetric integer matrix: (positive, negative, zero)
// eigenvalue counts via the characteristic polynomial and Descartes' rule
// (exact for real-rooted polynomials).
struct Signature {
  int positive;
  int negative;
  int zero;
};
Signature signature_of(const Mat& gram);

}  // namespace x4
