#pragma once

#include <optional>
#include <string>
#include <vector>

#include "x4/matrix.hpp"
#include "x4/snf.hpp"

namespace x4 {

class IntLattice {
 public:
  IntLattice(Mat gram, std::vector<std::string> basis_labels = {})
      : gram_(std::move(gram)), labels_(std::move(basis_labels)) {
    if (gram_.rows() < 1 || !gram_.is_symmetric())
      throw std::invalid_argument("IntLattice: gram must be symmetric, rank >= 1");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != gram_.rows())
      throw std::invalid_argument("IntLattice: label count mismatch");
  }

  int rank() const { return gram_.rows(); }
  const Mat& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Z det() const { return gram_.det(); }
  bool is_even() const {
    for (int i = 0; i < rank(); ++i)
      if (gram_(i, i) % 2 != 0) return false;
    return true;
  }

 private:
  Mat gram_;
  std::vector<std::string> labels_;
};

struct LatticeVector {
  ZVec coords;
  const IntLattice* lattice;
};

Z pairing(const LatticeVector& x, const LatticeVector& y);
Z pairing(const IntLattice& l, const ZVec& x, const ZVec& y);

class Isometry {
 public:
  Isometry(Mat matrix, const IntLattice* lattice);
  const Mat& matrix() const { return m_; }
  const IntLattice& lattice() const { return *lat_; }

 private:
  Mat m_;
  const IntLattice* lat_;
};

struct DiscriminantGroup {
  std::vector<Z> invariant_factors;  // each > 1, d_i | d_{i+1}
  SmithResult transform;             // u * gram * v = d
  Z order() const {
    Z o = 1;
    for (const Z& f : invariant_factors) o *= f;
    return o;
  }
};

DiscriminantGroup discriminant_group(const IntLattice& l);

struct RationalSpan {
  std::vector<ZVec> numerators;  // generators, scaled by denominator
  Z denominator;                 // >= 1
  const IntLattice* ambient;     // carries the form on numerators
  // Rows generating the declared ambient sublattice (numerator scale);
  // defaults to denominator * identity when empty.
  std::vector<ZVec> ambient_numerators;
};

struct SaturationResult {
  IntLattice lattice;      // induced Gram on the Hermite-reduced basis
  Mat basis_numerators;    // rows: basis vectors, numerator scale
  Z index_over_ambient;    // [span : declared ambient sublattice]
  bool even;
};

SaturationResult saturate_overlattice(const RationalSpan& span);

struct FixedAntiResult {
  Mat fixed;  // columns: saturated basis of ker(f - id)
  Mat anti;   // columns: saturated basis of ker(f + id)
};

FixedAntiResult fixed_and_anti_sublattice(const Isometry& f);

enum class DiscActionKind { trivial, negation, neither };

struct DiscriminantAction {
  DiscActionKind kind = DiscActionKind::neither;
  // Action matrix on the generators of the nontrivial invariant factors,
  // entries reduced modulo the respective factors (column j maps into rows).
  Mat action;
  std::vector<Z> factors;
  std::string kind_str() const {
    switch (kind) {
      case DiscActionKind::trivial: return "trivial";
      case DiscActionKind::negation: return "negation";
      default: return "neither";
    }
  }
};

DiscriminantAction discriminant_action(const Isometry& f);

Isometry reflection_in_vector(const LatticeVector& e);

// Determinant of the Gram form restricted to the sublattice spanned by the
// columns of basis.
Z restricted_det(const IntLattice& l, const Mat& basis_columns);

// gcd of (v, x) over all basis vectors x.
Z divisibility(const IntLattice& l, const ZVec& v);

}  // namespace x4
