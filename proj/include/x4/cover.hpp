#pragma once

#include "x4/blowup.hpp"
#include "x4/lattice.hpp"

namespace x4 {

// Algebraic lattice of the double cover, carried on a Hermite-reduced basis.
// Internally a class is represented by its "numerator": twice its image in
// the rank-20 rational span of the base, so pullbacks are 2v and half-integral
// branch classes are v itself; the form is (u, w) -> u^T gram_base w / 2.
struct CoverLattice {
  std::shared_ptr<const IntLattice> s_x4;
  Mat basis_numerators;   // rows: basis vectors of s_x4 in numerator scale
  Mat pullback_matrix;    // column j: coords in s_x4 of pullback of base basis j
  Z index_over_pullback;
  std::vector<CurveRecord> l_classes;   // ten L(ij), coords in s_x4 basis
  std::vector<CurveRecord> lp_classes;  // fifteen L(ij)(kl)

  const CurveRecord& l_curve(const std::string& name) const;
  bool has_l_curve(const std::string& name) const;
  // Coordinates in the s_x4 basis of the class with the given numerator;
  // throws when the numerator is not in the lattice.
  ZVec coords_of_numerator(const ZVec& numerator) const;
  ZVec numerator_of(const ZVec& coords) const;
};

CoverLattice pullback_lattice(const Configuration& y4);

// b -> half-pullback tagged r; f1/f2 -> pullback tagged l1/l2.
CurveRecord classify_cover_curve(const CoverLattice& cl, const ZVec& y4_class, Taxonomy tag,
                                 const std::string& name);

struct TranscendentalReport {
  Z disc_s;
  DiscriminantGroup disc_group;
  Mat t_gram;
};

TranscendentalReport transcendental_invariants(const CoverLattice& cl);

}  // namespace x4
