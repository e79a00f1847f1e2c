#pragma once

#include "x4/cover.hpp"

namespace x4 {

// Projective point/line over Q with gcd-reduced integer coordinates and the
// first nonzero coordinate positive.
struct ProjPoint {
  std::array<Z, 3> c;
  static ProjPoint make(Z a, Z b, Z d);
  bool operator==(const ProjPoint& o) const { return c == o.c; }
};

struct ProjLine {
  std::array<Z, 3> c;  // coefficients of a*x0 + b*x1 + d*x2 = 0
  static ProjLine make(Z a, Z b, Z d);
  bool contains(const ProjPoint& p) const;
  bool operator==(const ProjLine& o) const { return c == o.c; }
};

ProjPoint line_intersection(const ProjLine& l, const ProjLine& m);
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

// [x0,x1,x2] -> [x1 x2, x0 x2, x0 x1]; throws on base points.
ProjPoint quadratic_map(const ProjPoint& p);
bool is_base_point(const ProjPoint& p);

struct QConfiguration {
  std::array<ProjPoint, 4> p;       // the four fixed points
  std::map<std::string, ProjLine> n_lines;  // "N12" .. "N34"
  std::array<ProjPoint, 3> q;       // diagonal points, from line incidences
  std::map<std::string, ProjLine> k_lines;  // "K12", "K13", "K23"
};

QConfiguration q_configuration();

struct QPropertyReport {
  bool base_points_ok;
  bool k_lines_collapse_ok;
  bool n_lines_stable_ok;
  bool fixed_points_ok;
  bool all_ok() const { return base_points_ok && k_lines_collapse_ok && n_lines_stable_ok && fixed_points_ok; }
};

QPropertyReport verify_q_properties();

Isometry build_fq_star(const Configuration& y4);

struct ReflectionData {
  ZVec e_y;                 // anti-invariant root in the base lattice
  ZVec e_x;                 // its pullback, in s_x4 coordinates
  Mat fq_matrix;
  Mat lift_matrix;
  Z e_y_square;
  Z e_x_square;
  Z e_x_divisibility;
  DiscriminantAction disc_action;
  Z fixed_lattice_det;      // of the lift's fixed sublattice in s_x4
};

ReflectionData certify_reflection(const Isometry& fq, const Configuration& y4, const CoverLattice& cover);

struct ReflectionFingerprint {
  Z square;
  Z div;
  std::string disc_action;
  Z fixed_det;
  bool operator==(const ReflectionFingerprint& o) const {
    return square == o.square && div == o.div && disc_action == o.disc_action && fixed_det == o.fixed_det;
  }
};

struct ConjugacyRecord {
  ReflectionFingerprint lift;       // fingerprint of the lifted reflection
  ReflectionFingerprint root_m2;    // fingerprint of a square -2 root reflection
  bool distinct;
};

ConjugacyRecord conjugacy_invariants(const ReflectionData& rd, const CoverLattice& cover);

ReflectionFingerprint reflection_fingerprint(const CoverLattice& cover, const ZVec& root_coords);

}  // namespace x4
