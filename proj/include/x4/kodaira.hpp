#pragma once

#include <optional>

#include "x4/cover.hpp"

namespace x4 {

struct FiberCandidate {
  std::vector<CurveRecord> components;  // all self-intersection -2
  Mat int_matrix;                       // pairwise intersections, diagonal -2
};

FiberCandidate make_fiber_candidate(const CoverLattice& cl, const std::vector<ZVec>& component_coords,
                                    const std::vector<std::string>& names);

enum class KodairaFamily { A, D, E };

struct KodairaType {
  KodairaFamily family;
  int index;                   // n in A~n / D~n / E~n
  std::vector<Z> multiplicities;
  int m;                       // component count
  int m1;                      // number of multiplicity-one components
  std::string name() const {
    const char* f = family == KodairaFamily::A ? "A~" : family == KodairaFamily::D ? "D~" : "E~";
    return f + std::to_string(index);
  }
};

KodairaType recognize_fiber(const FiberCandidate& fc);

ZVec fiber_class(const FiberCandidate& fc, const KodairaType& kt);

struct FibrationReport {
  std::vector<KodairaType> fibers;
  int rho;
  int r_p;
  std::optional<Z> n_p;
  std::optional<Z> det_t;
  // When det_t is unknown: feasible (det, n) solutions with n >= the
  // supplied lower bound.
  std::vector<std::pair<Z, Z>> constraint_set;
  std::string fibration_type = "undetermined";
};

FibrationReport shioda_tate(int rho, const std::vector<KodairaType>& fibers,
                            const Z& known_sections_lower_bound,
                            const std::optional<Z>& det_t_expected);

enum class FibrationType { type1, type2, undetermined };
std::string fibration_type_str(FibrationType t);

FibrationType classify_fibration_type(const ZVec& fiber_cls, const CoverLattice& cover,
                                      std::optional<int> reducible_fiber_count = std::nullopt);

// True when d can be the determinant of an even positive-definite rank-2 lattice.
bool even_rank2_feasible(const Z& d);

std::string fiber_dot(const FiberCandidate& fc, const KodairaType& kt);

}  // namespace x4
