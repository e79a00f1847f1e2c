#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "x4/lattice.hpp"

namespace x4 {

using Pair = std::array<int, 2>;          // 0 <= i < j <= 4
using PairPair = std::array<Pair, 2>;     // disjoint pairs, canonically ordered

// The ten unordered pairs in {0..4}, lexicographic.
const std::vector<Pair>& all_pairs();
// The fifteen unordered pairs of disjoint pairs, lexicographic by canonical name.
const std::vector<PairPair>& all_pair_pairs();

std::string pair_name(const Pair& p);          // "(01)"
std::string pair_pair_name(const PairPair& g); // "(01)(23)"

enum class CurveKind { hyperplane, exceptional_E, strict_F, blowup_G, derived };

struct CurveLabel {
  CurveKind kind;
  std::string name;  // canonical, e.g. "F(12)(34)"
};

enum class Taxonomy { b, f1, f2, r, l1, l2, none };
std::string taxonomy_str(Taxonomy t);

struct CurveRecord {
  CurveLabel label;
  ZVec class_vector;
  Z self_int;
  Taxonomy taxonomy = Taxonomy::none;
};

struct Configuration {
  std::shared_ptr<const IntLattice> lattice;
  std::vector<CurveRecord> curves;
  ZVec canonical_class;

  const CurveRecord& curve(const std::string& name) const;
  bool has_curve(const std::string& name) const;
};

struct IncidenceGraph {
  std::vector<std::string> vertices;
  // (u, v, weight) with u < v as indices into vertices
  std::vector<std::tuple<int, int, Z>> edges;
};

Configuration build_s5();
Configuration build_y4();

IncidenceGraph incidence_graph(const Configuration& c, const std::vector<std::string>& subset);
IncidenceGraph incidence_graph(const Configuration& c);  // all curves

// Checks sum of the configuration's negative curves of the defining family
// (E's for S5, F's for Y4) + 2K = 0.
bool verify_anticanonical(const Configuration& c);

struct NegativeClass {
  ZVec coords;
  Taxonomy taxonomy;
  Z degree;  // pairing with the ample proxy
};

// Ample proxy used to bound the search (positive on every configuration curve).
ZVec enumeration_ample_proxy();

std::vector<NegativeClass> enumerate_negative_classes(const Configuration& y4, const Z& degree_bound);

struct ConicFibration {
  ZVec fiber_class;
  std::vector<std::array<std::string, 2>> decompositions;
};

std::vector<ConicFibration> find_conic_fibrations(const Configuration& s5);

using FormalSum = std::vector<std::pair<Z, std::string>>;

bool verify_linear_equivalence(const Configuration& c, const FormalSum& lhs, const FormalSum& rhs);

std::string incidence_graph_dot(const IncidenceGraph& g);

}  // namespace x4
