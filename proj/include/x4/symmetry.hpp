#pragma once

#include "x4/blowup.hpp"

namespace x4 {

using Perm = std::vector<int>;  // i -> p[i]

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(i) = a[b[i]]
Perm perm_inverse(const Perm& a);
std::string perm_cycles(const Perm& p);

struct LabeledGraph {
  std::vector<std::string> vertices;
  Mat adjacency;  // symmetric weight matrix, zero diagonal

  static LabeledGraph from_incidence(const IncidenceGraph& g);
};

// Membership-testable permutation group via orbit-stabilizer chains.
class PermutationGroup {
 public:
  explicit PermutationGroup(int degree);
  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const Z& order() const { return order_; }
  bool contains(const Perm& p) const;
  // Adds the generator if it enlarges the group; returns true if it did.
  bool add_generator(const Perm& p);
  bool equals(const PermutationGroup& other) const;
  std::vector<Perm> elements() const;  // full enumeration (small groups only)

 private:
  struct Level {
    int base;
    std::vector<Perm> transversal;  // degree-sized, empty perm = not in orbit
    std::vector<Perm> gens;
  };
  void rebuild_level(size_t level);
  void insert(const Perm& p, size_t level);
  // Residue of sifting p through the chain starting at the given level.
  Perm strip(Perm p, size_t level) const;
  void recompute_order();
  int degree_;
  std::vector<Perm> gens_;
  Z order_;
  std::vector<Level> chain_;
};

PermutationGroup graph_automorphisms(const LabeledGraph& g);

// Brute-force cross-check for small graphs.
std::vector<Perm> graph_automorphisms_exhaustive(const LabeledGraph& g);

bool graphs_isomorphic(const LabeledGraph& g, const LabeledGraph& h);

// Induced permutation of the ten pair labels, in all_pairs() order.
Perm pair_action(const Perm& tau);

Isometry induced_lattice_isometry(const Perm& tau, const Configuration& y4);

// Restriction of an automorphism group of the 25-vertex graph to its
// degree-3 vertices (returned in the original relative order).
PermutationGroup restriction_image(const PermutationGroup& aut, const LabeledGraph& g);

std::vector<Perm> symmetric_group_elements(int n);

}  // namespace x4
