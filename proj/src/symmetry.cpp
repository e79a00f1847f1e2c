#include "x4/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace x4 {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

std::string perm_cycles(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    os << "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << " ";
      os << j;
      first = false;
      j = p[j];
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

LabeledGraph LabeledGraph::from_incidence(const IncidenceGraph& g) {
  LabeledGraph lg;
  lg.vertices = g.vertices;
  int n = static_cast<int>(g.vertices.size());
  lg.adjacency = Mat(n, n);
  for (const auto& [i, j, w] : g.edges) {
    lg.adjacency(i, j) = w;
    lg.adjacency(j, i) = w;
  }
  return lg;
}

PermutationGroup::PermutationGroup(int degree) : degree_(degree), order_(1) {}

void PermutationGroup::rebuild_level(size_t level) {
  Level& lvl = chain_[level];
  lvl.transversal.assign(degree_, Perm());
  lvl.transversal[lvl.base] = perm_identity(degree_);
  std::vector<int> orbit{lvl.base};
  for (size_t qi = 0; qi < orbit.size(); ++qi) {
    int pt = orbit[qi];
    for (const Perm& g : lvl.gens) {
      int img = g[pt];
      if (lvl.transversal[img].empty()) {
        lvl.transversal[img] = perm_compose(g, lvl.transversal[pt]);
        orbit.push_back(img);
      }
    }
  }
}

Perm PermutationGroup::strip(Perm p, size_t level) const {
  for (size_t l = level; l < chain_.size(); ++l) {
    int img = p[chain_[l].base];
    if (chain_[l].transversal[img].empty()) return p;
    p = perm_compose(perm_inverse(chain_[l].transversal[img]), p);
  }
  return p;
}

void PermutationGroup::insert(const Perm& p, size_t level) {
  if (p == perm_identity(degree_)) return;
  if (level == chain_.size()) {
    int base = -1;
    for (int i = 0; i < degree_; ++i)
      if (p[i] != i) {
        base = i;
        break;
      }
    chain_.push_back(Level{base, {}, {}});
  }
  chain_[level].gens.push_back(p);
  rebuild_level(level);
  // Sift all Schreier generators of this level into the deeper chain.
  // (chain_ may grow during recursion; index it afresh each time.)
  for (int pt = 0; pt < degree_; ++pt) {
    if (chain_[level].transversal[pt].empty()) continue;
    for (size_t gi = 0; gi < chain_[level].gens.size(); ++gi) {
      Perm g = chain_[level].gens[gi];
      Perm schreier =
          perm_compose(perm_inverse(chain_[level].transversal[g[pt]]),
                       perm_compose(g, chain_[level].transversal[pt]));
      Perm residue = strip(schreier, level + 1);
      if (residue != perm_identity(degree_)) insert(residue, level + 1);
    }
  }
}

void PermutationGroup::recompute_order() {
  order_ = 1;
  for (const Level& lvl : chain_) {
    long orbit = 0;
    for (int pt = 0; pt < degree_; ++pt)
      if (!lvl.transversal[pt].empty()) ++orbit;
    order_ *= orbit;
  }
}

bool PermutationGroup::contains(const Perm& p) const {
  if (static_cast<int>(p.size()) != degree_) return false;
  return strip(p, 0) == perm_identity(degree_);
}

bool PermutationGroup::add_generator(const Perm& p) {
  if (contains(p)) return false;
  gens_.push_back(p);
  insert(p, 0);
  recompute_order();
  return true;
}

bool PermutationGroup::equals(const PermutationGroup& other) const {
  if (degree_ != other.degree_ || order_ != other.order_) return false;
  for (const Perm& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

std::vector<Perm> PermutationGroup::elements() const {
  std::vector<Perm> out{perm_identity(degree_)};
  for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
    std::vector<Perm> next;
    for (int pt = 0; pt < degree_; ++pt) {
      if (it->transversal[pt].empty()) continue;
      for (const Perm& e : out) next.push_back(perm_compose(it->transversal[pt], e));
    }
    out = std::move(next);
  }
  return out;
}

namespace {

// Placement order keeping each new vertex maximally constrained by the
// already-placed ones (otherwise independent sets cause factorial blowup).
std::vector<int> search_order(const Mat& adj) {
  int n = adj.rows();
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  std::vector<int> score(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && (best < 0 || score[v] > score[best])) best = v;
    order.push_back(best);
    placed[best] = true;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && adj(best, v) != 0) ++score[v];
  }
  return order;
}

// Backtracking search for weight-preserving automorphisms.
void search_autos(const Mat& adj, const std::vector<int>& order, std::vector<int>& image,
                  std::vector<bool>& used, int depth,
                  const std::function<bool(const Perm&)>& emit, bool& stop) {
  int n = adj.rows();
  if (depth == n) {
    if (!emit(image)) stop = true;
    return;
  }
  int v = order[depth];
  for (int w = 0; w < n && !stop; ++w) {
    if (used[w]) continue;
    bool ok = adj(v, v) == adj(w, w);
    for (int d = 0; d < depth && ok; ++d) {
      int u = order[d];
      if (adj(v, u) != adj(w, image[u])) ok = false;
    }
    if (!ok) continue;
    image[v] = w;
    used[w] = true;
    search_autos(adj, order, image, used, depth + 1, emit, stop);
    used[w] = false;
  }
}

}  // namespace

PermutationGroup graph_automorphisms(const LabeledGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  if (n == 0) throw std::invalid_argument("graph_automorphisms: empty graph");
  PermutationGroup grp(n);
  std::vector<int> order = search_order(g.adjacency);
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  bool stop = false;
  search_autos(g.adjacency, order, image, used, 0,
               [&](const Perm& p) {
                 grp.add_generator(p);
                 return true;
               },
               stop);
  return grp;
}

std::vector<Perm> graph_automorphisms_exhaustive(const LabeledGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j)
        if (g.adjacency(i, j) != g.adjacency(p[i], p[j])) {
          ok = false;
          break;
        }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool graphs_isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
  int n = static_cast<int>(g.vertices.size());
  if (n != static_cast<int>(h.vertices.size())) return false;
  // Map g into h by backtracking on the combined constraint matrix.
  std::vector<int> order = search_order(g.adjacency);
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int depth) {
    if (depth == n) return true;
    int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = g.adjacency(v, v) == h.adjacency(w, w);
      for (int d = 0; d < depth && ok; ++d) {
        int u = order[d];
        if (g.adjacency(v, u) != h.adjacency(w, image[u])) ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (rec(depth + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return rec(0);
}

Perm pair_action(const Perm& tau) {
  if (tau.size() != 5) throw std::invalid_argument("pair_action: expects a permutation of 5 symbols");
  const auto& pairs = all_pairs();
  Perm out(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    Pair img{tau[pairs[i][0]], tau[pairs[i][1]]};
    if (img[0] > img[1]) std::swap(img[0], img[1]);
    auto it = std::find(pairs.begin(), pairs.end(), img);
    out[i] = static_cast<int>(it - pairs.begin());
  }
  return out;
}

Isometry induced_lattice_isometry(const Perm& tau, const Configuration& y4) {
  if (tau.size() != 5) throw std::invalid_argument("induced_lattice_isometry: expects a permutation of 5 symbols");
  auto mapped_pair = [&](const Pair& p) {
    Pair q{tau[p[0]], tau[p[1]]};
    if (q[0] > q[1]) std::swap(q[0], q[1]);
    return q;
  };
  auto mapped_pp = [&](const PairPair& g) {
    Pair a = mapped_pair(g[0]), b = mapped_pair(g[1]);
    return a < b ? PairPair{a, b} : PairPair{b, a};
  };
  // Solving set: five F-curves plus all fifteen G-curves form a basis.
  std::vector<std::string> from, to;
  const Pair solving_f[5] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}};
  for (const Pair& p : solving_f) {
    from.push_back("F" + pair_name(p));
    to.push_back("F" + pair_name(mapped_pair(p)));
  }
  for (const PairPair& g : all_pair_pairs()) {
    from.push_back("F" + pair_pair_name(g));
    to.push_back("F" + pair_pair_name(mapped_pp(g)));
  }
  int n = 20;
  Mat c(n, n), cimg(n, n);
  for (int j = 0; j < n; ++j) {
    const ZVec& src = y4.curve(from[j]).class_vector;
    const ZVec& dst = y4.curve(to[j]).class_vector;
    for (int i = 0; i < n; ++i) {
      c(i, j) = src[i];
      cimg(i, j) = dst[i];
    }
  }
  Mat m = cimg * inverse_unimodular(c);
  Isometry iso(m, y4.lattice.get());
  // Cross-check the remaining curve images and the canonical class.
  for (const Pair& p : all_pairs()) {
    ZVec img = m * y4.curve("F" + pair_name(p)).class_vector;
    if (img != y4.curve("F" + pair_name(mapped_pair(p))).class_vector)
      throw std::logic_error("induced_lattice_isometry: curve image mismatch");
  }
  if (m * y4.canonical_class != y4.canonical_class)
    throw std::logic_error("induced_lattice_isometry: canonical class not fixed");
  return iso;
}

PermutationGroup restriction_image(const PermutationGroup& aut, const LabeledGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  std::vector<int> f_vertices;  // degree-3 vertices in order
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    for (int w = 0; w < n; ++w)
      if (g.adjacency(v, w) != 0) ++deg;
    if (deg == 3) f_vertices.push_back(v);
  }
  std::vector<int> pos(n, -1);
  for (size_t i = 0; i < f_vertices.size(); ++i) pos[f_vertices[i]] = static_cast<int>(i);
  PermutationGroup out(static_cast<int>(f_vertices.size()));
  for (const Perm& p : aut.generators()) {
    Perm r(f_vertices.size());
    for (size_t i = 0; i < f_vertices.size(); ++i) {
      int img = p[f_vertices[i]];
      if (pos[img] < 0) throw std::invalid_argument("restriction_image: automorphism does not preserve degree-3 vertices");
      r[i] = pos[img];
    }
    out.add_generator(r);
  }
  return out;
}

std::vector<Perm> symmetric_group_elements(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace x4
