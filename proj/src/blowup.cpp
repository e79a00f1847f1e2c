#include "x4/blowup.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace x4 {

const std::vector<Pair>& all_pairs() {
  static const std::vector<Pair> pairs = [] {
    std::vector<Pair> v;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) v.push_back({i, j});
    return v;
  }();
  return pairs;
}

const std::vector<PairPair>& all_pair_pairs() {
  static const std::vector<PairPair> pps = [] {
    std::vector<PairPair> v;
    const auto& ps = all_pairs();
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = i + 1; j < ps.size(); ++j) {
        const Pair &p = ps[i], &q = ps[j];
        if (p[0] != q[0] && p[0] != q[1] && p[1] != q[0] && p[1] != q[1]) v.push_back({p, q});
      }
    std::sort(v.begin(), v.end());
    return v;
  }();
  return pps;
}

std::string pair_name(const Pair& p) {
  return "(" + std::to_string(p[0]) + std::to_string(p[1]) + ")";
}

std::string pair_pair_name(const PairPair& g) { return pair_name(g[0]) + pair_name(g[1]); }

std::string taxonomy_str(Taxonomy t) {
  switch (t) {
    case Taxonomy::b: return "b";
    case Taxonomy::f1: return "f1";
    case Taxonomy::f2: return "f2";
    case Taxonomy::r: return "r";
    case Taxonomy::l1: return "l1";
    case Taxonomy::l2: return "l2";
    default: return "none";
  }
}

const CurveRecord& Configuration::curve(const std::string& name) const {
  for (const auto& c : curves)
    if (c.label.name == name) return c;
  throw std::invalid_argument("unknown curve label: " + name);
}

bool Configuration::has_curve(const std::string& name) const {
  for (const auto& c : curves)
    if (c.label.name == name) return true;
  return false;
}

namespace {

bool pairs_disjoint(const Pair& p, const Pair& q) {
  return p[0] != q[0] && p[0] != q[1] && p[1] != q[0] && p[1] != q[1];
}

int g_index(const Pair& a, const Pair& b) {
  PairPair g = a < b ? PairPair{a, b} : PairPair{b, a};
  const auto& pps = all_pair_pairs();
  auto it = std::find(pps.begin(), pps.end(), g);
  if (it == pps.end()) throw std::logic_error("g_index: pairs not disjoint");
  return 5 + static_cast<int>(it - pps.begin());
}

ZVec e_class_s5(const Pair& p) {
  ZVec v(5);
  if (p[0] == 0) {
    v[p[1]] = 1;
  } else {
    v[0] = 1;
    for (int k = 1; k <= 4; ++k)
      if (k != p[0] && k != p[1]) v[k] = -1;
  }
  return v;
}

}  // namespace

Configuration build_s5() {
  Mat gram(5, 5);
  gram(0, 0) = 1;
  for (int i = 1; i < 5; ++i) gram(i, i) = -1;
  std::vector<std::string> labels{"H", "E1", "E2", "E3", "E4"};
  Configuration c;
  c.lattice = std::make_shared<IntLattice>(gram, labels);
  c.canonical_class = ZVec{-3, 1, 1, 1, 1};
  for (const Pair& p : all_pairs()) {
    CurveRecord r;
    r.label = {CurveKind::exceptional_E, "E" + pair_name(p)};
    r.class_vector = e_class_s5(p);
    r.self_int = pairing(*c.lattice, r.class_vector, r.class_vector);
    c.curves.push_back(std::move(r));
  }
  return c;
}

Configuration build_y4() {
  Mat gram(20, 20);
  gram(0, 0) = 1;
  for (int i = 1; i < 20; ++i) gram(i, i) = -1;
  std::vector<std::string> labels{"H", "E1", "E2", "E3", "E4"};
  for (const PairPair& g : all_pair_pairs()) labels.push_back("G" + pair_pair_name(g));
  Configuration c;
  c.lattice = std::make_shared<IntLattice>(gram, labels);
  c.canonical_class.assign(20, 1);
  c.canonical_class[0] = -3;
  for (const Pair& p : all_pairs()) {
    ZVec v(20);
    ZVec s5 = e_class_s5(p);
    for (int i = 0; i < 5; ++i) v[i] = s5[i];
    for (const Pair& q : all_pairs())
      if (pairs_disjoint(p, q)) v[g_index(p, q)] -= 1;
    CurveRecord r;
    r.label = {CurveKind::strict_F, "F" + pair_name(p)};
    r.class_vector = v;
    r.self_int = pairing(*c.lattice, v, v);
    r.taxonomy = Taxonomy::b;
    c.curves.push_back(std::move(r));
  }
  for (const PairPair& g : all_pair_pairs()) {
    ZVec v(20);
    v[g_index(g[0], g[1])] = 1;
    CurveRecord r;
    r.label = {CurveKind::blowup_G, "F" + pair_pair_name(g)};
    r.class_vector = v;
    r.self_int = pairing(*c.lattice, v, v);
    r.taxonomy = Taxonomy::f2;
    c.curves.push_back(std::move(r));
  }
  return c;
}

IncidenceGraph incidence_graph(const Configuration& c, const std::vector<std::string>& subset) {
  IncidenceGraph g;
  std::vector<const CurveRecord*> recs;
  for (const auto& name : subset) {
    recs.push_back(&c.curve(name));
    g.vertices.push_back(name);
  }
  for (size_t i = 0; i < recs.size(); ++i)
    for (size_t j = i + 1; j < recs.size(); ++j) {
      Z w = pairing(*c.lattice, recs[i]->class_vector, recs[j]->class_vector);
      if (w > 0) g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j), w);
    }
  return g;
}

IncidenceGraph incidence_graph(const Configuration& c) {
  std::vector<std::string> names;
  for (const auto& r : c.curves) names.push_back(r.label.name);
  return incidence_graph(c, names);
}

bool verify_anticanonical(const Configuration& c) {
  CurveKind family = c.lattice->rank() == 5 ? CurveKind::exceptional_E : CurveKind::strict_F;
  ZVec sum(static_cast<size_t>(c.lattice->rank()));
  for (const auto& r : c.curves)
    if (r.label.kind == family)
      for (size_t i = 0; i < sum.size(); ++i) sum[i] += r.class_vector[i];
  for (size_t i = 0; i < sum.size(); ++i)
    if (sum[i] + 2 * c.canonical_class[i] != 0) return false;
  return true;
}

ZVec enumeration_ample_proxy() {
  ZVec a(20, -1);
  a[0] = 12;
  for (int i = 1; i <= 4; ++i) a[i] = -4;
  return a;
}

std::vector<NegativeClass> enumerate_negative_classes(const Configuration& y4, const Z& degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("enumerate_negative_classes: bound must be >= 1");
  if (y4.lattice->rank() != 20) throw std::invalid_argument("enumerate_negative_classes: expects the rank-20 configuration");
  const IntLattice& lat = *y4.lattice;
  long bound = degree_bound.get_si();
  ZVec ample = enumeration_ample_proxy();
  std::vector<const CurveRecord*> table;
  for (const auto& r : y4.curves) table.push_back(&r);

  std::vector<NegativeClass> out;
  // Components: w = (a, -b_1..-b_4, -c_1..-c_15); with K and the proxy this
  // pins sum(b), sum(c) from (a, degree) and w^2 fixes the square budget.
  auto consider = [&](long a, const std::vector<long>& b, const std::vector<long>& c, long n) {
    ZVec w(20);
    w[0] = a;
    for (int i = 0; i < 4; ++i) w[1 + i] = -b[i];
    for (int i = 0; i < 15; ++i) w[5 + i] = -c[i];
    Z deg = pairing(lat, w, ample);
    if (deg < 0 || deg > degree_bound) return;
    for (const CurveRecord* r : table) {
      if (r->class_vector == w) continue;
      if (pairing(lat, w, r->class_vector) < 0) return;
    }
    NegativeClass nc;
    nc.coords = w;
    nc.degree = deg;
    if (n == -4) {
      nc.taxonomy = Taxonomy::b;
    } else {
      int twos = 0, ones = 0, others = 0;
      for (const Pair& p : all_pairs()) {
        Z m = pairing(lat, w, y4.curve("F" + pair_name(p)).class_vector);
        if (m == 2) ++twos;
        else if (m == 1) ++ones;
        else if (m != 0) ++others;
      }
      if (others == 0 && twos == 1 && ones == 0) nc.taxonomy = Taxonomy::f1;
      else if (others == 0 && twos == 0 && ones == 2) nc.taxonomy = Taxonomy::f2;
      else nc.taxonomy = Taxonomy::none;
    }
    out.push_back(std::move(nc));
  };

  // Generate integer tuples of given length with fixed sum and bounded
  // square mass; prune with the Cauchy-Schwarz bound sum^2 <= r * mass.
  std::function<void(int, long, long, std::vector<long>&, const std::function<void(const std::vector<long>&, long)>&)>
      gen = [&](int r, long target, long budget, std::vector<long>& acc,
                const std::function<void(const std::vector<long>&, long)>& emit) {
        if (r == 0) {
          if (target == 0) emit(acc, budget);
          return;
        }
        if (target * target > budget * r) return;
        long lim = 0;
        while ((lim + 1) * (lim + 1) <= budget) ++lim;
        for (long x = -lim; x <= lim; ++x) {
          acc.push_back(x);
          gen(r - 1, target - x, budget - x * x, acc, emit);
          acc.pop_back();
        }
      };

  const long cases[2][2] = {{-4, 2}, {-1, -1}};
  for (const auto& nk : cases) {
    long n = nk[0], k = nk[1];
    // Effectivity against the curve table forces deg >= 9a - 6*sqrt(a^2 - n),
    // so large a cannot reach the degree bound.
    for (long a = -5;; ++a) {
      if (a >= 1 && 9 * a - bound > 0 &&
          (9 * a - bound) * (9 * a - bound) > 36 * (a * a - n))
        break;
      long q = a * a - n;
      if (q < 0) continue;
      for (long d = 0; d <= bound; ++d) {
        if (((9 * a - k - d) % 3 + 3) % 3 != 0) continue;
        long sb = (9 * a - k - d) / 3;
        long sc = k + 3 * a - sb;
        std::vector<long> bacc, cacc;
        gen(4, sb, q, bacc, [&](const std::vector<long>& b, long rem) {
          std::vector<long> c2;
          gen(15, sc, rem, c2, [&](const std::vector<long>& c, long rem2) {
            if (rem2 != 0) return;  // squares must exhaust the budget exactly
            consider(a, b, c, n);
          });
        });
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NegativeClass& x, const NegativeClass& y) {
    return x.coords < y.coords;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const NegativeClass& x, const NegativeClass& y) { return x.coords == y.coords; }),
            out.end());
  return out;
}

std::vector<ConicFibration> find_conic_fibrations(const Configuration& s5) {
  if (s5.lattice->rank() != 5) throw std::invalid_argument("find_conic_fibrations: expects the rank-5 configuration");
  const IntLattice& lat = *s5.lattice;
  ZVec minus_k(5);
  for (int i = 0; i < 5; ++i) minus_k[i] = -s5.canonical_class[i];
  std::vector<ConicFibration> out;
  for (long a = 0; a <= 3; ++a)
    for (long b1 = -3; b1 <= 3; ++b1)
      for (long b2 = -3; b2 <= 3; ++b2)
        for (long b3 = -3; b3 <= 3; ++b3)
          for (long b4 = -3; b4 <= 3; ++b4) {
            ZVec v{a, b1, b2, b3, b4};
            if (pairing(lat, v, v) != 0) continue;
            if (pairing(lat, v, minus_k) != 2) continue;
            bool eff = true;
            for (const auto& r : s5.curves)
              if (pairing(lat, v, r.class_vector) < 0) {
                eff = false;
                break;
              }
            if (!eff) continue;
            ConicFibration f;
            f.fiber_class = v;
            for (size_t i = 0; i < s5.curves.size(); ++i)
              for (size_t j = i + 1; j < s5.curves.size(); ++j) {
                ZVec sum(5);
                for (int t = 0; t < 5; ++t)
                  sum[t] = s5.curves[i].class_vector[t] + s5.curves[j].class_vector[t];
                if (sum == v)
                  f.decompositions.push_back({s5.curves[i].label.name, s5.curves[j].label.name});
              }
            out.push_back(std::move(f));
          }
  std::sort(out.begin(), out.end(),
            [](const ConicFibration& x, const ConicFibration& y) { return x.fiber_class < y.fiber_class; });
  return out;
}

bool verify_linear_equivalence(const Configuration& c, const FormalSum& lhs, const FormalSum& rhs) {
  ZVec l(static_cast<size_t>(c.lattice->rank())), r(static_cast<size_t>(c.lattice->rank()));
  for (const auto& [coef, name] : lhs) {
    const ZVec& v = c.curve(name).class_vector;
    for (size_t i = 0; i < l.size(); ++i) l[i] += coef * v[i];
  }
  for (const auto& [coef, name] : rhs) {
    const ZVec& v = c.curve(name).class_vector;
    for (size_t i = 0; i < r.size(); ++i) r[i] += coef * v[i];
  }
  return l == r;
}

std::string incidence_graph_dot(const IncidenceGraph& g) {
  std::ostringstream os;
  os << "graph configuration {\n";
  for (const auto& v : g.vertices) os << "  \"" << v << "\";\n";
  for (const auto& [i, j, w] : g.edges)
    os << "  \"" << g.vertices[i] << "\" -- \"" << g.vertices[j] << "\" [label=" << w.get_str() << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace x4
