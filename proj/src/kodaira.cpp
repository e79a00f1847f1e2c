#include "x4/kodaira.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace x4 {

FiberCandidate make_fiber_candidate(const CoverLattice& cl, const std::vector<ZVec>& component_coords,
                                    const std::vector<std::string>& names) {
  if (component_coords.size() != names.size())
    throw std::invalid_argument("make_fiber_candidate: name count mismatch");
  FiberCandidate fc;
  int m = static_cast<int>(component_coords.size());
  fc.int_matrix = Mat(m, m);
  for (int i = 0; i < m; ++i) {
    CurveRecord r;
    r.label = {CurveKind::derived, names[i]};
    r.class_vector = component_coords[i];
    r.self_int = pairing(*cl.s_x4, component_coords[i], component_coords[i]);
    fc.components.push_back(std::move(r));
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      fc.int_matrix(i, j) = pairing(*cl.s_x4, component_coords[i], component_coords[j]);
  return fc;
}

namespace {

bool connected(const Mat& m) {
  int n = m.rows();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (!seen[w] && m(v, w) > 0) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

KodairaType recognize_fiber(const FiberCandidate& fc) {
  const Mat& m = fc.int_matrix;
  int n = m.rows();
  if (n == 0) throw std::invalid_argument("not a Kodaira fiber: empty component set");
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != -2) throw std::invalid_argument("not a Kodaira fiber: component with self-intersection != -2");
    for (int j = 0; j < n; ++j)
      if (i != j && m(i, j) < 0)
        throw std::invalid_argument("not a Kodaira fiber: negative off-diagonal intersection");
  }
  if (!connected(m)) throw std::invalid_argument("not a Kodaira fiber: component graph disconnected");
  Mat ker = integer_kernel(m);
  if (ker.cols() != 1)
    throw std::invalid_argument("not a Kodaira fiber: kernel rank " + std::to_string(ker.cols()) + ", expected 1");
  std::vector<Z> mult(n);
  for (int i = 0; i < n; ++i) mult[i] = ker(i, 0);
  if (mult[0] < 0)
    for (auto& v : mult) v = -v;
  Z g = 0;
  for (const Z& v : mult) {
    if (v <= 0) throw std::invalid_argument("not a Kodaira fiber: null generator not strictly positive");
    g = gcd(g, v);
  }
  for (auto& v : mult) v /= g;

  KodairaType kt;
  kt.multiplicities = mult;
  kt.m = n;
  kt.m1 = 0;
  for (const Z& v : mult)
    if (v == 1) ++kt.m1;

  std::map<Z, int> hist;
  for (const Z& v : mult) ++hist[v];

  if (kt.m1 == n) {
    // cycle (or the double-edge pair for n = 2); A~(n-1)
    kt.family = KodairaFamily::A;
    kt.index = n - 1;
    return kt;
  }
  if (hist.size() == 2 && hist.count(1) && hist[1] == 4 && hist.count(2) && hist[2] == n - 4) {
    kt.family = KodairaFamily::D;
    kt.index = n - 1;
    return kt;
  }
  auto hist_is = [&](std::map<Z, int> want) { return hist == want; };
  if (n == 7 && hist_is({{Z(1), 3}, {Z(2), 3}, {Z(3), 1}})) {
    kt.family = KodairaFamily::E;
    kt.index = 6;
    return kt;
  }
  if (n == 8 && hist_is({{Z(1), 2}, {Z(2), 3}, {Z(3), 2}, {Z(4), 1}})) {
    kt.family = KodairaFamily::E;
    kt.index = 7;
    return kt;
  }
  if (n == 9 && hist_is({{Z(1), 1}, {Z(2), 2}, {Z(3), 2}, {Z(4), 2}, {Z(5), 1}, {Z(6), 1}})) {
    kt.family = KodairaFamily::E;
    kt.index = 8;
    return kt;
  }
  throw std::invalid_argument("not a Kodaira fiber: multiplicity pattern unmatched");
}

ZVec fiber_class(const FiberCandidate& fc, const KodairaType& kt) {
  if (fc.components.empty()) throw std::invalid_argument("fiber_class: empty");
  size_t dim = fc.components[0].class_vector.size();
  ZVec phi(dim);
  for (size_t c = 0; c < fc.components.size(); ++c)
    for (size_t i = 0; i < dim; ++i) phi[i] += kt.multiplicities[c] * fc.components[c].class_vector[i];
  return phi;
}

bool even_rank2_feasible(const Z& d) {
  if (d <= 0) return false;
  Z r = d % 4;
  return r == 0 || r == 3;
}

FibrationReport shioda_tate(int rho, const std::vector<KodairaType>& fibers,
                            const Z& known_sections_lower_bound,
                            const std::optional<Z>& det_t_expected) {
  if (rho < 2) throw std::invalid_argument("shioda_tate: rho must be >= 2");
  FibrationReport rep;
  rep.fibers = fibers;
  rep.rho = rho;
  int comp_excess = 0;
  for (const auto& f : fibers) comp_excess += f.m - 1;
  rep.r_p = rho - 2 - comp_excess;
  if (rep.r_p < 0) throw std::invalid_argument("shioda_tate: inconsistent input, negative section rank");
  if (rep.r_p != 0) return rep;
  Z prod_m1 = 1;
  for (const auto& f : fibers) prod_m1 *= f.m1;
  if (det_t_expected) {
    rep.det_t = *det_t_expected;
    if (*det_t_expected <= 0 || prod_m1 % *det_t_expected != 0)
      throw std::invalid_argument("shioda_tate: determinant does not divide the multiplicity product");
    Z nsq = prod_m1 / *det_t_expected;
    Z n = sqrt(nsq);
    if (n * n != nsq)
      throw std::invalid_argument("shioda_tate: section-group order squared is not a perfect square");
    rep.n_p = n;
  } else {
    for (Z n = std::max(Z(1), known_sections_lower_bound); n * n <= prod_m1; ++n) {
      if (prod_m1 % (n * n) != 0) continue;
      Z d = prod_m1 / (n * n);
      if (even_rank2_feasible(d)) rep.constraint_set.emplace_back(d, n);
    }
    if (rep.constraint_set.size() == 1) {
      rep.det_t = rep.constraint_set[0].first;
      rep.n_p = rep.constraint_set[0].second;
    }
  }
  return rep;
}

std::string fibration_type_str(FibrationType t) {
  switch (t) {
    case FibrationType::type1: return "type1";
    case FibrationType::type2: return "type2";
    default: return "undetermined";
  }
}

FibrationType classify_fibration_type(const ZVec& fiber_cls, const CoverLattice& cover,
                                      std::optional<int> reducible_fiber_count) {
  bool any_one = false, any_zero = false, all_zero_or_big = true;
  for (const auto& l : cover.l_classes) {
    Z p = pairing(*cover.s_x4, fiber_cls, l.class_vector);
    if (p < 0) throw std::invalid_argument("classify_fibration_type: fiber class not nef on " + l.label.name);
    if (p == 1) any_one = true;
    if (p == 0) any_zero = true;
    if (p != 0 && p < 2) all_zero_or_big = false;
  }
  if (any_one) return FibrationType::type1;
  if (all_zero_or_big && any_zero) {
    if (reducible_fiber_count && *reducible_fiber_count > 2)
      throw std::invalid_argument("classify_fibration_type: type2 with more than two reducible fibers");
    return FibrationType::type2;
  }
  return FibrationType::undetermined;
}

std::string fiber_dot(const FiberCandidate& fc, const KodairaType& kt) {
  std::ostringstream os;
  os << "graph fiber {\n";
  for (size_t i = 0; i < fc.components.size(); ++i)
    os << "  \"" << fc.components[i].label.name << "\" [xlabel=" << kt.multiplicities[i].get_str() << "];\n";
  for (int i = 0; i < fc.int_matrix.rows(); ++i)
    for (int j = i + 1; j < fc.int_matrix.cols(); ++j)
      if (fc.int_matrix(i, j) > 0)
        os << "  \"" << fc.components[i].label.name << "\" -- \"" << fc.components[j].label.name
           << "\" [label=" << fc.int_matrix(i, j).get_str() << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace x4
