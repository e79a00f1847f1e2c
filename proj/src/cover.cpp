#include "x4/cover.hpp"

namespace x4 {

const CurveRecord& CoverLattice::l_curve(const std::string& name) const {
  for (const auto& c : l_classes)
    if (c.label.name == name) return c;
  for (const auto& c : lp_classes)
    if (c.label.name == name) return c;
  throw std::invalid_argument("unknown cover curve label: " + name);
}

bool CoverLattice::has_l_curve(const std::string& name) const {
  for (const auto& c : l_classes)
    if (c.label.name == name) return true;
  for (const auto& c : lp_classes)
    if (c.label.name == name) return true;
  return false;
}

ZVec CoverLattice::coords_of_numerator(const ZVec& numerator) const {
  int n = basis_numerators.rows();
  // Solve c^T * basis_numerators = numerator exactly.
  std::vector<Q> b(n), x;
  for (int i = 0; i < n; ++i) b[i] = Q(numerator[i]);
  if (!solve_rational(basis_numerators.transpose(), b, x))
    throw std::invalid_argument("coords_of_numerator: singular basis");
  ZVec c(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].get_den() != 1)
      throw std::invalid_argument("coords_of_numerator: class not in the lattice");
    c[i] = x[i].get_num();
  }
  return c;
}

ZVec CoverLattice::numerator_of(const ZVec& coords) const {
  int n = basis_numerators.rows();
  ZVec num(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) num[j] += coords[i] * basis_numerators(i, j);
  return num;
}

CoverLattice pullback_lattice(const Configuration& y4) {
  if (y4.lattice->rank() != 20) throw std::invalid_argument("pullback_lattice: expects the rank-20 configuration");
  int n = 20;
  // Ambient rational span: base lattice with the form doubled (pullback scaling).
  Mat doubled(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) doubled(i, j) = 2 * y4.lattice->gram()(i, j);
  auto ambient = std::make_shared<IntLattice>(doubled);
  RationalSpan span;
  span.ambient = ambient.get();
  span.denominator = 2;
  for (int i = 0; i < n; ++i) {
    ZVec v(n);
    v[i] = 2;
    span.numerators.push_back(v);
  }
  for (const auto& r : y4.curves)
    if (r.label.kind == CurveKind::strict_F) span.numerators.push_back(r.class_vector);
  SaturationResult sat = saturate_overlattice(span);
  if (!sat.even) throw std::logic_error("pullback_lattice: constructed lattice is not even");

  CoverLattice cl;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  cl.s_x4 = std::make_shared<IntLattice>(sat.lattice.gram(), labels);
  cl.basis_numerators = sat.basis_numerators;
  cl.index_over_pullback = sat.index_over_ambient;
  cl.pullback_matrix = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    ZVec num(n);
    num[j] = 2;
    ZVec c = cl.coords_of_numerator(num);
    for (int i = 0; i < n; ++i) cl.pullback_matrix(i, j) = c[i];
  }
  for (const auto& r : y4.curves) {
    if (r.label.kind == CurveKind::strict_F) {
      CurveRecord lr;
      lr.label = {CurveKind::derived, "L" + r.label.name.substr(1)};
      lr.class_vector = cl.coords_of_numerator(r.class_vector);
      lr.self_int = pairing(*cl.s_x4, lr.class_vector, lr.class_vector);
      lr.taxonomy = Taxonomy::r;
      cl.l_classes.push_back(std::move(lr));
    } else if (r.label.kind == CurveKind::blowup_G) {
      ZVec num(n);
      for (int i = 0; i < n; ++i) num[i] = 2 * r.class_vector[i];
      CurveRecord lr;
      lr.label = {CurveKind::derived, "L" + r.label.name.substr(1)};
      lr.class_vector = cl.coords_of_numerator(num);
      lr.self_int = pairing(*cl.s_x4, lr.class_vector, lr.class_vector);
      lr.taxonomy = Taxonomy::l2;
      cl.lp_classes.push_back(std::move(lr));
    }
  }
  return cl;
}

CurveRecord classify_cover_curve(const CoverLattice& cl, const ZVec& y4_class, Taxonomy tag,
                                 const std::string& name) {
  ZVec num(y4_class.size());
  Taxonomy out_tag;
  switch (tag) {
    case Taxonomy::b:
      num = y4_class;  // half-pullback: numerator is the class itself
      out_tag = Taxonomy::r;
      break;
    case Taxonomy::f1:
    case Taxonomy::f2:
      for (size_t i = 0; i < y4_class.size(); ++i) num[i] = 2 * y4_class[i];
      out_tag = tag == Taxonomy::f1 ? Taxonomy::l1 : Taxonomy::l2;
      break;
    default:
      throw std::invalid_argument("classify_cover_curve: taxonomy must be b, f1 or f2");
  }
  CurveRecord r;
  r.label = {CurveKind::derived, name};
  r.class_vector = cl.coords_of_numerator(num);
  r.self_int = pairing(*cl.s_x4, r.class_vector, r.class_vector);
  r.taxonomy = out_tag;
  return r;
}

TranscendentalReport transcendental_invariants(const CoverLattice& cl) {
  TranscendentalReport rep;
  rep.disc_s = abs(cl.s_x4->det());
  rep.disc_group = discriminant_group(*cl.s_x4);
  if (rep.disc_s != 4)
    throw std::logic_error("transcendental_invariants: unexpected discriminant " + rep.disc_s.get_str());
  // The unique even positive-definite rank-2 form of determinant 4.
  rep.t_gram = Mat(2, 2);
  rep.t_gram(0, 0) = 2;
  rep.t_gram(1, 1) = 2;
  return rep;
}

}  // namespace x4
