#include "x4/cremona.hpp"

#include <algorithm>

namespace x4 {

namespace {

std::array<Z, 3> normalize3(std::array<Z, 3> c) {
  Z g = gcd(gcd(c[0], c[1]), c[2]);
  if (g == 0) throw std::invalid_argument("projective coordinates all zero");
  g = abs(g);
  for (auto& v : c) v /= g;
  for (const auto& v : c) {
    if (v > 0) break;
    if (v < 0) {
      for (auto& w : c) w = -w;
      break;
    }
  }
  return c;
}

}  // namespace

ProjPoint ProjPoint::make(Z a, Z b, Z d) { return ProjPoint{normalize3({std::move(a), std::move(b), std::move(d)})}; }

ProjLine ProjLine::make(Z a, Z b, Z d) { return ProjLine{normalize3({std::move(a), std::move(b), std::move(d)})}; }

bool ProjLine::contains(const ProjPoint& p) const {
  return c[0] * p.c[0] + c[1] * p.c[1] + c[2] * p.c[2] == 0;
}

namespace {

std::array<Z, 3> cross(const std::array<Z, 3>& a, const std::array<Z, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

ProjPoint line_intersection(const ProjLine& l, const ProjLine& m) {
  auto c = cross(l.c, m.c);
  return ProjPoint::make(c[0], c[1], c[2]);
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  auto c = cross(p.c, q.c);
  return ProjLine::make(c[0], c[1], c[2]);
}

bool is_base_point(const ProjPoint& p) {
  int zeros = 0;
  for (const auto& v : p.c)
    if (v == 0) ++zeros;
  return zeros >= 2;
}

ProjPoint quadratic_map(const ProjPoint& p) {
  if (is_base_point(p)) throw std::invalid_argument("quadratic_map: undefined at base point");
  return ProjPoint::make(p.c[1] * p.c[2], p.c[0] * p.c[2], p.c[0] * p.c[1]);
}

QConfiguration q_configuration() {
  QConfiguration cfg;
  cfg.p = {ProjPoint::make(-1, 1, 1), ProjPoint::make(1, -1, 1), ProjPoint::make(1, 1, -1),
           ProjPoint::make(1, 1, 1)};
  cfg.n_lines = {
      {"N12", ProjLine::make(1, -1, 0)},  // x0 - x1
      {"N13", ProjLine::make(1, 0, -1)},  // x0 - x2
      {"N14", ProjLine::make(0, 1, 1)},   // x1 + x2
      {"N23", ProjLine::make(0, 1, -1)},  // x1 - x2
      {"N24", ProjLine::make(1, 0, 1)},   // x0 + x2
      {"N34", ProjLine::make(1, 1, 0)},   // x0 + x1
  };
  // Diagonal points from the incidence definitions.
  cfg.q = {line_intersection(cfg.n_lines.at("N14"), cfg.n_lines.at("N23")),
           line_intersection(cfg.n_lines.at("N12"), cfg.n_lines.at("N34")),
           line_intersection(cfg.n_lines.at("N13"), cfg.n_lines.at("N24"))};
  cfg.k_lines = {
      {"K12", line_through(cfg.q[0], cfg.q[1])},
      {"K13", line_through(cfg.q[0], cfg.q[2])},
      {"K23", line_through(cfg.q[1], cfg.q[2])},
  };
  return cfg;
}

namespace {

// Five distinct non-base rational points on a line.
std::vector<ProjPoint> sample_line(const ProjLine& l) {
  // Two distinct points spanning the line.
  std::vector<ProjPoint> span;
  for (int a = 0; a <= 2 && span.size() < 2; ++a)
    for (int b = -2; b <= 2 && span.size() < 2; ++b)
      for (int c = -2; c <= 2 && span.size() < 2; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        ProjPoint p = ProjPoint::make(a, b, c);
        if (!l.contains(p)) continue;
        if (std::find(span.begin(), span.end(), p) == span.end()) span.push_back(p);
      }
  if (span.size() < 2) throw std::logic_error("sample_line: could not span line");
  std::vector<ProjPoint> out;
  for (int t = 1; out.size() < 5; ++t) {
    ProjPoint p = ProjPoint::make(span[0].c[0] + t * span[1].c[0], span[0].c[1] + t * span[1].c[1],
                                  span[0].c[2] + t * span[1].c[2]);
    if (is_base_point(p)) continue;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

}  // namespace

QPropertyReport verify_q_properties() {
  QConfiguration cfg = q_configuration();
  QPropertyReport rep{};
  // (i) the base locus is exactly the three diagonal points.
  std::vector<ProjPoint> coord_pts{ProjPoint::make(1, 0, 0), ProjPoint::make(0, 1, 0), ProjPoint::make(0, 0, 1)};
  rep.base_points_ok = true;
  for (const auto& q : cfg.q) {
    if (!is_base_point(q)) rep.base_points_ok = false;
    if (std::find(coord_pts.begin(), coord_pts.end(), q) == coord_pts.end()) rep.base_points_ok = false;
  }
  for (const auto& cp : coord_pts) {
    bool found = std::find(cfg.q.begin(), cfg.q.end(), cp) != cfg.q.end();
    if (!found) rep.base_points_ok = false;
  }
  // (ii) each K line collapses to the opposite diagonal point.
  rep.k_lines_collapse_ok = true;
  const std::array<std::pair<std::string, int>, 3> collapse{{{"K12", 2}, {"K13", 1}, {"K23", 0}}};
  for (const auto& [name, target] : collapse) {
    for (const ProjPoint& s : sample_line(cfg.k_lines.at(name)))
      if (!(quadratic_map(s) == cfg.q[target])) rep.k_lines_collapse_ok = false;
  }
  // (iii) each N line maps into itself, and every p_i is fixed.
  rep.n_lines_stable_ok = true;
  for (const auto& [name, line] : cfg.n_lines)
    for (const ProjPoint& s : sample_line(line))
      if (!line.contains(quadratic_map(s))) rep.n_lines_stable_ok = false;
  rep.fixed_points_ok = true;
  for (const auto& p : cfg.p)
    if (!(quadratic_map(p) == p)) rep.fixed_points_ok = false;
  return rep;
}

Isometry build_fq_star(const Configuration& y4) {
  int n = 20;
  const auto& pps = all_pair_pairs();
  auto gidx = [&](const PairPair& g) {
    auto it = std::find(pps.begin(), pps.end(), g);
    return 5 + static_cast<int>(it - pps.begin());
  };
  int ga = gidx({{Pair{1, 4}, Pair{2, 3}}});
  int gb = gidx({{Pair{1, 2}, Pair{3, 4}}});
  int gc = gidx({{Pair{1, 3}, Pair{2, 4}}});
  Mat m = Mat::identity(n);
  auto set_col = [&](int col, std::initializer_list<std::pair<int, int>> entries) {
    for (int i = 0; i < n; ++i) m(i, col) = 0;
    for (const auto& [row, val] : entries) m(row, col) = val;
  };
  set_col(0, {{0, 2}, {ga, -1}, {gb, -1}, {gc, -1}});
  set_col(ga, {{0, 1}, {gb, -1}, {gc, -1}});
  set_col(gb, {{0, 1}, {ga, -1}, {gc, -1}});
  set_col(gc, {{0, 1}, {ga, -1}, {gb, -1}});
  Isometry iso(m, y4.lattice.get());
  if (m * m != Mat::identity(n)) throw std::logic_error("build_fq_star: not an involution");
  for (const auto& r : y4.curves)
    if (r.label.kind == CurveKind::strict_F)
      if (m * r.class_vector != r.class_vector)
        throw std::logic_error("build_fq_star: does not fix " + r.label.name);
  if (m * y4.canonical_class != y4.canonical_class)
    throw std::logic_error("build_fq_star: canonical class not fixed");
  return iso;
}

ReflectionData certify_reflection(const Isometry& fq, const Configuration& y4, const CoverLattice& cover) {
  int n = 20;
  ReflectionData rd;
  rd.fq_matrix = fq.matrix();
  FixedAntiResult fa = fixed_and_anti_sublattice(fq);
  if (fa.fixed.cols() != 19 || fa.anti.cols() != 1)
    throw std::logic_error("certify_reflection: fixed/anti ranks are not 19/1");
  rd.e_y.resize(n);
  for (int i = 0; i < n; ++i) rd.e_y[i] = fa.anti(i, 0);
  // sign convention: leading nonzero coordinate positive
  for (int i = 0; i < n; ++i) {
    if (rd.e_y[i] == 0) continue;
    if (rd.e_y[i] < 0)
      for (auto& v : rd.e_y) v = -v;
    break;
  }
  rd.e_y_square = pairing(*y4.lattice, rd.e_y, rd.e_y);
  if (rd.e_y_square >= 0) throw std::logic_error("certify_reflection: anti-invariant root has nonnegative square");
  Isometry refl = reflection_in_vector(LatticeVector{rd.e_y, y4.lattice.get()});
  if (refl.matrix() != fq.matrix())
    throw std::logic_error("certify_reflection: does not equal the reflection in the anti-invariant root");

  // Lift: transport the action through the numerator representation.
  rd.lift_matrix = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    ZVec num(n);
    for (int i = 0; i < n; ++i) num[i] = cover.basis_numerators(j, i);
    ZVec img = fq.matrix() * num;
    ZVec c = cover.coords_of_numerator(img);
    for (int i = 0; i < n; ++i) rd.lift_matrix(i, j) = c[i];
  }
  Isometry lift(rd.lift_matrix, cover.s_x4.get());
  if (rd.lift_matrix * rd.lift_matrix != Mat::identity(n))
    throw std::logic_error("certify_reflection: lift is not an involution");
  // Intertwining with the pullback.
  for (int j = 0; j < n; ++j) {
    ZVec col(n);
    for (int i = 0; i < n; ++i) col[i] = cover.pullback_matrix(i, j);
    ZVec lhs = rd.lift_matrix * col;
    ZVec fq_ej(n);
    for (int i = 0; i < n; ++i) fq_ej[i] = 2 * fq.matrix()(i, j);
    ZVec rhs = cover.coords_of_numerator(fq_ej);
    if (lhs != rhs) throw std::logic_error("certify_reflection: lift does not intertwine the pullback");
  }
  ZVec e_num(n);
  for (int i = 0; i < n; ++i) e_num[i] = 2 * rd.e_y[i];
  rd.e_x = cover.coords_of_numerator(e_num);
  FixedAntiResult lfa = fixed_and_anti_sublattice(lift);
  if (lfa.anti.cols() != 1) throw std::logic_error("certify_reflection: lift anti-invariant rank != 1");
  ZVec anti(n);
  for (int i = 0; i < n; ++i) anti[i] = lfa.anti(i, 0);
  ZVec neg(n);
  for (int i = 0; i < n; ++i) neg[i] = -anti[i];
  if (anti != rd.e_x && neg != rd.e_x)
    throw std::logic_error("certify_reflection: anti-invariant is not the pulled-back root");
  rd.e_x_square = pairing(*cover.s_x4, rd.e_x, rd.e_x);
  rd.e_x_divisibility = divisibility(*cover.s_x4, rd.e_x);
  rd.disc_action = discriminant_action(lift);
  rd.fixed_lattice_det = restricted_det(*cover.s_x4, lfa.fixed);
  return rd;
}

ReflectionFingerprint reflection_fingerprint(const CoverLattice& cover, const ZVec& root_coords) {
  Isometry r = reflection_in_vector(LatticeVector{root_coords, cover.s_x4.get()});
  FixedAntiResult fa = fixed_and_anti_sublattice(r);
  ReflectionFingerprint fp;
  fp.square = pairing(*cover.s_x4, root_coords, root_coords);
  fp.div = divisibility(*cover.s_x4, root_coords);
  fp.disc_action = discriminant_action(r).kind_str();
  fp.fixed_det = restricted_det(*cover.s_x4, fa.fixed);
  return fp;
}

ConjugacyRecord conjugacy_invariants(const ReflectionData& rd, const CoverLattice& cover) {
  ConjugacyRecord rec;
  rec.lift = ReflectionFingerprint{rd.e_x_square, rd.e_x_divisibility, rd.disc_action.kind_str(),
                                   rd.fixed_lattice_det};
  rec.root_m2 = reflection_fingerprint(cover, cover.l_curve("L(12)").class_vector);
  rec.distinct = !(rec.lift == rec.root_m2);
  return rec;
}

}  // namespace x4
