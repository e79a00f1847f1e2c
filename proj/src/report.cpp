#include "x4/report.hpp"

namespace x4 {

json json_int(const Z& v) {
  static const Z limit = Z(1) << 53;
  if (abs(v) < limit) return json(v.get_si());
  return json(v.get_str());
}

json json_vec(const ZVec& v) {
  json a = json::array();
  for (const Z& x : v) a.push_back(json_int(x));
  return a;
}

json json_mat(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(json_int(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json curve_json(const CurveRecord& r) {
  return json{{"label", r.label.name},
              {"class", json_vec(r.class_vector)},
              {"self_intersection", json_int(r.self_int)},
              {"taxonomy", taxonomy_str(r.taxonomy)}};
}

json configuration_json(const Configuration& c) {
  json curves = json::array();
  for (const auto& r : c.curves) curves.push_back(curve_json(r));
  return json{{"basis", c.lattice->labels()},
              {"canonical_class", json_vec(c.canonical_class)},
              {"curves", curves},
              {"gram", json_mat(c.lattice->gram())}};
}

json cover_json(const CoverLattice& cl) {
  DiscriminantGroup dg = discriminant_group(*cl.s_x4);
  json facs = json::array();
  for (const Z& f : dg.invariant_factors) facs.push_back(json_int(f));
  json l = json::array(), lp = json::array();
  for (const auto& r : cl.l_classes) l.push_back(curve_json(r));
  for (const auto& r : cl.lp_classes) lp.push_back(curve_json(r));
  Signature sig = signature_of(cl.s_x4->gram());
  return json{{"basis_numerators", json_mat(cl.basis_numerators)},
              {"determinant", json_int(cl.s_x4->det())},
              {"discriminant_group", facs},
              {"even", cl.s_x4->is_even()},
              {"gram", json_mat(cl.s_x4->gram())},
              {"index_over_pullback", json_int(cl.index_over_pullback)},
              {"l_classes", l},
              {"lp_classes", lp},
              {"pullback_matrix", json_mat(cl.pullback_matrix)},
              {"signature", json::array({sig.positive, sig.negative})}};
}

json kodaira_json(const KodairaType& kt) {
  json mult = json::array();
  for (const Z& m : kt.multiplicities) mult.push_back(json_int(m));
  return json{{"m", kt.m}, {"m1", kt.m1}, {"multiplicities", mult}, {"type", kt.name()}};
}

json fibration_report_json(const FibrationReport& rep) {
  json fibers = json::array();
  for (const auto& f : rep.fibers) fibers.push_back(kodaira_json(f));
  json j{{"fibers", fibers}, {"fibration_type", rep.fibration_type}, {"r_p", rep.r_p}, {"rho", rep.rho}};
  j["det_t"] = rep.det_t ? json_int(*rep.det_t) : json();
  j["n_p"] = rep.n_p ? json_int(*rep.n_p) : json();
  json cs = json::array();
  for (const auto& [d, n] : rep.constraint_set) cs.push_back(json::array({json_int(d), json_int(n)}));
  j["constraint_set"] = cs;
  return j;
}

json reflection_json(const ReflectionData& rd, const ConjugacyRecord& rec) {
  auto fp_json = [](const ReflectionFingerprint& fp) {
    return json{{"disc_action", fp.disc_action},
                {"divisibility", json_int(fp.div)},
                {"fixed_lattice_det", json_int(fp.fixed_det)},
                {"square", json_int(fp.square)}};
  };
  return json{{"anti_root_base", json_vec(rd.e_y)},
              {"anti_root_cover", json_vec(rd.e_x)},
              {"disc_action", rd.disc_action.kind_str()},
              {"distinct_from_minus2_class", rec.distinct},
              {"fingerprint_lift", fp_json(rec.lift)},
              {"fingerprint_minus2_root", fp_json(rec.root_m2)},
              {"fq_matrix", json_mat(rd.fq_matrix)},
              {"lift_matrix", json_mat(rd.lift_matrix)}};
}

json group_json(const PermutationGroup& g) {
  json gens = json::array();
  for (const Perm& p : g.generators()) gens.push_back(perm_cycles(p));
  return json{{"degree", g.degree()}, {"generators", gens}, {"order", json_int(g.order())}};
}

bool RunReport::has_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return true;
  return false;
}

json RunReport::to_json() const {
  json arr = json::array();
  for (const auto& c : checks) {
    const char* st = c.status == CheckStatus::pass ? "pass" : c.status == CheckStatus::fail ? "fail" : "flagged";
    arr.push_back(json{{"id", c.id}, {"payload", c.payload}, {"status", st}});
  }
  return json{{"checks", arr}, {"version", version}};
}

std::string dump_sorted(const json& j) { return j.dump(2) + "\n"; }

}  // namespace x4
