// Acceptance gate: one line per criterion. Criterion 9 is expected to FAIL:
// the lifted reflection's discriminant action is computably a coset swap, not
// trivial, and the suite reports that honestly rather than masking it.
#include <iostream>
#include <map>
#include <string>

#include "x4/workbench.hpp"

int main() {
  x4::WorkbenchOptions opt;
  opt.data_dir = X4_DATA_DIR;
  x4::RunReport rep = x4::run_all_checks(opt);

  std::map<std::string, const x4::CheckEntry*> by_id;
  for (const auto& c : rep.checks) by_id[c.id] = &c;

  struct Criterion {
    int number;
    std::string check_id;
    std::string text;
  };
  const std::vector<Criterion> criteria{
      {1, "petersen_figure", "ten (-1)-curves, 3-regular incidence, automorphism order 120"},
      {2, "extended_petersen_figure", "orthogonal (-4)-classes, 30 incidences, anticanonical identity"},
      {3, "algebraic_lattice", "even rank 20, |det| 4, signature (1,19), disc Z/2+Z/2, index 2^9"},
      {4, "fig3_fibration", "three D~6 fibers, r_p = 0, unique det_t = 4 with n_p = 4"},
      {5, "fig4_fibration", "two A~9 fibers, equal classes, type 2, n_p = 5"},
      {6, "fig5_fibration", "A~17 + A~1, n_p = 3, type 2; companion fibration type 1"},
      {7, "negative_class_taxonomy", "bound-8 classes only b/f1/f2, b-set = strict transforms"},
      {8, "symmetry_theorem", "graph restriction = pair action, all 120 isometries induced"},
      {9, "cremona_reflection", "involutive isometry, root lift, trivial discriminant action"},
      {10, "q_arithmetic", "base points, collapses, stable lines, fixed points, involution"},
      {11, "", "flagged entries carry the two recorded discrepancies"},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    bool ok;
    std::string note;
    if (cr.number == 11) {
      const auto* lin = by_id.count("flag_linear_equivalence") ? by_id["flag_linear_equivalence"] : nullptr;
      const auto* qc = by_id.count("flag_q_coordinates") ? by_id["flag_q_coordinates"] : nullptr;
      ok = lin && qc && lin->status == x4::CheckStatus::flagged && qc->status == x4::CheckStatus::flagged &&
           lin->payload.contains("literal_statement_holds") && qc->payload.contains("computed_from_incidence");
    } else {
      const auto* c = by_id.count(cr.check_id) ? by_id[cr.check_id] : nullptr;
      ok = c && c->status == x4::CheckStatus::pass;
      if (!ok && c && c->payload.contains("diagnostic")) note = c->payload["diagnostic"].get<std::string>();
    }
    if (!ok) ++failures;
    std::cout << "criterion " << cr.number << ": " << (ok ? "PASS" : "FAIL") << " - " << cr.text;
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) failing")
            << "\n";
  return failures == 0 ? 0 : 1;
}
