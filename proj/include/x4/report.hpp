#pragma once

#include <json.hpp>

#include "x4/blowup.hpp"
#include "x4/cover.hpp"
#include "x4/cremona.hpp"
#include "x4/kodaira.hpp"
#include "x4/symmetry.hpp"

namespace x4 {

using json = nlohmann::json;

// Decimal-string encoding beyond the double-exact integer range.
json json_int(const Z& v);
json json_vec(const ZVec& v);
json json_mat(const Mat& m);

json curve_json(const CurveRecord& r);
json configuration_json(const Configuration& c);
json cover_json(const CoverLattice& cl);
json kodaira_json(const KodairaType& kt);
json fibration_report_json(const FibrationReport& rep);
json reflection_json(const ReflectionData& rd, const ConjugacyRecord& rec);
json group_json(const PermutationGroup& g);

enum class CheckStatus { pass, fail, flagged };

struct CheckEntry {
  std::string id;
  CheckStatus status;
  json payload;
};

struct RunReport {
  std::vector<CheckEntry> checks;
  std::string version = "0.1.0";

  bool has_failure() const;
  json to_json() const;
};

std::string dump_sorted(const json& j);

}  // namespace x4
