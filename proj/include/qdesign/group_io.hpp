#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "qdesign/clifford.hpp"
#include "qdesign/design.hpp"
#include "qdesign/twirl.hpp"
#include "qdesign/weyl_heisenberg.hpp"

namespace qdesign {

nlohmann::ordered_json wh_index_to_json(const WHIndex& a);
WHIndex wh_index_from_json(const nlohmann::json& j);

/// Schema: {"dims": [int, ...], "label": str,
///          "generators": [[[re, im], ...], ...]} with one flat row-major
/// entry list per generator. Entry components may be JSON numbers or
/// strings holding decimal literals.
GroupSpec group_spec_from_json(const nlohmann::json& j, double unitarity_tol = kEqualityTol);
nlohmann::ordered_json group_spec_to_json(const GroupSpec& spec);

struct ResolvedGroup {
  GroupSpec spec;
  GroupKind kind;
};

/// Accepts the named forms "clifford:d", "clifford:d1xd2x...", "wh:d", or a
/// path to a JSON spec file.
ResolvedGroup resolve_group(const std::string& name_or_path,
                            double unitarity_tol = kEqualityTol);

nlohmann::ordered_json design_report_to_json(const DesignReport& report);
std::string design_report_to_csv(const DesignReport& report);
std::string design_report_to_text(const DesignReport& report);

/// Choi file format: a single JSON header line {"d": d,
/// "normalization": "trace=d"} followed by the matrix dump.
void write_choi(std::ostream& out, const ChoiMatrix& c);
ChoiMatrix read_choi(std::istream& in);

}  // namespace qdesign
