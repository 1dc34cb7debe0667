#ifndef PRERIESZ_REPORT_HPP
#define PRERIESZ_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "preriesz/cover.hpp"
#include "preriesz/decision.hpp"
#include "preriesz/model.hpp"

namespace preriesz {

using Json = nlohmann::json;

// Model file schema: "dimension", exactly one of "cone_rays" |
// "cone_inequalities" | "subspace" {"ambient","basis"}, optional "name".
// All vector entries are rational strings "p/q" (or "p").  Unknown fields
// are rejected.
Json model_spec_to_json(const ModelSpec& spec);
ModelSpec model_spec_from_json(const Json& j);

// The canonical echo of a built model (exact cone representations; the
// subspace description is carried verbatim as provenance).
Json model_to_json(const PreRieszModel& model);

Json rational_vector_to_json(const QVector& v);
QVector rational_vector_from_json(const Json& j);
Json system_to_json(const LinSystem& sys);
LinSystem system_from_json(const Json& j);

Json decision_to_json(const DecisionReport& report, bool with_timings);

struct AnalysisReport {
    PreRieszModel model;
    ModelSpec input;
    FunctionalRepresentation rep;
    CoverVerification cover;
    std::vector<DecisionReport> results;
    std::vector<Json> suite_violations;
};

Json analysis_to_json(const AnalysisReport& report, bool with_timings);

std::string canonical_dump(const Json& j);

// Atomic file write (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& contents);

} // namespace preriesz

#endif
