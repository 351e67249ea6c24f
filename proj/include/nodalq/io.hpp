#pragma once

// JSON encodings of surfaces, point lists, operator families, cycle
// configurations and verdict records. Arbitrary-precision numbers travel as
// decimal strings ("p" or "p/q").

#include "nodalq/icstalk.hpp"
#include "nodalq/kummer.hpp"
#include "nodalq/severi.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace nodalq::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

json to_json(const HomogPoly& f);
HomogPoly poly_from_json(const json& j);

json to_json(const ProjPointQ& p);
ProjPointQ point_from_json(const json& j);
json points_to_json(const std::vector<ProjPointQ>& points);
std::vector<ProjPointQ> points_from_json(const json& j);

json to_json(const SearchConfig& c);
/// Missing keys keep their defaults.
SearchConfig search_config_from_json(const json& j);

json matrix_to_json(const MatrixXq& m);
MatrixXq matrix_from_json(const json& j, Index rows, Index cols);
json vector_to_json(const VectorXq& v);
VectorXq vector_from_json(const json& j, Index size);

json to_json(const OperatorFamily& f);
OperatorFamily family_from_json(const json& j);

json to_json(const CycleConfiguration& c);
CycleConfiguration configuration_from_json(const json& j);

json to_json(const SingularPointReport& r);
SingularPointReport report_from_json(const json& j);
json to_json(const SingularCandidate& c);
json to_json(const SeveriReport& r);
json to_json(const StalkCohomology& h);
json to_json(const std::array<int, 5>& betti);
json to_json(const SigmaSplitting& s);

/// Reads and parses a JSON file; ParseError on I/O or syntax errors.
json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace nodalq::io
