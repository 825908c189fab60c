#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polyft/audit.hpp"
#include "polyft/oracle.hpp"
#include "polyft/scenarios.hpp"

namespace polyft {

using Json = nlohmann::ordered_json;

// 12 significant digits, -0 printed as 0.
double round12(double x);

Json to_json(const Vector& v);
Json to_json(const std::vector<Vector>& points);
Json to_json(const Functional& f);
Json to_json(const PolytopeBall& ball);
Json to_json(const FTCertificate& cert);
Json to_json(const Verification& v);
Json to_json(const FTSet& set);
Json to_json(const PolytopeBall& ball, const ConsistentFaceSet& set);
Json to_json(const UniquenessReport& report);
Json to_json(const ConfirmationReport& report);
Json to_json(const NonUniqueEvidence& evidence);
Json to_json(const DodecahedronSection& s);
Json to_json(const CaseReport& report);

// Throw InvalidInput on malformed data.
Vector vector_from_json(const Json& j, int dim = -1);
std::vector<Vector> points_from_json(const Json& j, int dim = -1);

// A builtin name, or an object {"vertices": [[...], ...]}.
PolytopeBall ball_from_json(const Json& j, double tol);

// {"ball": ..., "sites": [[...], ...]}
Instance instance_from_json(const Json& j, double tol);

Json parse_json(const std::string& text);

// Indented, trailing newline.
std::string dump(const Json& j);

}  // namespace polyft
