#pragma once

#include <json.hpp>

#include "hyperchord/checkers.hpp"

namespace hyperchord {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

// All rationals serialize as canonical "num" / "num/den" strings; reports
// never contain floating-point lengths or distances.
nlohmann::json rat_json(const Rat& value);

nlohmann::json result_json(const FourPointResult& r, const MetricGraph& g);
nlohmann::json result_json(const RipsEstimate& r);
nlohmann::json result_json(const Verdict& v, const MetricGraph& g);
nlohmann::json result_json(const TriangleVerdict& v);
nlohmann::json result_json(const ImplicationReport& r);

// Report envelope: versions, command echo, graph digest, result, budgets,
// wall time.
nlohmann::json make_report(const MetricGraph& g, const std::string& command,
                           nlohmann::json result, nlohmann::json budgets,
                           long wall_time_ms);

}  // namespace hyperchord
