#pragma once

#include <string>

#include "json.hpp"

#include "contentlab/harness.hpp"

namespace contentlab {

/// Schema tag carried by every machine-readable record.
inline constexpr const char* kReportSchema = "contentlab.report/1";

/// One self-contained record:
///   {schema, descriptor{base,alg}, sizes{...}, verdicts{...}, witnesses{...},
///    timings{...}, consistent, inconsistencies[...], error}
/// Timings are the only nondeterministic part; pass with_timings=false to
/// compare records byte for byte.
nlohmann::ordered_json report_to_json(const PropertyReport& r, bool with_timings = true);
std::string report_table(const PropertyReport& r);

nlohmann::ordered_json summary_to_json(const SuiteSummary& s, bool with_timings = true);
nlohmann::ordered_json example1_to_json(const Example1Report& r);
std::string example1_table(const Example1Report& r);

}  // namespace contentlab
