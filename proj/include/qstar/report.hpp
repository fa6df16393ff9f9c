#pragma once

// Text serialization of verification reports. Numbers use the shortest
// representation that round-trips, so output is byte-stable.

#include <string>

#include "qstar/search.hpp"
#include "qstar/series.hpp"

namespace qstar {

/// Shortest round-trip decimal form ("4", "13.333333333333334", "1e-09").
std::string format_double(double v);
/// "re" for real values, otherwise "re+imi" / "re-imi".
std::string format_complex(cplx v);

/// Header `functional,q,case,bound,achieved,gap,verdict` and one row per item.
std::string report_to_csv(const VerificationReport& report);
/// Mirrors VerificationReport and ReportItem field names.
std::string report_to_json(const VerificationReport& report);

}  // namespace qstar
