#pragma once

#include <iosfwd>
#include <vector>

#include "ubc/region.hpp"

namespace ubc::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failed or internal error
inline constexpr int kExitUsage = 2;    // bad flag or parameter value

/// Column order of the trace CSV.
inline constexpr const char* kTraceHeader = "alpha,d1,d2_uncoded,d2_converse,a1_star,a2_star,optimal_flag";

/// Writes the header and one row per point. Distortions are multiplied by
/// (scale1, scale2) to undo a variance normalization; absent converse
/// values are empty fields.
void write_trace_csv(std::ostream& out, const std::vector<BoundaryPoint>& trace, double scale1 = 1.0,
                     double scale2 = 1.0);

/// Entry point shared by the binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ubc::cli
