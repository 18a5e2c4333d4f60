#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slpedit::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 verification mismatch, 2 input or validation error, 3 numeric guard.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Column order of `bench` output.
inline constexpr const char* kBenchHeader =
    "algo,N_a,N_b,n_a,n_b,x,y,distance,tables_built,dp_cells,smawk_queries,wall_millis";

}  // namespace slpedit::cli
