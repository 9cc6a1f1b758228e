#pragma once

// pbwtool front end. Exit codes, uniform across subcommands:
//   0  Match / Yes / Witness / Pass / valid
//   1  Defect / No / Refuted / Fail / invalid / no obstruction
//   2  Unknown / OutOfRange
//   3  input error (parse, index, arity, shape)
//   4  internal error

#include <iosfwd>
#include <string>
#include <vector>

namespace pbw {

inline constexpr const char* kToolName = "pbwtool";
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command line (program name excluded), writing the report to out
/// and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbw
