#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "proxal/checker.hpp"

namespace proxal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name). jobs_env is the value
/// of PROXAL_JOBS, or null when unset. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* jobs_env);

/// "n=3;relations=double-complement,intersection-complement;topologies=all;search=2;samples=50".
/// n=K means sizes 1..K; n=2,3 lists sizes. Throws InputError.
SuiteConfig parse_sweep(const std::string& text);

}  // namespace proxal::cli
