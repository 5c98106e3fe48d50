#pragma once

#include "fbvp/oracle.hpp"
#include "fbvp/problem.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fbvp::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kNonUniqueCrispSolution = 2,
    kVerificationFailure = 3,
};

struct SolveOptions {
    std::string problem_path;
    std::optional<std::vector<double>> alphas;  ///< overrides output.alphas
    std::optional<std::size_t> points;          ///< overrides output.points
    std::size_t steps = kDefaultSteps;
    std::string out_path;  ///< empty: write to `out`
    std::string format = "csv";
};

struct VerifyOptions {
    std::string problem_path;
    double alpha = 0.0;
    int samples = 2;
    int mesh = oracle::kDefaultInteriorNodes;
    double tolerance = 1e-4;
    std::optional<std::size_t> points;
    std::size_t steps = kDefaultSteps;
    std::string out_path;
};

/// Each command writes its result to `out` (or the file named by out_path)
/// and diagnostics to `err`, and returns the process exit code.
int run_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int run_example(int which, std::ostream& out, std::ostream& err);

}  // namespace fbvp::cli
