#pragma once

#include "fbvp/band.hpp"
#include "fbvp/oracle.hpp"
#include "fbvp/problem.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace fbvp {

using Json = nlohmann::ordered_json;

/// Problem-file content that does not match the schema. path() is a JSON
/// path such as "$.conditions[1].value.l".
class SchemaError : public ValidationError {
public:
    SchemaError(const std::string& path, const std::string& message);
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class IoError : public Error {
public:
    using Error::Error;
};

struct OutputSettings {
    std::size_t points = 101;
    std::vector<double> alphas{0.0, 0.5, 1.0};

    friend bool operator==(const OutputSettings&, const OutputSettings&) = default;
};

struct ProblemFile {
    FuzzyBvp problem;
    OutputSettings output;
};

Json fuzzy_to_json(const FuzzyNumber& u);
FuzzyNumber fuzzy_from_json(const Json& j, const std::string& path = "$");

/// Parses and validates a problem document. `steps` sets the integration grid.
ProblemFile problem_from_json(const Json& j, std::size_t steps = kDefaultSteps);
Json problem_to_json(const ProblemFile& file);

ProblemFile load_problem(const std::string& path, std::size_t steps = kDefaultSteps);

/// The two worked examples: 1 is x'' - 3x' + 2x = 4t - 6 on [0, 1], 2 is
/// x'' + 16x = 47 - 8t^2 on [0, 2]. Throws DomainError for other values.
ProblemFile builtin_example(int which);

/// Canonical text of a problem document (two-space indent, trailing newline).
std::string dump_problem(const ProblemFile& file);

/// 12 significant digits; negative zero prints as 0.
std::string format_number(double value);

/// Columns: t, then lower_<alpha>, upper_<alpha> for each level in ascending order.
void write_band_csv(std::ostream& out, const SolutionBand& band);
Json band_to_json(const SolutionBand& band);

Json report_to_json(const oracle::EnvelopeReport& report, double tolerance, int samples, int mesh);

}  // namespace fbvp
