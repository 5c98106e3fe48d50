#include "fbvp/commands.hpp"

#include "fbvp/fuzzy_solution.hpp"
#include "fbvp/problem_io.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace fbvp::cli {

namespace {

// Maps library errors onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const NonUniqueCrispSolution& e) {
        err << "error: NonUniqueCrispSolution: " << e.what() << "\n";
        return kNonUniqueCrispSolution;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw IoError("cannot write '" + out_path + "'");
    file << text;
    if (!file) throw IoError("failed writing '" + out_path + "'");
}

}  // namespace

int run_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (options.format != "csv" && options.format != "json") {
            throw ValidationError("unknown format '" + options.format + "' (expected csv or json)");
        }
        const ProblemFile file = load_problem(options.problem_path, options.steps);
        const auto alphas = normalize_alphas(options.alphas.value_or(file.output.alphas));
        const TimeGrid output(file.problem.grid.t0(), file.problem.grid.t_end(),
                              options.points.value_or(file.output.points));

        const FuzzySolution solution = solve(file.problem);
        const SolutionBand result = band(solution, alphas, output);

        std::ostringstream text;
        if (options.format == "json") {
            text << band_to_json(result).dump(2) << "\n";
        } else {
            write_band_csv(text, result);
        }
        emit(text.str(), options.out_path, out);
        return static_cast<int>(kSuccess);
    });
}

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ProblemFile file = load_problem(options.problem_path, options.steps);
        const auto& problem = file.problem;
        if (problem.ode.order() != 2) {
            throw oracle::UnsupportedForVerify("verify supports order-2 problems only (got order " +
                                               std::to_string(problem.ode.order()) + ")");
        }
        const TimeGrid output(problem.grid.t0(), problem.grid.t_end(),
                              options.points.value_or(file.output.points));
        const std::vector<double> level{options.alpha};

        const FuzzySolution solution = solve(problem);
        const SolutionBand formula = band(solution, level, output);
        const oracle::FdMesh mesh(problem.grid.t0(), problem.grid.t_end(), options.mesh);
        const auto envelope = oracle::envelope(problem, options.alpha, options.samples, mesh, output);
        const auto report = oracle::compare(formula, envelope);

        emit(report_to_json(report, options.tolerance, options.samples, options.mesh).dump(2) + "\n",
             options.out_path, out);
        if (report.max_deviation > options.tolerance) {
            err << "verification failed: max deviation " << format_number(report.max_deviation)
                << " exceeds tolerance " << format_number(options.tolerance) << "\n";
            return static_cast<int>(kVerificationFailure);
        }
        return static_cast<int>(kSuccess);
    });
}

int run_example(int which, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        out << dump_problem(builtin_example(which));
        return static_cast<int>(kSuccess);
    });
}

}  // namespace fbvp::cli
