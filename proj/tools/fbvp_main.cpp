// fbvp: solve linear ODEs with fuzzy boundary values from the command line.

#include "fbvp/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace fbvp::cli;

    CLI::App app{"Linear ODE solver with fuzzy boundary values"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes:\n"
        "  0  success\n"
        "  1  validation or usage error\n"
        "  2  NonUniqueCrispSolution (the crisp boundary problem is singular)\n"
        "  3  verification failure (oracle deviation above tolerance)");

    SolveOptions solve;
    std::vector<double> solve_alphas;
    std::size_t solve_points = 0;
    auto* solve_cmd = app.add_subcommand("solve", "Compute alpha-cut bands of the fuzzy solution");
    solve_cmd->add_option("problem", solve.problem_path, "Problem JSON file")->required();
    auto* alphas_opt = solve_cmd->add_option("--alphas", solve_alphas, "Comma-separated alpha levels")
                           ->delimiter(',');
    auto* points_opt = solve_cmd->add_option("--points", solve_points, "Output grid points")
                           ->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}));
    solve_cmd->add_option("--steps", solve.steps, "RK4 steps across the interval")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--out", solve.out_path, "Output file (default: stdout)");
    solve_cmd->add_option("--format", solve.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    VerifyOptions verify;
    std::size_t verify_points = 0;
    auto* verify_cmd =
        app.add_subcommand("verify", "Compare the band with a finite-difference envelope");
    verify_cmd->add_option("problem", verify.problem_path, "Problem JSON file")->required();
    verify_cmd->add_option("--alpha", verify.alpha, "Alpha level")->check(CLI::Range(0.0, 1.0));
    verify_cmd->add_option("--samples", verify.samples, "Boundary samples per axis")
        ->check(CLI::Range(2, 1000));
    verify_cmd->add_option("--mesh", verify.mesh, "Interior finite-difference nodes")
        ->check(CLI::Range(3, 100'000'000));
    verify_cmd->add_option("--tolerance", verify.tolerance, "Maximum allowed deviation");
    auto* verify_points_opt = verify_cmd->add_option("--points", verify_points, "Output grid points")
                                  ->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}));
    verify_cmd->add_option("--steps", verify.steps, "RK4 steps across the interval")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", verify.out_path, "Report file (default: stdout)");

    int which = 0;
    auto* example_cmd = app.add_subcommand("example", "Print a built-in problem as JSON");
    example_cmd->add_option("which", which, "1 or 2")->required()->check(CLI::Range(1, 2));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version report success; every other parse error is a usage error.
        return app.exit(e) == 0 ? kSuccess : kValidationFailure;
    }

    if (*solve_cmd) {
        if (*alphas_opt) solve.alphas = solve_alphas;
        if (*points_opt) solve.points = solve_points;
        return run_solve(solve, std::cout, std::cerr);
    }
    if (*verify_cmd) {
        if (*verify_points_opt) verify.points = verify_points;
        return run_verify(verify, std::cout, std::cerr);
    }
    return run_example(which, std::cout, std::cerr);
}
