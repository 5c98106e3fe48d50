#include "fbvp/fuzzy_solution.hpp"

#include <algorithm>
#include <string>

namespace fbvp {

Decomposition decompose(const FuzzyBvp& problem) {
    Decomposition parts;
    parts.crisp_values.reserve(problem.conditions.size());
    parts.uncertain.reserve(problem.conditions.size());
    for (const auto& c : problem.conditions) {
        auto split = split_crisp(c.value);
        parts.crisp_values.push_back(split.crisp);
        parts.uncertain.push_back(std::move(split.uncertain));
    }
    return parts;
}

FuzzySolution::FuzzySolution(Trajectory crisp, WeightBasis weights, Decomposition parts)
    : crisp_(std::move(crisp)),
      weights_(std::move(weights)),
      crisp_values_(std::move(parts.crisp_values)),
      uncertain_(std::move(parts.uncertain)) {
    conditions_.reserve(uncertain_.size());
    for (std::size_t j = 0; j < uncertain_.size(); ++j) {
        conditions_.push_back(add(crisp_values_[j], uncertain_[j]));
    }
}

FuzzySolution assemble(Trajectory crisp, WeightBasis weights, Decomposition parts) {
    if (!(crisp.grid() == weights.grid())) {
        throw GridMismatch("crisp solution and weight functions use different grids");
    }
    if (parts.uncertain.size() != weights.size() || parts.crisp_values.size() != weights.size()) {
        throw ValidationError("need one uncertain part per weight function");
    }
    for (const auto& u : parts.uncertain) {
        if (vertex(u) != 0.0) throw VertexError("uncertain parts must have their vertex at 0");
    }
    return FuzzySolution(std::move(crisp), std::move(weights), std::move(parts));
}

FuzzySolution solve(const FuzzyBvp& problem) {
    problem.validate();
    Decomposition parts = decompose(problem);
    WeightBasis weights = make_weight_basis(problem.ode, problem.condition_points(), problem.grid);
    Trajectory crisp = solve_crisp_bvp(problem.ode, parts.crisp_values, weights);
    return assemble(std::move(crisp), std::move(weights), std::move(parts));
}

Interval weighted_interval_sum(std::span<const double> weights, std::span<const Interval> cuts) {
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double a = cuts[i].lo() * weights[i];
        const double b = cuts[i].hi() * weights[i];
        lo += std::min(a, b);
        hi += std::max(a, b);
    }
    return {lo, hi};
}

std::vector<Interval> FuzzySolution::uncertain_cuts(double alpha) const {
    std::vector<Interval> cuts;
    cuts.reserve(uncertain_.size());
    for (const auto& u : uncertain_) cuts.push_back(alpha_cut(u, alpha));
    return cuts;
}

Interval FuzzySolution::uncertain_at(double t, double alpha) const {
    const auto cuts = uncertain_cuts(alpha);
    return weighted_interval_sum(weights_.at(t), cuts);
}

Interval FuzzySolution::value_at(double t, double alpha) const {
    const Interval u = uncertain_at(t, alpha);
    const double x = crisp_.value_at(t);
    return {x + u.lo(), x + u.hi()};
}

Interval FuzzySolution::uncertain_at_node(std::size_t node, double alpha) const {
    const auto cuts = uncertain_cuts(alpha);
    return weighted_interval_sum(weights_.at_node(node), cuts);
}

Interval FuzzySolution::value_at_node(std::size_t node, double alpha) const {
    const Interval u = uncertain_at_node(node, alpha);
    const double x = crisp_.value(node);
    return {x + u.lo(), x + u.hi()};
}

namespace {

template <typename CrispFn, typename WeightFn>
SolutionBand evaluate_band(const FuzzySolution& solution, std::span<const double> alphas,
                           const TimeGrid& grid, CrispFn crisp_at, WeightFn weights_at) {
    auto levels = normalize_alphas(alphas);
    std::vector<std::vector<Interval>> level_cuts;
    level_cuts.reserve(levels.size());
    for (double a : levels) {
        std::vector<Interval> cuts;
        for (const auto& u : solution.uncertain()) cuts.push_back(alpha_cut(u, a));
        level_cuts.push_back(std::move(cuts));
    }
    std::vector<Interval> out;
    out.reserve(grid.num_points() * levels.size());
    for (std::size_t i = 0; i < grid.num_points(); ++i) {
        const double x = crisp_at(i);
        const auto w = weights_at(i);
        for (const auto& cuts : level_cuts) {
            const Interval u = weighted_interval_sum(w, cuts);
            out.emplace_back(x + u.lo(), x + u.hi());
        }
    }
    return {grid, std::move(levels), std::move(out)};
}

}  // namespace

SolutionBand band(const FuzzySolution& solution, std::span<const double> alphas) {
    return evaluate_band(
        solution, alphas, solution.grid(), [&](std::size_t i) { return solution.crisp().value(i); },
        [&](std::size_t i) { return solution.weights().at_node(i); });
}

SolutionBand band(const FuzzySolution& solution, std::span<const double> alphas,
                  const TimeGrid& output) {
    if (output.t0() != solution.grid().t0() || output.t_end() != solution.grid().t_end()) {
        throw GridMismatch("output grid must cover the solution interval");
    }
    if (output == solution.grid()) return band(solution, alphas);
    return evaluate_band(
        solution, alphas, output,
        [&](std::size_t i) { return solution.crisp().value_at(output.node(i)); },
        [&](std::size_t i) { return solution.weights().at(output.node(i)); });
}

double membership_of(const FuzzySolution& solution, std::span<const double> values) {
    const auto& conditions = solution.conditions();
    if (values.size() != conditions.size()) {
        throw ValidationError("expected " + std::to_string(conditions.size()) + " boundary values");
    }
    double possibility = 1.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        possibility = std::min(possibility, membership(conditions[j], values[j]));
    }
    return possibility;
}

}  // namespace fbvp
