#pragma once

#include "fbvp/band.hpp"
#include "fbvp/ode.hpp"

#include <span>
#include <vector>

namespace fbvp {

/// Boundary values split into vertices (for the crisp problem) and
/// uncertain parts centred at zero (for the homogeneous fuzzy problem).
struct Decomposition {
    std::vector<double> crisp_values;
    std::vector<FuzzyNumber> uncertain;
};

Decomposition decompose(const FuzzyBvp& problem);

/// x~(t) = x_cr(t) + sum_i w_i(t) u~_i
///
/// Holds the components only; alpha-cuts are evaluated on demand.
class FuzzySolution {
public:
    const Trajectory& crisp() const noexcept { return crisp_; }
    const WeightBasis& weights() const noexcept { return weights_; }
    const std::vector<FuzzyNumber>& uncertain() const noexcept { return uncertain_; }
    /// The original conditions, vertex_j + u~_j.
    const std::vector<FuzzyNumber>& conditions() const noexcept { return conditions_; }
    const TimeGrid& grid() const noexcept { return crisp_.grid(); }

    /// alpha-cut of x~(t).
    Interval value_at(double t, double alpha) const;
    /// alpha-cut of the uncertain part sum_i w_i(t) u~_i alone.
    Interval uncertain_at(double t, double alpha) const;

    /// Same as value_at/uncertain_at at grid node i, without interpolation.
    Interval value_at_node(std::size_t node, double alpha) const;
    Interval uncertain_at_node(std::size_t node, double alpha) const;

private:
    friend FuzzySolution assemble(Trajectory, WeightBasis, Decomposition);
    FuzzySolution(Trajectory crisp, WeightBasis weights, Decomposition parts);

    std::vector<Interval> uncertain_cuts(double alpha) const;

    Trajectory crisp_;
    WeightBasis weights_;
    std::vector<double> crisp_values_;
    std::vector<FuzzyNumber> uncertain_;
    std::vector<FuzzyNumber> conditions_;
};

/// Throws GridMismatch when the crisp trajectory and the weights were
/// computed on different grids.
FuzzySolution assemble(Trajectory crisp, WeightBasis weights, Decomposition parts);

/// Runs the whole method: split the conditions, build w(t) = s(t) M^-1, solve
/// the crisp problem, and assemble.
FuzzySolution solve(const FuzzyBvp& problem);

/// Sum of weights[i] * cuts[i] as intervals, using min/max of the endpoint
/// products for each term.
Interval weighted_interval_sum(std::span<const double> weights, std::span<const Interval> cuts);

/// Evaluates every grid node at every alpha level.
SolutionBand band(const FuzzySolution& solution, std::span<const double> alphas);

/// Evaluates on another grid over the same interval, interpolating x_cr and
/// w_i where nodes do not coincide.
SolutionBand band(const FuzzySolution& solution, std::span<const double> alphas,
                  const TimeGrid& output);

/// Possibility of the crisp trajectory with the given boundary values: the
/// least membership of values[j] in condition j.
double membership_of(const FuzzySolution& solution, std::span<const double> values);

}  // namespace fbvp
