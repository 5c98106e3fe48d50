#pragma once

#include "fbvp/expression.hpp"
#include "fbvp/fuzzy_number.hpp"

#include <cstddef>
#include <vector>

namespace fbvp {

/// Default number of RK4 steps across the solution interval.
inline constexpr int kDefaultSteps = 1000;

/// Uniform nodes t0 = tau_0 < tau_1 < ... < tau_N = T.
class TimeGrid {
public:
    TimeGrid(double t0, double t_end, std::size_t num_points);

    double t0() const noexcept { return t0_; }
    double t_end() const noexcept { return t_end_; }
    std::size_t num_points() const noexcept { return num_points_; }
    std::size_t steps() const noexcept { return num_points_ - 1; }
    double step() const noexcept { return (t_end_ - t0_) / static_cast<double>(steps()); }
    double node(std::size_t i) const noexcept;
    bool contains(double t) const noexcept { return t0_ <= t && t <= t_end_; }

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

private:
    double t0_;
    double t_end_;
    std::size_t num_points_;
};

/// x^(n) + a_1(t) x^(n-1) + ... + a_n(t) x = f(t)
struct LinearOde {
    LinearOde(std::vector<Expression> coeffs, Expression forcing);

    int order() const noexcept { return static_cast<int>(coeffs.size()); }

    /// Same equation with f = 0.
    LinearOde homogeneous() const { return {coeffs, Expression()}; }

    std::vector<Expression> coeffs;
    Expression forcing;
};

/// Value-type condition x(t) = value.
struct BoundaryCondition {
    double t;
    FuzzyNumber value;
};

/// Linear ODE with crisp coefficients and n fuzzy value conditions.
struct FuzzyBvp {
    LinearOde ode;
    std::vector<BoundaryCondition> conditions;
    TimeGrid grid;

    std::vector<double> condition_points() const;

    /// Throws ValidationError unless there are exactly ode.order() conditions
    /// at pairwise distinct points inside the grid interval.
    void validate() const;
};

/// Checks n value-condition points against the interval of `grid`.
void validate_condition_points(const std::vector<double>& points, int order, const TimeGrid& grid);

}  // namespace fbvp
