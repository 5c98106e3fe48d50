#include "fbvp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fbvp {

TimeGrid::TimeGrid(double t0, double t_end, std::size_t num_points)
    : t0_(t0), t_end_(t_end), num_points_(num_points) {
    if (!std::isfinite(t0) || !std::isfinite(t_end) || !(t_end > t0)) {
        throw ValidationError("time grid requires finite t0 < T");
    }
    if (num_points < 2) throw ValidationError("time grid requires at least two points");
}

double TimeGrid::node(std::size_t i) const noexcept {
    if (i >= steps()) return t_end_;
    return t0_ + (t_end_ - t0_) * static_cast<double>(i) / static_cast<double>(steps());
}

LinearOde::LinearOde(std::vector<Expression> coeffs_, Expression forcing_)
    : coeffs(std::move(coeffs_)), forcing(std::move(forcing_)) {
    if (coeffs.empty()) throw ValidationError("differential equation order must be at least 1");
}

std::vector<double> FuzzyBvp::condition_points() const {
    std::vector<double> points;
    points.reserve(conditions.size());
    for (const auto& c : conditions) points.push_back(c.t);
    return points;
}

void FuzzyBvp::validate() const { validate_condition_points(condition_points(), ode.order(), grid); }

void validate_condition_points(const std::vector<double>& points, int order, const TimeGrid& grid) {
    if (static_cast<int>(points.size()) != order) {
        throw ValidationError("expected " + std::to_string(order) + " boundary conditions, got " +
                              std::to_string(points.size()));
    }
    for (double t : points) {
        if (!grid.contains(t)) {
            throw ValidationError("boundary point " + std::to_string(t) + " outside [" +
                                  std::to_string(grid.t0()) + ", " + std::to_string(grid.t_end()) + "]");
        }
    }
    std::vector<double> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("boundary points must be pairwise distinct");
    }
}

}  // namespace fbvp
