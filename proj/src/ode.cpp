#include "fbvp/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace fbvp {

namespace {

// Right-hand side of the companion system y' = F(t, y) where y = (x, x', ..., x^(n-1)).
struct CompanionSystem {
    const LinearOde& ode;

    void operator()(double t, std::span<const double> y, std::span<double> dydt) const {
        const int n = ode.order();
        for (int k = 0; k + 1 < n; ++k) dydt[k] = y[k + 1];
        double top = ode.forcing.evaluate(t);
        // a_i multiplies x^(n-i), which is y[n-i].
        for (int i = 1; i <= n; ++i) top -= ode.coeffs[i - 1].evaluate(t) * y[n - i];
        dydt[n - 1] = top;
    }
};

std::string describe_node(std::size_t node, double t) {
    std::ostringstream out;
    out << "node " << node << " (t = " << t << ")";
    return out.str();
}

}  // namespace

Trajectory::Trajectory(TimeGrid grid, int order, std::vector<double> states, std::vector<double> slopes)
    : grid_(grid), order_(order), states_(std::move(states)), slopes_(std::move(slopes)) {
    if (order_ < 1) throw ValidationError("trajectory order must be at least 1");
    if (states_.size() != grid_.num_points() * static_cast<std::size_t>(order_) ||
        slopes_.size() != grid_.num_points()) {
        throw ValidationError("trajectory storage does not match its grid");
    }
}

double hermite(double s, double x0, double x1, double m0, double m1) noexcept {
    const double s2 = s * s;
    const double s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * x0 + (s3 - 2 * s2 + s) * m0 + (-2 * s3 + 3 * s2) * x1 +
           (s3 - s2) * m1;
}

double Trajectory::value_at(double t) const {
    if (!grid_.contains(t)) {
        throw DomainError("t = " + std::to_string(t) + " outside the trajectory interval");
    }
    const double h = grid_.step();
    const double pos = (t - grid_.t0()) / h;
    const auto last = grid_.steps();
    auto i = static_cast<std::size_t>(std::floor(pos));
    if (i >= last) i = last - 1;
    double s = pos - static_cast<double>(i);
    // Snap to nodes so boundary points reproduce stored values exactly.
    constexpr double kSnap = 1e-9;
    if (std::abs(s) < kSnap) return value(i);
    if (std::abs(1.0 - s) < kSnap) return value(i + 1);
    s = std::clamp(s, 0.0, 1.0);
    return hermite(s, value(i), value(i + 1), h * slope(i), h * slope(i + 1));
}

Trajectory Trajectory::combine(const Trajectory* base, std::span<const Trajectory> parts,
                               std::span<const double> coeffs) {
    if (parts.size() != coeffs.size()) throw ValidationError("combination size mismatch");
    const Trajectory& shape = base ? *base : parts.front();
    std::vector<double> states(shape.states_.size(), 0.0);
    std::vector<double> slopes(shape.slopes_.size(), 0.0);
    if (base) {
        states = base->states_;
        slopes = base->slopes_;
    }
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const Trajectory& p = parts[k];
        if (!(p.grid_ == shape.grid_) || p.order_ != shape.order_) {
            throw GridMismatch("cannot combine trajectories on different grids");
        }
        for (std::size_t i = 0; i < states.size(); ++i) states[i] += coeffs[k] * p.states_[i];
        for (std::size_t i = 0; i < slopes.size(); ++i) slopes[i] += coeffs[k] * p.slopes_[i];
    }
    return {shape.grid_, shape.order_, std::move(states), std::move(slopes)};
}

Trajectory integrate_ivp(const LinearOde& ode, std::span<const double> initial_state,
                         const TimeGrid& grid) {
    const int n = ode.order();
    if (static_cast<int>(initial_state.size()) != n) {
        throw ValidationError("initial state must have " + std::to_string(n) + " components");
    }
    const CompanionSystem rhs{ode};
    const std::size_t points = grid.num_points();
    const double h = grid.step();

    std::vector<double> states(points * n);
    std::vector<double> slopes(points);
    std::vector<double> y(initial_state.begin(), initial_state.end());
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

    auto record = [&](std::size_t node, double t) {
        for (int k = 0; k < n; ++k) {
            if (!std::isfinite(y[k])) {
                throw IntegrationError("integration blew up at " + describe_node(node, t));
            }
            states[node * n + k] = y[k];
        }
        rhs(t, y, k1);
        slopes[node] = n > 1 ? y[1] : k1[0];
        if (!std::isfinite(slopes[node])) {
            throw IntegrationError("integration blew up at " + describe_node(node, t));
        }
    };

    record(0, grid.node(0));
    for (std::size_t i = 0; i + 1 < points; ++i) {
        const double t = grid.node(i);
        // k1 was left by record() for (t, y).
        for (int k = 0; k < n; ++k) tmp[k] = y[k] + 0.5 * h * k1[k];
        rhs(t + 0.5 * h, tmp, k2);
        for (int k = 0; k < n; ++k) tmp[k] = y[k] + 0.5 * h * k2[k];
        rhs(t + 0.5 * h, tmp, k3);
        for (int k = 0; k < n; ++k) tmp[k] = y[k] + h * k3[k];
        rhs(t + h, tmp, k4);
        for (int k = 0; k < n; ++k) y[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
        record(i + 1, grid.node(i + 1));
    }
    return {grid, n, std::move(states), std::move(slopes)};
}

std::vector<Trajectory> homogeneous_basis(const LinearOde& ode, const TimeGrid& grid) {
    const LinearOde homogeneous = ode.homogeneous();
    const int n = ode.order();
    std::vector<Trajectory> basis;
    basis.reserve(n);
    std::vector<double> e(n, 0.0);
    for (int k = 0; k < n; ++k) {
        std::fill(e.begin(), e.end(), 0.0);
        e[k] = 1.0;
        basis.push_back(integrate_ivp(homogeneous, e, grid));
    }
    return basis;
}

Matrix boundary_matrix(std::span<const Trajectory> basis, std::span<const double> points) {
    const auto n = static_cast<Eigen::Index>(basis.size());
    if (basis.empty() || points.size() != basis.size()) {
        throw ValidationError("boundary matrix needs one point per basis function");
    }
    const TimeGrid& grid = basis.front().grid();
    Matrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double t = points[j];
        if (!grid.contains(t)) {
            throw DomainError("boundary point " + std::to_string(t) + " outside [" +
                              std::to_string(grid.t0()) + ", " + std::to_string(grid.t_end()) + "]");
        }
        for (Eigen::Index i = 0; i < n; ++i) m(j, i) = basis[i].value_at(t);
    }
    return m;
}

std::vector<double> WeightBasis::at_node(std::size_t node) const {
    std::vector<double> w(weights_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = weights_[i].value(node);
    return w;
}

std::vector<double> WeightBasis::at(double t) const {
    std::vector<double> w(weights_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = weights_[i].value_at(t);
    return w;
}

WeightBasis weight_functions(std::vector<Trajectory> basis, std::vector<double> points, Matrix m) {
    const auto n = static_cast<Eigen::Index>(basis.size());
    if (n == 0 || m.rows() != n || m.cols() != n || static_cast<Eigen::Index>(points.size()) != n) {
        throw ValidationError("weight functions need an n x n boundary matrix for n basis functions");
    }
    const Eigen::PartialPivLU<Matrix> lu(m);
    const double det = lu.determinant();
    const double scale = m.cwiseAbs().rowwise().sum().maxCoeff();
    if (!(std::abs(det) >= kSingularityThreshold * std::pow(scale, static_cast<double>(n)))) {
        std::ostringstream out;
        out << "boundary matrix is singular (det = " << det << ", ||M||_inf = " << scale
            << "): the crisp problem has no unique solution";
        throw NonUniqueCrispSolution(out.str());
    }

    WeightBasis wb;
    wb.inverse_ = lu.inverse();
    // w_i = sum_k s_k * Minv(k, i)
    wb.weights_.reserve(n);
    std::vector<double> column(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < n; ++k) column[k] = wb.inverse_(k, i);
        wb.weights_.push_back(Trajectory::combine(nullptr, basis, column));
    }
    wb.basis_ = std::move(basis);
    wb.points_ = std::move(points);
    wb.matrix_ = std::move(m);
    return wb;
}

WeightBasis make_weight_basis(const LinearOde& ode, std::vector<double> points, const TimeGrid& grid) {
    validate_condition_points(points, ode.order(), grid);
    auto basis = homogeneous_basis(ode, grid);
    Matrix m = boundary_matrix(basis, points);
    return weight_functions(std::move(basis), std::move(points), std::move(m));
}

Trajectory solve_crisp_bvp(const LinearOde& ode, std::span<const double> points,
                           std::span<const double> values, const TimeGrid& grid) {
    return solve_crisp_bvp(ode, values,
                           make_weight_basis(ode, std::vector<double>(points.begin(), points.end()), grid));
}

Trajectory solve_crisp_bvp(const LinearOde& ode, std::span<const double> values,
                           const WeightBasis& weights) {
    if (values.size() != weights.size()) {
        throw ValidationError("expected " + std::to_string(weights.size()) + " boundary values");
    }
    const std::vector<double> zero(ode.order(), 0.0);
    const Trajectory particular = integrate_ivp(ode, zero, weights.grid());
    std::vector<double> defect(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
        defect[j] = values[j] - particular.value_at(weights.points()[j]);
    }
    return Trajectory::combine(&particular, weights.weights(), defect);
}

}  // namespace fbvp
