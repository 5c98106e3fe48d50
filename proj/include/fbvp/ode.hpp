#pragma once

#include "fbvp/problem.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace fbvp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Relative threshold of the singularity test |det M| < kSingularityThreshold * ||M||_inf^n.
inline constexpr double kSingularityThreshold = 1e-12;

/// States (x, x', ..., x^(n-1)) of a solution at every node of a TimeGrid,
/// plus x' at every node (needed separately when n = 1).
///
/// Off-node values use cubic Hermite interpolation of (x, x').
class Trajectory {
public:
    Trajectory(TimeGrid grid, int order, std::vector<double> states, std::vector<double> slopes);

    const TimeGrid& grid() const noexcept { return grid_; }
    int order() const noexcept { return order_; }

    /// x(tau_i)
    double value(std::size_t node) const { return states_[node * order_]; }
    /// x'(tau_i)
    double slope(std::size_t node) const { return slopes_[node]; }
    /// Full state vector at node i.
    std::span<const double> state(std::size_t node) const {
        return {states_.data() + node * order_, static_cast<std::size_t>(order_)};
    }

    /// x(t) for any t in the grid interval.
    double value_at(double t) const;

    /// base + sum_k coeffs[k] * parts[k], node by node. All trajectories must
    /// share grid and order.
    static Trajectory combine(const Trajectory* base, std::span<const Trajectory> parts,
                              std::span<const double> coeffs);

private:
    TimeGrid grid_;
    int order_;
    std::vector<double> states_;
    std::vector<double> slopes_;
};

/// Cubic Hermite interpolant on [0, 1] with values x0, x1 and slopes m0, m1
/// already scaled by the interval length.
double hermite(double s, double x0, double x1, double m0, double m1) noexcept;

/// Classical fixed-step RK4 on the companion first-order system.
Trajectory integrate_ivp(const LinearOde& ode, std::span<const double> initial_state,
                         const TimeGrid& grid);

/// n solutions of the homogeneous equation with initial states e_1, ..., e_n at t0.
std::vector<Trajectory> homogeneous_basis(const LinearOde& ode, const TimeGrid& grid);

/// M[j][i] = x_i(points[j]).
Matrix boundary_matrix(std::span<const Trajectory> basis, std::span<const double> points);

/// Fundamental solutions s(t), the boundary matrix M, and the weight
/// functions w(t) = s(t) M^-1. The weights satisfy w_i(points[j]) = delta_ij,
/// so a homogeneous solution with boundary values u is w(t) . u.
class WeightBasis {
public:
    const std::vector<Trajectory>& basis() const noexcept { return basis_; }
    const std::vector<double>& points() const noexcept { return points_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    const Matrix& inverse() const noexcept { return inverse_; }
    const std::vector<Trajectory>& weights() const noexcept { return weights_; }
    const TimeGrid& grid() const noexcept { return basis_.front().grid(); }
    std::size_t size() const noexcept { return basis_.size(); }

    /// (w_1(tau_i), ..., w_n(tau_i))
    std::vector<double> at_node(std::size_t node) const;
    /// (w_1(t), ..., w_n(t)) for off-node t.
    std::vector<double> at(double t) const;

private:
    friend WeightBasis weight_functions(std::vector<Trajectory>, std::vector<double>, Matrix);
    WeightBasis() = default;

    std::vector<Trajectory> basis_;
    std::vector<double> points_;
    Matrix matrix_;
    Matrix inverse_;
    std::vector<Trajectory> weights_;
};

/// Throws NonUniqueCrispSolution when M fails the scale-invariant
/// determinant test.
WeightBasis weight_functions(std::vector<Trajectory> basis, std::vector<double> points, Matrix m);

/// homogeneous_basis + boundary_matrix + weight_functions.
WeightBasis make_weight_basis(const LinearOde& ode, std::vector<double> points, const TimeGrid& grid);

/// Crisp non-homogeneous BVP with value conditions x(t_j) = u_j.
Trajectory solve_crisp_bvp(const LinearOde& ode, std::span<const double> points,
                           std::span<const double> values, const TimeGrid& grid);

/// Same, reusing precomputed weights: x = x_p + sum_j w_j (u_j - x_p(t_j)),
/// where x_p is the forced solution from a zero initial state.
Trajectory solve_crisp_bvp(const LinearOde& ode, std::span<const double> values,
                           const WeightBasis& weights);

}  // namespace fbvp
