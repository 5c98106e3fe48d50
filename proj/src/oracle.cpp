#include "fbvp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fbvp::oracle {

FdMesh::FdMesh(double t0, double t_end, int interior) : t0_(t0), t_end_(t_end), interior_(interior) {
    if (!std::isfinite(t0) || !std::isfinite(t_end) || !(t_end > t0)) {
        throw ValidationError("finite-difference mesh requires finite t0 < T");
    }
    if (interior < 3) throw ValidationError("finite-difference mesh needs at least 3 interior nodes");
}

double FdMesh::node(int i) const noexcept {
    if (i > interior_) return t_end_;
    return t0_ + (t_end_ - t0_) * i / (interior_ + 1);
}

double FdSolution::value_at(double t) const {
    if (!(t >= mesh.t0() && t <= mesh.t_end())) {
        throw DomainError("t = " + std::to_string(t) + " outside the mesh interval");
    }
    const double pos = (t - mesh.t0()) / mesh.step();
    const int last = mesh.interior() + 1;
    int i = std::min(static_cast<int>(std::floor(pos)), last - 1);
    const double s = std::clamp(pos - i, 0.0, 1.0);
    if (s < 1e-9) return values[i];
    if (1.0 - s < 1e-9) return values[i + 1];
    return (1.0 - s) * values[i] + s * values[i + 1];
}

FdSolution fd_solve(const LinearOde& ode, double a, double b, const FdMesh& mesh) {
    if (ode.order() != 2) {
        throw UnsupportedForVerify("finite-difference oracle supports order-2 equations only");
    }
    const int m = mesh.interior();
    const double h = mesh.step();
    const double inv_h2 = 1.0 / (h * h);
    const double inv_2h = 1.0 / (2.0 * h);

    // Row i (interior node i = 1..m): sub*x_{i-1} + diag*x_i + sup*x_{i+1} = rhs.
    std::vector<double> sub(m), diag(m), sup(m), rhs(m);
    for (int k = 0; k < m; ++k) {
        const double t = mesh.node(k + 1);
        const double a1 = ode.coeffs[0].evaluate(t);
        const double a2 = ode.coeffs[1].evaluate(t);
        sub[k] = inv_h2 - a1 * inv_2h;
        diag[k] = -2.0 * inv_h2 + a2;
        sup[k] = inv_h2 + a1 * inv_2h;
        rhs[k] = ode.forcing.evaluate(t);
    }
    rhs.front() -= sub.front() * a;
    rhs.back() -= sup.back() * b;

    // Thomas algorithm, no pivoting.
    const double tiny = std::numeric_limits<double>::epsilon() * inv_h2;
    for (int k = 0; k < m; ++k) {
        if (k > 0) {
            const double factor = sub[k] / diag[k - 1];
            diag[k] -= factor * sup[k - 1];
            rhs[k] -= factor * rhs[k - 1];
        }
        if (!(std::abs(diag[k]) > tiny)) {
            throw SingularDiscretization("zero pivot at finite-difference row " + std::to_string(k + 1));
        }
    }
    std::vector<double> x(m + 2);
    x.front() = a;
    x.back() = b;
    x[m] = rhs[m - 1] / diag[m - 1];
    for (int k = m - 2; k >= 0; --k) x[k + 1] = (rhs[k] - sup[k] * x[k + 2]) / diag[k];
    return {mesh, std::move(x)};
}

Envelope envelope(const FuzzyBvp& problem, double alpha, int samples_per_axis, const FdMesh& mesh,
                  const TimeGrid& output) {
    if (problem.ode.order() != 2 || problem.conditions.size() != 2) {
        throw UnsupportedForVerify("verification supports order-2 two-point problems only");
    }
    const double t0 = problem.grid.t0();
    const double t_end = problem.grid.t_end();
    const auto& first = problem.conditions[0];
    const auto& second = problem.conditions[1];
    const bool forward = first.t == t0 && second.t == t_end;
    const bool backward = first.t == t_end && second.t == t0;
    if (!forward && !backward) {
        throw UnsupportedForVerify("verification requires conditions at both interval ends");
    }
    if (mesh.t0() != t0 || mesh.t_end() != t_end || output.t0() != t0 || output.t_end() != t_end) {
        throw GridMismatch("mesh and output grid must cover the problem interval");
    }
    if (samples_per_axis < 2) throw ValidationError("need at least 2 samples per axis");

    const Interval cut_start = alpha_cut(forward ? first.value : second.value, alpha);
    const Interval cut_end = alpha_cut(forward ? second.value : first.value, alpha);
    auto sample = [&](const Interval& cut, int j) {
        if (j == samples_per_axis - 1) return cut.hi();
        return cut.lo() + cut.width() * j / (samples_per_axis - 1);
    };

    const std::size_t nodes = output.num_points();
    std::vector<double> lo(nodes, std::numeric_limits<double>::infinity());
    std::vector<double> hi(nodes, -std::numeric_limits<double>::infinity());
    for (int ja = 0; ja < samples_per_axis; ++ja) {
        for (int jb = 0; jb < samples_per_axis; ++jb) {
            const FdSolution x = fd_solve(problem.ode, sample(cut_start, ja), sample(cut_end, jb), mesh);
            for (std::size_t i = 0; i < nodes; ++i) {
                const double v = x.value_at(output.node(i));
                lo[i] = std::min(lo[i], v);
                hi[i] = std::max(hi[i], v);
            }
        }
    }
    std::vector<Interval> intervals;
    intervals.reserve(nodes);
    for (std::size_t i = 0; i < nodes; ++i) intervals.emplace_back(lo[i], hi[i]);
    return {alpha, output, std::move(intervals)};
}

EnvelopeReport compare(const SolutionBand& formula, const Envelope& oracle) {
    if (!(formula.grid() == oracle.grid)) {
        throw GridMismatch("formula band and oracle envelope use different grids");
    }
    const std::size_t level = formula.level_index(oracle.alpha);
    EnvelopeReport report{oracle.alpha, {}, 0.0};
    report.nodes.reserve(oracle.intervals.size());
    for (std::size_t i = 0; i < oracle.intervals.size(); ++i) {
        const Interval& f = formula.at(i, level);
        const Interval& o = oracle.intervals[i];
        const double dl = std::abs(f.lo() - o.lo());
        const double du = std::abs(f.hi() - o.hi());
        report.nodes.push_back({formula.grid().node(i), f, o, dl, du});
        report.max_deviation = std::max({report.max_deviation, dl, du});
    }
    return report;
}

}  // namespace fbvp::oracle
