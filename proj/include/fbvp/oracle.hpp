#pragma once

// Independent check of the fuzzy solution: crisp two-point problems are solved
// by central finite differences (no shooting, no RK4) and the band is
// rebuilt as the envelope of many such crisp solutions. Only order-2
// problems with conditions at both interval ends are supported.

#include "fbvp/band.hpp"
#include "fbvp/problem.hpp"

#include <vector>

namespace fbvp::oracle {

/// Default number of interior finite-difference nodes.
inline constexpr int kDefaultInteriorNodes = 1999;

class SingularDiscretization : public Error {
public:
    using Error::Error;
};

class UnsupportedForVerify : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Uniform mesh with m interior nodes; h = (T - t0) / (m + 1).
class FdMesh {
public:
    FdMesh(double t0, double t_end, int interior = kDefaultInteriorNodes);

    double t0() const noexcept { return t0_; }
    double t_end() const noexcept { return t_end_; }
    int interior() const noexcept { return interior_; }
    double step() const noexcept { return (t_end_ - t0_) / (interior_ + 1); }
    /// Node i for i = 0 .. interior + 1 (both ends included).
    double node(int i) const noexcept;

private:
    double t0_;
    double t_end_;
    int interior_;
};

/// Finite-difference solution including both boundary nodes.
struct FdSolution {
    FdMesh mesh;
    std::vector<double> values;

    /// Piecewise-linear in between mesh nodes.
    double value_at(double t) const;
};

/// Solves x'' + a1(t) x' + a2(t) x = f(t), x(t0) = a, x(T) = b with the
/// Thomas algorithm. O(h^2) accurate.
FdSolution fd_solve(const LinearOde& ode, double a, double b, const FdMesh& mesh);

/// Per-node min/max of FD solutions over a k x k grid of boundary values
/// covering the alpha-cut rectangle of the two conditions, reported at the
/// nodes of `output`.
struct Envelope {
    double alpha;
    TimeGrid grid;
    std::vector<Interval> intervals;
};

Envelope envelope(const FuzzyBvp& problem, double alpha, int samples_per_axis, const FdMesh& mesh,
                  const TimeGrid& output);

struct NodeDeviation {
    double t;
    Interval formula;
    Interval oracle;
    double lower_deviation;
    double upper_deviation;
};

struct EnvelopeReport {
    double alpha;
    std::vector<NodeDeviation> nodes;
    double max_deviation = 0.0;
};

/// Compares the envelope with the band column at the envelope's alpha level.
EnvelopeReport compare(const SolutionBand& formula, const Envelope& oracle);

}  // namespace fbvp::oracle
