#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

namespace fbvp {

/// Tolerance used for ordering checks and the unique-vertex test.
inline constexpr double kFuzzyTolerance = 1e-12;

/// Number of alpha levels used when sampling parametric branches by default.
inline constexpr int kDefaultAlphaLevels = 101;

/// Closed real interval [lo, hi].
class Interval {
public:
    Interval(double lo, double hi);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double width() const noexcept { return hi_ - lo_; }
    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_;
    double hi_;
};

/// Triangular fuzzy number (l, m, r) with possibility 1 at the peak m.
class TriangularFuzzyNumber {
public:
    TriangularFuzzyNumber(double left, double peak, double right);

    /// Degenerate number (v, v, v).
    static TriangularFuzzyNumber crisp(double value) { return {value, value, value}; }

    double left() const noexcept { return left_; }
    double peak() const noexcept { return peak_; }
    double right() const noexcept { return right_; }

    friend bool operator==(const TriangularFuzzyNumber&, const TriangularFuzzyNumber&) = default;

private:
    double left_;
    double peak_;
    double right_;
};

/// Fuzzy number in parametric form: the lower branch u_L and the upper branch
/// u_R are sampled on an increasing list of alpha levels covering [0, 1] and
/// interpolated linearly in between.
///
/// Construction rejects branches that are not monotone (u_L non-decreasing,
/// u_R non-increasing), that cross, or whose values at alpha = 1 differ by
/// more than kFuzzyTolerance. Trapezoidal numbers are therefore rejected.
class ParametricFuzzyNumber {
public:
    ParametricFuzzyNumber(std::vector<double> alphas, std::vector<double> lower,
                          std::vector<double> upper);

    /// Samples lower/upper branch functions on a uniform grid of `levels`
    /// alpha values.
    static ParametricFuzzyNumber from_branches(const std::function<double(double)>& lower,
                                               const std::function<double(double)>& upper,
                                               int levels = kDefaultAlphaLevels);

    /// Exact encoding of a triangular number on the levels {0, 1}.
    static ParametricFuzzyNumber from_triangular(const TriangularFuzzyNumber& u);

    const std::vector<double>& alphas() const noexcept { return alphas_; }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }

    /// u_L(alpha) and u_R(alpha); alpha must lie in [0, 1].
    double lower_at(double alpha) const;
    double upper_at(double alpha) const;

    /// Resamples both branches onto another alpha grid (which must start at
    /// 0 and end at 1).
    ParametricFuzzyNumber resampled(std::span<const double> alphas) const;

    friend bool operator==(const ParametricFuzzyNumber&, const ParametricFuzzyNumber&) = default;

private:
    double interpolate(const std::vector<double>& branch, double alpha) const;

    std::vector<double> alphas_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

using FuzzyNumber = std::variant<TriangularFuzzyNumber, ParametricFuzzyNumber>;

Interval alpha_cut(const TriangularFuzzyNumber& u, double alpha);
Interval alpha_cut(const ParametricFuzzyNumber& u, double alpha);
Interval alpha_cut(const FuzzyNumber& u, double alpha);

/// Largest alpha whose cut contains x, or 0 outside the support.
double membership(const TriangularFuzzyNumber& u, double x);
double membership(const ParametricFuzzyNumber& u, double x);
double membership(const FuzzyNumber& u, double x);

/// Value with possibility 1.
double vertex(const FuzzyNumber& u);

/// Promotes to parametric form; triangular numbers map to levels {0, 1}.
ParametricFuzzyNumber to_parametric(const FuzzyNumber& u);

/// Multiplication by a real number, level by level.
TriangularFuzzyNumber scale(double c, const TriangularFuzzyNumber& u);
ParametricFuzzyNumber scale(double c, const ParametricFuzzyNumber& u);
FuzzyNumber scale(double c, const FuzzyNumber& u);

/// Level-wise interval addition. Triangular operands stay triangular; mixed
/// operands are promoted to parametric form on the union of alpha grids.
TriangularFuzzyNumber add(const TriangularFuzzyNumber& u, const TriangularFuzzyNumber& v);
ParametricFuzzyNumber add(const ParametricFuzzyNumber& u, const ParametricFuzzyNumber& v);
FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v);

/// Adds a crisp real to a fuzzy number.
FuzzyNumber add(double c, const FuzzyNumber& u);

struct CrispSplit {
    double crisp;
    FuzzyNumber uncertain;  ///< vertex exactly 0
};

/// Writes u as crisp + uncertain where crisp is the vertex of u.
CrispSplit split_crisp(const FuzzyNumber& u);

}  // namespace fbvp
