#include "fbvp/fuzzy_number.hpp"

#include "fbvp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fbvp {

namespace {

void require_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha level " + std::to_string(alpha) + " outside [0, 1]");
    }
}

std::vector<double> union_grid(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Largest alpha with branch(alpha) <= x for a non-decreasing branch, assuming
// branch(0) <= x.
double last_level_below(const std::vector<double>& alphas, const std::vector<double>& branch,
                        double x) {
    for (std::size_t k = 0; k + 1 < alphas.size(); ++k) {
        if (branch[k + 1] > x) {
            const double rise = branch[k + 1] - branch[k];
            const double frac = rise > 0.0 ? (x - branch[k]) / rise : 0.0;
            return alphas[k] + std::clamp(frac, 0.0, 1.0) * (alphas[k + 1] - alphas[k]);
        }
    }
    return 1.0;
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) {
        throw DomainError("interval lower bound " + std::to_string(lo) + " exceeds upper bound " +
                          std::to_string(hi));
    }
}

TriangularFuzzyNumber::TriangularFuzzyNumber(double left, double peak, double right)
    : left_(left), peak_(peak), right_(right) {
    if (!std::isfinite(left) || !std::isfinite(peak) || !std::isfinite(right)) {
        throw FuzzyNumberError("triangular fuzzy number has a non-finite component");
    }
    if (!(left <= peak && peak <= right)) {
        throw FuzzyNumberError("triangular fuzzy number requires l <= m <= r");
    }
}

ParametricFuzzyNumber::ParametricFuzzyNumber(std::vector<double> alphas, std::vector<double> lower,
                                             std::vector<double> upper)
    : alphas_(std::move(alphas)), lower_(std::move(lower)), upper_(std::move(upper)) {
    const std::size_t k = alphas_.size();
    if (k < 2) throw FuzzyNumberError("parametric fuzzy number needs at least two alpha levels");
    if (lower_.size() != k || upper_.size() != k) {
        throw FuzzyNumberError("parametric branches must have one value per alpha level");
    }
    if (alphas_.front() != 0.0 || alphas_.back() != 1.0) {
        throw FuzzyNumberError("alpha levels must start at 0 and end at 1");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i])) {
            throw FuzzyNumberError("parametric branch value is not finite");
        }
        if (i > 0) {
            if (!(alphas_[i] > alphas_[i - 1])) {
                throw FuzzyNumberError("alpha levels must be strictly increasing");
            }
            if (lower_[i] < lower_[i - 1] - kFuzzyTolerance) {
                throw FuzzyNumberError("lower branch decreases at alpha " +
                                       std::to_string(alphas_[i]));
            }
            if (upper_[i] > upper_[i - 1] + kFuzzyTolerance) {
                throw FuzzyNumberError("upper branch increases at alpha " +
                                       std::to_string(alphas_[i]));
            }
        }
        if (lower_[i] > upper_[i] + kFuzzyTolerance) {
            throw FuzzyNumberError("lower branch exceeds upper branch at alpha " +
                                   std::to_string(alphas_[i]));
        }
    }
    if (std::abs(lower_.back() - upper_.back()) > kFuzzyTolerance) {
        throw VertexError("branches differ at alpha = 1; only numbers with a unique vertex are supported");
    }
}

ParametricFuzzyNumber ParametricFuzzyNumber::from_branches(
    const std::function<double(double)>& lower, const std::function<double(double)>& upper,
    int levels) {
    if (levels < 2) throw FuzzyNumberError("need at least two alpha levels");
    std::vector<double> alphas(levels), lo(levels), hi(levels);
    for (int i = 0; i < levels; ++i) {
        alphas[i] = i == levels - 1 ? 1.0 : static_cast<double>(i) / (levels - 1);
        lo[i] = lower(alphas[i]);
        hi[i] = upper(alphas[i]);
    }
    return {std::move(alphas), std::move(lo), std::move(hi)};
}

ParametricFuzzyNumber ParametricFuzzyNumber::from_triangular(const TriangularFuzzyNumber& u) {
    return {{0.0, 1.0}, {u.left(), u.peak()}, {u.right(), u.peak()}};
}

double ParametricFuzzyNumber::interpolate(const std::vector<double>& branch, double alpha) const {
    require_alpha(alpha);
    auto it = std::lower_bound(alphas_.begin(), alphas_.end(), alpha);
    const auto k = static_cast<std::size_t>(it - alphas_.begin());
    if (alphas_[k] == alpha) return branch[k];
    const double frac = (alpha - alphas_[k - 1]) / (alphas_[k] - alphas_[k - 1]);
    return branch[k - 1] + frac * (branch[k] - branch[k - 1]);
}

double ParametricFuzzyNumber::lower_at(double alpha) const { return interpolate(lower_, alpha); }

double ParametricFuzzyNumber::upper_at(double alpha) const { return interpolate(upper_, alpha); }

ParametricFuzzyNumber ParametricFuzzyNumber::resampled(std::span<const double> alphas) const {
    std::vector<double> grid(alphas.begin(), alphas.end());
    std::vector<double> lo(grid.size()), hi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        lo[i] = lower_at(grid[i]);
        hi[i] = upper_at(grid[i]);
    }
    return {std::move(grid), std::move(lo), std::move(hi)};
}

Interval alpha_cut(const TriangularFuzzyNumber& u, double alpha) {
    require_alpha(alpha);
    const double lo = u.left() + alpha * (u.peak() - u.left());
    const double hi = u.right() - alpha * (u.right() - u.peak());
    return {lo, std::max(lo, hi)};
}

Interval alpha_cut(const ParametricFuzzyNumber& u, double alpha) {
    const double lo = u.lower_at(alpha);
    return {lo, std::max(lo, u.upper_at(alpha))};
}

Interval alpha_cut(const FuzzyNumber& u, double alpha) {
    return std::visit([alpha](const auto& v) { return alpha_cut(v, alpha); }, u);
}

double membership(const TriangularFuzzyNumber& u, double x) {
    if (x < u.left() || x > u.right()) return 0.0;
    if (x == u.peak()) return 1.0;
    if (x < u.peak()) return (x - u.left()) / (u.peak() - u.left());
    return (u.right() - x) / (u.right() - u.peak());
}

double membership(const ParametricFuzzyNumber& u, double x) {
    const auto& lo = u.lower();
    const auto& hi = u.upper();
    if (x < lo.front() || x > hi.front()) return 0.0;
    const double from_lower = last_level_below(u.alphas(), lo, x);
    // The upper branch is handled by mirroring: -u_R is non-decreasing.
    std::vector<double> mirrored(hi.size());
    std::transform(hi.begin(), hi.end(), mirrored.begin(), [](double v) { return -v; });
    const double from_upper = last_level_below(u.alphas(), mirrored, -x);
    return std::min(from_lower, from_upper);
}

double membership(const FuzzyNumber& u, double x) {
    return std::visit([x](const auto& v) { return membership(v, x); }, u);
}

double vertex(const FuzzyNumber& u) {
    if (const auto* tri = std::get_if<TriangularFuzzyNumber>(&u)) return tri->peak();
    return std::get<ParametricFuzzyNumber>(u).lower().back();
}

ParametricFuzzyNumber to_parametric(const FuzzyNumber& u) {
    if (const auto* tri = std::get_if<TriangularFuzzyNumber>(&u)) {
        return ParametricFuzzyNumber::from_triangular(*tri);
    }
    return std::get<ParametricFuzzyNumber>(u);
}

TriangularFuzzyNumber scale(double c, const TriangularFuzzyNumber& u) {
    if (c >= 0.0) return {c * u.left(), c * u.peak(), c * u.right()};
    return {c * u.right(), c * u.peak(), c * u.left()};
}

ParametricFuzzyNumber scale(double c, const ParametricFuzzyNumber& u) {
    const auto& lo = u.lower();
    const auto& hi = u.upper();
    std::vector<double> new_lo(lo.size()), new_hi(hi.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        new_lo[i] = c >= 0.0 ? c * lo[i] : c * hi[i];
        new_hi[i] = c >= 0.0 ? c * hi[i] : c * lo[i];
    }
    return {u.alphas(), std::move(new_lo), std::move(new_hi)};
}

FuzzyNumber scale(double c, const FuzzyNumber& u) {
    return std::visit([c](const auto& v) -> FuzzyNumber { return scale(c, v); }, u);
}

TriangularFuzzyNumber add(const TriangularFuzzyNumber& u, const TriangularFuzzyNumber& v) {
    return {u.left() + v.left(), u.peak() + v.peak(), u.right() + v.right()};
}

ParametricFuzzyNumber add(const ParametricFuzzyNumber& u, const ParametricFuzzyNumber& v) {
    if (u.alphas() != v.alphas()) {
        const auto grid = union_grid(u.alphas(), v.alphas());
        return add(u.resampled(grid), v.resampled(grid));
    }
    std::vector<double> lo(u.alphas().size()), hi(u.alphas().size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        lo[i] = u.lower()[i] + v.lower()[i];
        hi[i] = u.upper()[i] + v.upper()[i];
    }
    return {u.alphas(), std::move(lo), std::move(hi)};
}

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
    const auto* tu = std::get_if<TriangularFuzzyNumber>(&u);
    const auto* tv = std::get_if<TriangularFuzzyNumber>(&v);
    if (tu && tv) return add(*tu, *tv);
    return add(to_parametric(u), to_parametric(v));
}

FuzzyNumber add(double c, const FuzzyNumber& u) {
    if (const auto* tri = std::get_if<TriangularFuzzyNumber>(&u)) {
        return add(TriangularFuzzyNumber::crisp(c), *tri);
    }
    const auto& p = std::get<ParametricFuzzyNumber>(u);
    std::vector<double> lo = p.lower();
    std::vector<double> hi = p.upper();
    for (auto& x : lo) x += c;
    for (auto& x : hi) x += c;
    return ParametricFuzzyNumber(p.alphas(), std::move(lo), std::move(hi));
}

CrispSplit split_crisp(const FuzzyNumber& u) {
    if (const auto* tri = std::get_if<TriangularFuzzyNumber>(&u)) {
        const double m = tri->peak();
        return {m, TriangularFuzzyNumber(tri->left() - m, 0.0, tri->right() - m)};
    }
    const auto& p = std::get<ParametricFuzzyNumber>(u);
    if (std::abs(p.lower().back() - p.upper().back()) > kFuzzyTolerance) {
        throw VertexError("fuzzy number has no unique vertex");
    }
    const double m = p.lower().back();
    std::vector<double> lo = p.lower();
    std::vector<double> hi = p.upper();
    for (auto& x : lo) x -= m;
    for (auto& x : hi) x -= m;
    lo.back() = 0.0;
    hi.back() = 0.0;
    return {m, ParametricFuzzyNumber(p.alphas(), std::move(lo), std::move(hi))};
}

}  // namespace fbvp
