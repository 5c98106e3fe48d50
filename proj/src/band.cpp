#include "fbvp/band.hpp"

#include <algorithm>
#include <string>

namespace fbvp {

SolutionBand::SolutionBand(TimeGrid grid, std::vector<double> alphas, std::vector<Interval> cuts)
    : grid_(grid), alphas_(std::move(alphas)), cuts_(std::move(cuts)) {
    if (cuts_.size() != grid_.num_points() * alphas_.size()) {
        throw ValidationError("band needs one interval per node and alpha level");
    }
}

std::size_t SolutionBand::level_index(double alpha) const {
    auto it = std::find(alphas_.begin(), alphas_.end(), alpha);
    if (it == alphas_.end()) {
        throw DomainError("alpha level " + std::to_string(alpha) + " not present in band");
    }
    return static_cast<std::size_t>(it - alphas_.begin());
}

std::vector<double> normalize_alphas(std::span<const double> alphas) {
    std::vector<double> out(alphas.begin(), alphas.end());
    for (double a : out) {
        if (!(a >= 0.0 && a <= 1.0)) {
            throw DomainError("alpha level " + std::to_string(a) + " outside [0, 1]");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw DomainError("at least one alpha level is required");
    return out;
}

}  // namespace fbvp
