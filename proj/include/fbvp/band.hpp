#pragma once

#include "fbvp/fuzzy_number.hpp"
#include "fbvp/problem.hpp"

#include <span>
#include <vector>

namespace fbvp {

/// alpha-cut intervals [x_lo(t), x_hi(t)] of a fuzzy solution at every node of
/// a grid and every requested alpha level.
class SolutionBand {
public:
    SolutionBand(TimeGrid grid, std::vector<double> alphas, std::vector<Interval> cuts);

    const TimeGrid& grid() const noexcept { return grid_; }
    const std::vector<double>& alphas() const noexcept { return alphas_; }

    const Interval& at(std::size_t node, std::size_t level) const {
        return cuts_[node * alphas_.size() + level];
    }

    /// Index of `alpha` in alphas(), or throws DomainError when absent.
    std::size_t level_index(double alpha) const;

private:
    TimeGrid grid_;
    std::vector<double> alphas_;
    std::vector<Interval> cuts_;
};

/// Sorts ascending, removes duplicates, and rejects levels outside [0, 1].
std::vector<double> normalize_alphas(std::span<const double> alphas);

}  // namespace fbvp
