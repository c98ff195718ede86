#pragma once

#include <vector>

#include "mtlr/types.hpp"

namespace mtlr {

enum class GridSpacing { Quantile, Uniform };

// Discretization of the time axis into K right-closed intervals
// (t_{k-1}, t_k], k = 1..K, with t_0 = 0 and t_K = infinity. Only the
// interior edges t_1 < ... < t_{K-1} are stored; they must be strictly
// increasing and positive.
class TimeGrid {
public:
    explicit TimeGrid(std::vector<double> edges);

    int n_intervals() const { return static_cast<int>(edges_.size()) + 1; }
    const std::vector<double>& edges() const { return edges_; }

    // Interval index of t, 1-based. t = 0 maps to interval 1; any t past the
    // last edge maps to interval K. Negative t is an error.
    int bin(double t) const;

private:
    std::vector<double> edges_;
};

// Places K-1 interior edges from the uncensored event times of the training
// records. If k == 0 the interval count defaults to round(sqrt(N_train)),
// clamped to at least 2. Quantile spacing puts edges at the empirical
// quantiles (linear interpolation between order statistics) at levels
// 1/K .. (K-1)/K; uniform spacing spreads them evenly over (0, max event
// time]. Duplicate or non-positive edges are dropped, reducing K.
TimeGrid build_grid(const std::vector<SubjectRecord>& train_records, int k = 0,
                    GridSpacing spacing = GridSpacing::Quantile);

// Empirical quantile of a sample with linear interpolation between order
// statistics: q(p) = v_(i) + frac * (v_(i+1) - v_(i)) where i = floor((n-1)p).
double quantile(std::vector<double> values, double p);

}  // namespace mtlr
