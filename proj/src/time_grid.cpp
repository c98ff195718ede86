#include "mtlr/time_grid.hpp"

#include <algorithm>
#include <cmath>

#include "mtlr/errors.hpp"

namespace mtlr {

TimeGrid::TimeGrid(std::vector<double> edges) : edges_(std::move(edges)) {
    if (edges_.empty()) {
        throw DataError("time grid needs at least one interior edge (K >= 2)");
    }
    double prev = 0.0;
    for (double e : edges_) {
        if (!(e > prev)) {
            throw DataError("time grid edges must be strictly increasing and positive");
        }
        prev = e;
    }
}

int TimeGrid::bin(double t) const {
    if (t < 0.0) {
        throw DataError("cannot bin a negative time");
    }
    // Number of edges strictly below t; intervals are right-closed, so an
    // exact edge hit stays in the interval it closes.
    auto it = std::lower_bound(edges_.begin(), edges_.end(), t);
    return static_cast<int>(it - edges_.begin()) + 1;
}

double quantile(std::vector<double> values, double p) {
    if (values.empty()) {
        throw DataError("quantile of empty sample");
    }
    std::sort(values.begin(), values.end());
    const auto n = values.size();
    double h = static_cast<double>(n - 1) * p;
    auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return values[n - 1];
    double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

TimeGrid build_grid(const std::vector<SubjectRecord>& train_records, int k,
                    GridSpacing spacing) {
    std::vector<double> event_times;
    event_times.reserve(train_records.size());
    for (const auto& r : train_records) {
        if (r.event != 0) event_times.push_back(r.time);
    }
    if (event_times.empty()) {
        throw DataError("no events to place grid");
    }
    if (k != 0 && k < 2) {
        throw DataError("interval count k must be at least 2");
    }
    int n_intervals = k;
    if (n_intervals == 0) {
        // Round half up; clamp so tiny cohorts still get a usable grid.
        n_intervals = static_cast<int>(
            std::floor(std::sqrt(static_cast<double>(train_records.size())) + 0.5));
        n_intervals = std::max(n_intervals, 2);
    }

    std::vector<double> edges;
    edges.reserve(n_intervals - 1);
    if (spacing == GridSpacing::Quantile) {
        for (int i = 1; i < n_intervals; ++i) {
            edges.push_back(quantile(event_times, static_cast<double>(i) / n_intervals));
        }
    } else {
        double t_max = *std::max_element(event_times.begin(), event_times.end());
        for (int i = 1; i < n_intervals; ++i) {
            edges.push_back(t_max * static_cast<double>(i) / n_intervals);
        }
    }

    // Heavy ties collapse neighboring quantiles; merge them instead of failing.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::erase_if(edges, [](double e) { return e <= 0.0; });
    if (edges.empty()) {
        throw DataError("no usable grid edges (all event times at zero?)");
    }
    return TimeGrid(std::move(edges));
}

}  // namespace mtlr
