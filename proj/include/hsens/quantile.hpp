#pragma once

// Empirical quantiles by linear interpolation between order statistics
// (Hyndman-Fan type 7, the R default). Used for posterior summaries,
// descriptive tables and sensitivity grids alike.

#include <span>
#include <vector>

namespace hsens {

// p in [0, 1]; `sorted` must be ascending and nonempty.
double quantile_sorted(std::span<const double> sorted, double p);

// p in [0, 1]. Throws std::invalid_argument on empty input.
double quantile(std::span<const double> values, double p);

// Percentile p in [0, 100].
double percentile(std::span<const double> values, double p);

std::vector<double> quantiles(std::span<const double> values, std::span<const double> probs);

}  // namespace hsens
