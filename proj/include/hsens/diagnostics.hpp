#pragma once

// Convergence diagnostics for MCMC output.

#include <span>
#include <vector>

namespace hsens {

// Integrated autocorrelation time from Geyer's initial positive sequence,
// with the monotone correction. A constant series has tau = 1.
double integrated_autocorr_time(std::span<const double> x);

// n / tau.
double effective_sample_size(std::span<const double> x);

// Geweke z-score comparing the mean of the first `first` fraction of the
// series with the last `last` fraction. Segment variances use the
// autocorrelation-corrected estimate var / ess.
double geweke_z(std::span<const double> x, double first = 0.1, double last = 0.5);

// Split R-hat over several equal-length chains (each split in half).
double split_rhat(const std::vector<std::span<const double>>& chains);

}  // namespace hsens
