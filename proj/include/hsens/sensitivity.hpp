#pragma once

// Probabilistic sensitivity analysis of the h-index: one covariate is swept
// over a grid while the other stays at its median, and every posterior draw
// is pushed through the model mean. The spread of the output is condensed
// into the sensitivity index SI = (h_max - h_min) / h_max.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "hsens/dataset.hpp"
#include "hsens/mcmc.hpp"
#include "hsens/models.hpp"
#include "hsens/quantile.hpp"

namespace hsens {

enum class Covariate { P, C };
enum class GridMode { Global, Local };

std::string_view to_string(Covariate c);
std::string_view to_string(GridMode m);
Covariate parse_covariate(std::string_view s);
GridMode parse_grid_mode(std::string_view s);

class UnsupportedCombination : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SensitivityGrid {
    Covariate varied = Covariate::C;
    std::vector<double> values;  // ascending
    double fixed_value = 0.0;    // the other covariate
    GridMode mode = GridMode::Global;
};

// Percentile levels of the global grid.
inline constexpr double kGlobalPercentiles[] = {5, 10, 25, 50, 75, 90, 95};
// Local grid: median x (0.70, 0.75, ..., 1.30).
inline constexpr std::size_t kLocalGridPoints = 13;

SensitivityGrid build_global_grid(const Dataset& data, Covariate varied);
SensitivityGrid build_local_grid(const Dataset& data, Covariate varied);

struct CurvePoint {
    double grid_value = 0.0;
    double h_mean = 0.0;
    double h_q025 = 0.0;
    double h_q50 = 0.0;
    double h_q975 = 0.0;
};

struct SensitivityCurve {
    Covariate varied = Covariate::C;
    GridMode mode = GridMode::Global;
    std::vector<CurvePoint> points;
    std::vector<double> draw_si;  // SI of each propagated draw's curve
    std::size_t draws_used = 0;
};

struct PropagateOptions {
    std::size_t max_draws = 5000;
    bool thin = true;  // evenly subsample down to max_draws
};

// Throws UnsupportedCombination when the grid varies P for a model whose
// mean does not depend on P.
SensitivityCurve propagate(const Chain& chain, ModelKind kind, const SensitivityGrid& grid,
                           const PropagateOptions& options = {});

struct SIResult {
    double si = 0.0;
    double h_max = 0.0;
    double h_min = 0.0;
    std::vector<double> progressive;  // SI over grid prefixes 1..n
    double si_q025 = 0.0;             // band of per-draw SIs, when available
    double si_q975 = 0.0;
};

// SI over the per-grid-point posterior means.
SIResult sensitivity_index(const SensitivityCurve& curve);
// SI of a bare sequence of outputs.
double sensitivity_index(std::span<const double> outputs);

}  // namespace hsens
