#include "hsens/sensitivity.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>

namespace hsens {

std::string_view to_string(Covariate c) { return c == Covariate::P ? "P" : "C"; }
std::string_view to_string(GridMode m) { return m == GridMode::Global ? "global" : "local"; }

Covariate parse_covariate(std::string_view s) {
    if (s == "P") return Covariate::P;
    if (s == "C") return Covariate::C;
    throw std::invalid_argument("covariate must be P or C, got '" + std::string(s) + "'");
}

GridMode parse_grid_mode(std::string_view s) {
    if (s == "global") return GridMode::Global;
    if (s == "local") return GridMode::Local;
    throw std::invalid_argument("grid mode must be global or local, got '" + std::string(s) + "'");
}

namespace {

std::pair<std::vector<double>, std::vector<double>> covariate_columns(const Dataset& data, Covariate varied) {
    if (data.empty()) throw std::invalid_argument("sensitivity grid needs a nonempty dataset");
    std::vector<double> v, other;
    for (const auto& r : data.records) {
        v.push_back(varied == Covariate::P ? r.P : r.C);
        other.push_back(varied == Covariate::P ? r.C : r.P);
    }
    return {v, other};
}

}  // namespace

SensitivityGrid build_global_grid(const Dataset& data, Covariate varied) {
    const auto [v, other] = covariate_columns(data, varied);
    SensitivityGrid grid;
    grid.varied = varied;
    grid.mode = GridMode::Global;
    grid.values = quantiles(v, [] {
        std::vector<double> probs;
        for (double p : kGlobalPercentiles) probs.push_back(p / 100.0);
        return probs;
    }());
    grid.fixed_value = percentile(other, 50.0);
    return grid;
}

SensitivityGrid build_local_grid(const Dataset& data, Covariate varied) {
    const auto [v, other] = covariate_columns(data, varied);
    const double median = percentile(v, 50.0);
    SensitivityGrid grid;
    grid.varied = varied;
    grid.mode = GridMode::Local;
    for (std::size_t k = 0; k < kLocalGridPoints; ++k) {
        grid.values.push_back(median * static_cast<double>(70 + 5 * k) / 100.0);
    }
    grid.fixed_value = percentile(other, 50.0);
    return grid;
}

SensitivityCurve propagate(const Chain& chain, ModelKind kind, const SensitivityGrid& grid,
                           const PropagateOptions& options) {
    if (grid.varied == Covariate::P && !uses_publications(kind)) {
        throw UnsupportedCombination("model " + std::string(to_string(kind)) +
                                     " does not depend on P; P-sensitivity is undefined");
    }
    if (grid.values.empty()) throw std::invalid_argument("empty sensitivity grid");
    if (!std::is_sorted(grid.values.begin(), grid.values.end())) {
        throw std::invalid_argument("sensitivity grid must be ascending");
    }
    if (chain.n_draws() == 0) throw std::invalid_argument("chain has no draws");

    std::vector<std::size_t> columns;
    for (const auto& name : mean_param_names(kind)) columns.push_back(chain.param_index(name));

    std::size_t stride = 1;
    if (options.thin && options.max_draws > 0 && chain.n_draws() > options.max_draws) {
        stride = (chain.n_draws() + options.max_draws - 1) / options.max_draws;
    }
    std::vector<ParamVector> draws;
    for (std::size_t i = 0; i < chain.n_draws(); i += stride) {
        ParamVector p;
        p.alpha = chain.at(i, columns[0]);
        if (kind == ModelKind::GlanzelSchubert) {
            p.c = chain.at(i, columns[1]);
        } else if (kind == ModelKind::HirschGaussian || kind == ModelKind::HirschNB) {
            p.a = chain.at(i, columns[1]);
            p.b = chain.at(i, columns[2]);
        }
        draws.push_back(p);
    }

    // One task per grid point; each owns its output slot.
    std::vector<std::vector<double>> outputs(grid.values.size());
    std::vector<std::future<void>> tasks;
    for (std::size_t g = 0; g < grid.values.size(); ++g) {
        tasks.push_back(std::async(std::launch::async, [&, g] {
            const Covariates cov = grid.varied == Covariate::C ? Covariates{grid.fixed_value, grid.values[g]}
                                                                : Covariates{grid.values[g], grid.fixed_value};
            auto& mu = outputs[g];
            mu.reserve(draws.size());
            for (const auto& p : draws) mu.push_back(evaluate_mean(kind, p, cov));
        }));
    }
    for (auto& t : tasks) t.get();

    SensitivityCurve curve;
    curve.varied = grid.varied;
    curve.mode = grid.mode;
    curve.draws_used = draws.size();
    for (std::size_t g = 0; g < grid.values.size(); ++g) {
        const auto& mu = outputs[g];
        std::vector<double> sorted = mu;
        std::sort(sorted.begin(), sorted.end());
        CurvePoint pt;
        pt.grid_value = grid.values[g];
        pt.h_mean = std::accumulate(mu.begin(), mu.end(), 0.0) / static_cast<double>(mu.size());
        pt.h_q025 = quantile_sorted(sorted, 0.025);
        pt.h_q50 = quantile_sorted(sorted, 0.5);
        pt.h_q975 = quantile_sorted(sorted, 0.975);
        curve.points.push_back(pt);
    }

    curve.draw_si.reserve(draws.size());
    std::vector<double> row(grid.values.size());
    for (std::size_t d = 0; d < draws.size(); ++d) {
        for (std::size_t g = 0; g < row.size(); ++g) row[g] = outputs[g][d];
        const double hi = *std::max_element(row.begin(), row.end());
        curve.draw_si.push_back(hi > 0.0 ? sensitivity_index(row) : 0.0);
    }
    return curve;
}

double sensitivity_index(std::span<const double> outputs) {
    if (outputs.empty()) throw std::invalid_argument("sensitivity index of an empty curve");
    const auto [lo, hi] = std::minmax_element(outputs.begin(), outputs.end());
    if (!(*hi > 0.0)) throw std::domain_error("sensitivity index needs h_max > 0");
    return (*hi - *lo) / *hi;
}

SIResult sensitivity_index(const SensitivityCurve& curve) {
    std::vector<double> means;
    for (const auto& p : curve.points) means.push_back(p.h_mean);
    SIResult out;
    out.si = sensitivity_index(means);
    const auto [lo, hi] = std::minmax_element(means.begin(), means.end());
    out.h_min = *lo;
    out.h_max = *hi;
    for (std::size_t k = 1; k <= means.size(); ++k) {
        const std::span<const double> prefix(means.data(), k);
        const double prefix_max = *std::max_element(prefix.begin(), prefix.end());
        out.progressive.push_back(prefix_max > 0.0 ? sensitivity_index(prefix) : 0.0);
    }
    if (!curve.draw_si.empty()) {
        out.si_q025 = quantile(curve.draw_si, 0.025);
        out.si_q975 = quantile(curve.draw_si, 0.975);
    }
    return out;
}

}  // namespace hsens
