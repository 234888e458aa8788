#pragma once

// File formats shared by the CLI and downstream tools:
//   chain CSV     iter,<param...>,deviance
//   summary JSON  {model, likelihood, params{...}, mean_deviance, config, ...}
//   curve CSV     grid_value,h_mean,h_q025,h_q50,h_q975
//   SI JSON       {model, likelihood, varied, mode, si, h_max, h_min, progressive}

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hsens/likelihood.hpp"
#include "hsens/mcmc.hpp"
#include "hsens/models.hpp"
#include "hsens/sensitivity.hpp"

namespace hsens {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_chain_csv(std::ostream& out, const Chain& chain);
void write_chain_csv(std::ostream& out, const std::vector<Chain>& chains);

// Restores names, draws and deviances. burn_in and thin are recovered from
// the iteration column; sampler statistics are not stored and come back empty.
Chain read_chain_csv(std::istream& in);

// Model family and likelihood implied by a chain's parameter names.
std::pair<ModelKind, ObservationKind> infer_model(const std::vector<std::string>& param_names);

Json config_to_json(const SamplerConfig& config);

struct FitRecord {
    ModelKind model = ModelKind::GlanzelSchubert;
    ObservationKind likelihood = ObservationKind::TruncGaussian;
    PosteriorSummary summary;
    double mean_deviance = 0.0;
    SamplerConfig config;
    std::uint64_t data_hash = 0;
    std::size_t n_records = 0;
    std::vector<double> accept_rates;
};

Json summary_to_json(const FitRecord& fit);
// Reads back the fields needed for model comparison.
FitRecord summary_from_json(const Json& j);

std::string hash_to_hex(std::uint64_t hash);

void write_curve_csv(std::ostream& out, const SensitivityCurve& curve);
std::vector<CurvePoint> read_curve_csv(std::istream& in);

Json si_to_json(ModelKind model, ObservationKind likelihood, const SensitivityCurve& curve,
                const SIResult& si);

}  // namespace hsens
