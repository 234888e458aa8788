#pragma once

// Bayesian fitting of the h-index models: priors, the unnormalized log
// posterior, an adaptive component-wise random-walk Metropolis sampler,
// posterior summaries and a 1-D quadrature oracle for checking the sampler.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hsens/dataset.hpp"
#include "hsens/likelihood.hpp"
#include "hsens/models.hpp"

namespace hsens {

// Normal(mean, variance) truncated to (lower, inf).
struct TruncNormalPrior {
    double mean = 0.0;
    double variance = 1.0;
    double lower = 0.0;
};

// Gamma with shape/rate parameterization, support (0, inf).
struct GammaPrior {
    double shape = 1.0;
    double rate = 1.0;
};

using PriorSpec = std::variant<TruncNormalPrior, GammaPrior>;
using PriorMap = std::map<std::string, PriorSpec>;

double log_prior_density(const PriorSpec& prior, double x);
double support_lower(const PriorSpec& prior);

// Vague priors: Normal(1, 100) on alpha, a, b and Normal(0, 100) on c, each
// truncated at its model bound; Gamma(0.001, 0.001) on the Gaussian
// precision tau and on the NB dispersion r.
PriorMap default_priors(ModelKind kind, ObservationKind obs);

// Name of the observation-model parameter: "tau" or "r".
std::string_view observation_param_name(ObservationKind obs);

class InitializationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unnormalized posterior over (mean params..., tau | r) for one model,
// observation model, prior set and dataset.
class PosteriorTarget {
public:
    PosteriorTarget(ModelKind kind, ObservationKind obs, PriorMap priors, Dataset data);

    ModelKind model() const noexcept { return kind_; }
    ObservationKind observation() const noexcept { return obs_; }
    const Dataset& data() const noexcept { return data_; }
    const PriorMap& priors() const noexcept { return priors_; }

    const std::vector<std::string>& param_names() const noexcept { return names_; }
    const std::vector<double>& lower_bounds() const noexcept { return lower_; }
    std::size_t dimension() const noexcept { return names_.size(); }
    std::size_t index_of(std::string_view name) const;

    // Lower bound + 1 for mean parameters; 1 for tau and r.
    std::vector<double> default_inits() const;

    std::pair<ParamVector, ObservationModel> unpack(std::span<const double> theta) const;

    // -inf outside the support.
    double log_prior(std::span<const double> theta) const;
    double log_likelihood(std::span<const double> theta) const;
    double log_posterior(std::span<const double> theta) const;
    double deviance(std::span<const double> theta) const;

private:
    ModelKind kind_;
    ObservationKind obs_;
    PriorMap priors_;
    Dataset data_;
    std::vector<std::string> names_;
    std::vector<double> lower_;
    std::vector<const PriorSpec*> prior_of_;
};

struct SamplerConfig {
    std::size_t iterations = 50000;  // post burn-in sweeps
    std::size_t burn_in = 5000;
    std::uint64_t seed = 1;
    double target_acceptance = 0.44;
    std::size_t thin = 1;
    std::size_t chains = 1;

    void validate() const;
    std::size_t kept_draws() const noexcept { return iterations / thin; }

    friend bool operator==(const SamplerConfig&, const SamplerConfig&) = default;
};

struct Chain {
    std::vector<std::string> param_names;
    std::vector<double> draws;  // row-major, kept draws x params
    std::vector<double> deviance_draws;
    std::vector<double> accept_rates;
    std::vector<double> proposal_scales;
    SamplerConfig config;

    std::size_t n_params() const noexcept { return param_names.size(); }
    std::size_t n_draws() const noexcept { return deviance_draws.size(); }
    std::size_t param_index(std::string_view name) const;
    double at(std::size_t draw, std::size_t param) const { return draws[draw * n_params() + param]; }
    std::vector<double> column(std::size_t param) const;
    std::vector<double> column(std::string_view name) const { return column(param_index(name)); }
    // Absolute sweep number of a kept draw.
    std::size_t iteration_of(std::size_t draw) const noexcept {
        return config.burn_in + (draw + 1) * config.thin;
    }

    friend bool operator==(const Chain&, const Chain&) = default;
};

// Metropolis-within-Gibbs: each sweep updates every free component in turn
// with a Gaussian random walk on log(x - lower). Proposal scales follow a
// Robbins-Monro recursion toward the target acceptance rate while
// iteration < burn_in and are frozen afterwards.
class ComponentwiseMetropolis {
public:
    ComponentwiseMetropolis(const PosteriorTarget& target, std::vector<double> inits,
                            const SamplerConfig& config, std::vector<bool> fixed = {});

    void sweep();

    std::size_t iteration() const noexcept { return iteration_; }
    bool adapting() const noexcept { return iteration_ < config_.burn_in; }
    std::span<const double> state() const noexcept { return state_; }
    std::span<const double> proposal_scales() const noexcept { return scales_; }
    double log_posterior() const noexcept { return log_post_; }
    double deviance() const noexcept { return -2.0 * log_lik_; }
    std::vector<double> acceptance_rates() const;

private:
    double proposal_log_posterior(std::size_t j, double value, double& log_lik);

    const PosteriorTarget& target_;
    SamplerConfig config_;
    std::vector<bool> fixed_;
    std::vector<double> state_;
    std::vector<double> scales_;
    std::vector<std::size_t> accepted_;
    std::vector<std::size_t> proposed_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::size_t iteration_ = 0;
    double log_post_ = 0.0;
    double log_lik_ = 0.0;
    std::vector<double> scratch_;
};

// Runs burn_in + iterations sweeps and keeps every thin-th post burn-in
// state. Components flagged in `fixed` stay at their initial value.
Chain run_chain(const PosteriorTarget& target, const SamplerConfig& config,
                std::vector<double> inits, std::vector<bool> fixed = {});

// config.chains independent chains, seeds seed, seed+1, ..., run concurrently.
std::vector<Chain> run_chains(const PosteriorTarget& target, const SamplerConfig& config,
                              const std::vector<double>& inits, const std::vector<bool>& fixed = {});

// Concatenates chains with identical parameter layout.
Chain pool_chains(const std::vector<Chain>& chains);

struct ParamSummary {
    std::string name;
    double mean = 0.0;
    double median = 0.0;
    double ci_low = 0.0;   // 2.5% quantile
    double ci_high = 0.0;  // 97.5% quantile
    double ess = 0.0;
    double geweke_z = 0.0;
    std::optional<double> rhat;
};

struct PosteriorSummary {
    std::vector<ParamSummary> params;

    const ParamSummary& operator[](std::string_view name) const;
};

PosteriorSummary summarize(const Chain& chain);
// Pooled summary over several chains, with split R-hat per parameter.
PosteriorSummary summarize(const std::vector<Chain>& chains);

double mean_deviance(const Chain& chain);

struct TracePoint {
    std::size_t iteration;
    double value;
};

// Kept draws of one parameter (or "deviance") in sampling order.
std::vector<TracePoint> export_trace(const Chain& chain, std::string_view param);

struct GridSpec {
    double lower = 0.0;
    double upper = 1.0;
    std::size_t points = 4001;
};

struct GridPosterior {
    double mean = 0.0;
    double mode = 0.0;
    double q025 = 0.0;
    double q50 = 0.0;
    double q975 = 0.0;
};

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Trapezoid-rule normalization of exp(log_density) on a uniform grid.
// Throws OracleError when the density at either edge exceeds 1e-4 of the
// peak, i.e. the grid does not cover the posterior mass.
GridPosterior grid_posterior(const std::function<double(double)>& log_density, const GridSpec& grid);

// One free component of `theta` (index `free_param`), all others pinned.
GridPosterior grid_posterior_oracle(const PosteriorTarget& target, std::size_t free_param,
                                    std::vector<double> theta, const GridSpec& grid);

}  // namespace hsens
