#include "hsens/mcmc.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <numeric>

#include "hsens/diagnostics.hpp"
#include "hsens/quantile.hpp"

namespace hsens {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Robbins-Monro step exponent for the proposal-scale recursion.
constexpr double kAdaptDecay = 0.6;
constexpr double kMinLogScale = -15.0;
constexpr double kMaxLogScale = 5.0;

}  // namespace

double log_prior_density(const PriorSpec& prior, double x) {
    if (const auto* tn = std::get_if<TruncNormalPrior>(&prior)) {
        if (!(tn->variance > 0.0)) throw DomainError("prior variance must be > 0");
        if (!(x > tn->lower) || !std::isfinite(x)) return kNegInf;
        const double sd = std::sqrt(tn->variance);
        const double z = (x - tn->mean) / sd;
        return -0.5 * z * z - std::log(sd) - 0.5 * std::log(2.0 * std::numbers::pi) -
               log_normal_cdf((tn->mean - tn->lower) / sd);
    }
    const auto& g = std::get<GammaPrior>(prior);
    if (!(g.shape > 0.0) || !(g.rate > 0.0)) throw DomainError("gamma prior shape/rate must be > 0");
    if (!(x > 0.0) || !std::isfinite(x)) return kNegInf;
    return g.shape * std::log(g.rate) - std::lgamma(g.shape) + (g.shape - 1.0) * std::log(x) -
           g.rate * x;
}

double support_lower(const PriorSpec& prior) {
    if (const auto* tn = std::get_if<TruncNormalPrior>(&prior)) return tn->lower;
    return 0.0;
}

std::string_view observation_param_name(ObservationKind obs) {
    return obs == ObservationKind::TruncGaussian ? "tau" : "r";
}

PriorMap default_priors(ModelKind kind, ObservationKind obs) {
    PriorMap priors;
    for (const auto& [name, lower] : param_bounds(kind)) {
        const double mean = name == "c" ? 0.0 : 1.0;
        priors.emplace(name, TruncNormalPrior{mean, 100.0, lower});
    }
    priors.emplace(std::string(observation_param_name(obs)), GammaPrior{0.001, 0.001});
    return priors;
}

// ---------------------------------------------------------------------------

PosteriorTarget::PosteriorTarget(ModelKind kind, ObservationKind obs, PriorMap priors, Dataset data)
    : kind_(kind), obs_(obs), priors_(std::move(priors)), data_(std::move(data)) {
    for (const auto& [name, lower] : param_bounds(kind_)) {
        names_.push_back(name);
        lower_.push_back(lower);
    }
    names_.emplace_back(observation_param_name(obs_));
    lower_.push_back(0.0);

    for (std::size_t j = 0; j < names_.size(); ++j) {
        const auto it = priors_.find(names_[j]);
        if (it == priors_.end()) throw std::invalid_argument("no prior given for " + names_[j]);
        prior_of_.push_back(&it->second);
        lower_[j] = std::max(lower_[j], support_lower(it->second));
    }

    if (obs_ == ObservationKind::NegBinomial) {
        for (std::size_t i = 0; i < data_.records.size(); ++i) {
            const double h = data_.records[i].h;
            if (h != std::floor(h)) {
                throw DomainError("negative binomial fit needs integer h (record " +
                                  std::to_string(i + 1) + " has " + std::to_string(h) + ")");
            }
        }
    }
}

std::size_t PosteriorTarget::index_of(std::string_view name) const {
    for (std::size_t j = 0; j < names_.size(); ++j) {
        if (names_[j] == name) return j;
    }
    throw std::out_of_range("unknown parameter '" + std::string(name) + "'");
}

std::vector<double> PosteriorTarget::default_inits() const {
    std::vector<double> inits(names_.size());
    const std::size_t n_mean = names_.size() - 1;
    for (std::size_t j = 0; j < n_mean; ++j) inits[j] = lower_[j] + 1.0;
    inits.back() = 1.0;
    return inits;
}

std::pair<ParamVector, ObservationModel> PosteriorTarget::unpack(std::span<const double> theta) const {
    if (theta.size() != names_.size()) throw std::invalid_argument("parameter vector has wrong length");
    ParamVector p;
    p.alpha = theta[0];
    switch (kind_) {
        case ModelKind::EggheRousseau: break;
        case ModelKind::GlanzelSchubert: p.c = theta[1]; break;
        case ModelKind::HirschGaussian:
        case ModelKind::HirschNB:
            p.a = theta[1];
            p.b = theta[2];
            break;
    }
    const double obs_param = theta.back();
    ObservationModel obs = obs_ == ObservationKind::TruncGaussian
                               ? ObservationModel::gaussian(1.0 / std::sqrt(obs_param))
                               : ObservationModel::negbinom(obs_param);
    return {p, obs};
}

double PosteriorTarget::log_prior(std::span<const double> theta) const {
    if (theta.size() != names_.size()) throw std::invalid_argument("parameter vector has wrong length");
    double lp = 0.0;
    for (std::size_t j = 0; j < theta.size(); ++j) {
        if (!(theta[j] > lower_[j])) return kNegInf;
        lp += log_prior_density(*prior_of_[j], theta[j]);
    }
    return lp;
}

double PosteriorTarget::log_likelihood(std::span<const double> theta) const {
    for (std::size_t j = 0; j < theta.size(); ++j) {
        if (!(theta[j] > lower_[j]) || !std::isfinite(theta[j])) return kNegInf;
    }
    const auto [params, obs] = unpack(theta);
    double ll = 0.0;
    for (const auto& rec : data_.records) {
        const double mu = evaluate_mean(kind_, params, {rec.P, rec.C});
        if (!std::isfinite(mu)) return kNegInf;
        ll += hsens::log_likelihood(obs, rec.h, mu);
        if (ll == kNegInf) return kNegInf;
    }
    return ll;
}

double PosteriorTarget::log_posterior(std::span<const double> theta) const {
    const double lp = log_prior(theta);
    if (lp == kNegInf) return kNegInf;
    return lp + log_likelihood(theta);
}

double PosteriorTarget::deviance(std::span<const double> theta) const {
    return -2.0 * log_likelihood(theta);
}

// ---------------------------------------------------------------------------

void SamplerConfig::validate() const {
    if (iterations < 1000) throw std::invalid_argument("iterations must be >= 1000");
    if (thin < 1) throw std::invalid_argument("thin must be >= 1");
    if (chains < 1) throw std::invalid_argument("chains must be >= 1");
    if (!(target_acceptance > 0.0 && target_acceptance < 1.0)) {
        throw std::invalid_argument("target acceptance must lie in (0, 1)");
    }
}

ComponentwiseMetropolis::ComponentwiseMetropolis(const PosteriorTarget& target, std::vector<double> inits,
                                                 const SamplerConfig& config, std::vector<bool> fixed)
    : target_(target),
      config_(config),
      fixed_(std::move(fixed)),
      state_(std::move(inits)),
      scales_(target.dimension(), 1.0),
      accepted_(target.dimension(), 0),
      proposed_(target.dimension(), 0),
      rng_(config.seed) {
    if (state_.size() != target_.dimension()) throw std::invalid_argument("inits have wrong length");
    if (fixed_.empty()) fixed_.assign(state_.size(), false);
    if (fixed_.size() != state_.size()) throw std::invalid_argument("fixed mask has wrong length");
    const double lp = target_.log_prior(state_);
    log_lik_ = lp == kNegInf ? kNegInf : target_.log_likelihood(state_);
    log_post_ = lp + log_lik_;
    if (!std::isfinite(log_post_)) {
        throw InitializationError("log posterior at the initial values is not finite");
    }
    scratch_ = state_;
}

double ComponentwiseMetropolis::proposal_log_posterior(std::size_t j, double value, double& log_lik) {
    scratch_ = state_;
    scratch_[j] = value;
    const double lp = target_.log_prior(scratch_);
    if (lp == kNegInf) {
        log_lik = kNegInf;
        return kNegInf;
    }
    log_lik = target_.log_likelihood(scratch_);
    return lp + log_lik;
}

void ComponentwiseMetropolis::sweep() {
    const bool adapt = adapting();
    const double step = std::pow(static_cast<double>(iteration_ + 1), -kAdaptDecay);
    for (std::size_t j = 0; j < state_.size(); ++j) {
        if (fixed_[j]) continue;
        const double lower = target_.lower_bounds()[j];
        const double z = std::log(state_[j] - lower);
        const double z_new = z + scales_[j] * normal_(rng_);
        const double x_new = lower + std::exp(z_new);
        const double u = uniform_(rng_);

        double accept_prob = 0.0;
        double lik_new = kNegInf;
        double post_new = kNegInf;
        if (x_new > lower && std::isfinite(x_new)) {
            post_new = proposal_log_posterior(j, x_new, lik_new);
            // Jacobian of x = lower + exp(z) is exp(z).
            const double log_ratio = post_new - log_post_ + (z_new - z);
            if (std::isfinite(log_ratio)) accept_prob = log_ratio >= 0.0 ? 1.0 : std::exp(log_ratio);
        }
        const bool accept = u < accept_prob;
        if (accept) {
            state_[j] = x_new;
            log_post_ = post_new;
            log_lik_ = lik_new;
        }
        if (adapt) {
            const double log_scale = std::clamp(
                std::log(scales_[j]) + step * (accept_prob - config_.target_acceptance), kMinLogScale,
                kMaxLogScale);
            scales_[j] = std::exp(log_scale);
        } else {
            ++proposed_[j];
            if (accept) ++accepted_[j];
        }
    }
    ++iteration_;
}

std::vector<double> ComponentwiseMetropolis::acceptance_rates() const {
    std::vector<double> rates(state_.size(), 0.0);
    for (std::size_t j = 0; j < rates.size(); ++j) {
        if (proposed_[j] > 0) {
            rates[j] = static_cast<double>(accepted_[j]) / static_cast<double>(proposed_[j]);
        }
    }
    return rates;
}

Chain run_chain(const PosteriorTarget& target, const SamplerConfig& config, std::vector<double> inits,
                std::vector<bool> fixed) {
    config.validate();
    if (target.data().empty()) throw std::invalid_argument("cannot fit an empty dataset");
    ComponentwiseMetropolis sampler(target, std::move(inits), config, std::move(fixed));
    for (std::size_t i = 0; i < config.burn_in; ++i) sampler.sweep();

    Chain chain;
    chain.param_names = target.param_names();
    chain.config = config;
    const std::size_t kept = config.kept_draws();
    chain.draws.reserve(kept * target.dimension());
    chain.deviance_draws.reserve(kept);
    for (std::size_t i = 0; i < kept * config.thin; ++i) {
        sampler.sweep();
        if ((i + 1) % config.thin == 0) {
            const auto s = sampler.state();
            chain.draws.insert(chain.draws.end(), s.begin(), s.end());
            chain.deviance_draws.push_back(sampler.deviance());
        }
    }
    chain.accept_rates = sampler.acceptance_rates();
    const auto scales = sampler.proposal_scales();
    chain.proposal_scales.assign(scales.begin(), scales.end());
    return chain;
}

std::vector<Chain> run_chains(const PosteriorTarget& target, const SamplerConfig& config,
                              const std::vector<double>& inits, const std::vector<bool>& fixed) {
    config.validate();
    std::vector<std::future<Chain>> pending;
    for (std::size_t k = 0; k < config.chains; ++k) {
        SamplerConfig cfg = config;
        cfg.seed = config.seed + k;
        pending.push_back(std::async(std::launch::async, [&target, cfg, &inits, &fixed] {
            return run_chain(target, cfg, inits, fixed);
        }));
    }
    std::vector<Chain> chains;
    for (auto& f : pending) chains.push_back(f.get());
    return chains;
}

Chain pool_chains(const std::vector<Chain>& chains) {
    if (chains.empty()) throw std::invalid_argument("no chains to pool");
    Chain pooled;
    pooled.param_names = chains.front().param_names;
    pooled.config = chains.front().config;
    pooled.config.chains = chains.size();
    pooled.accept_rates.assign(pooled.param_names.size(), 0.0);
    pooled.proposal_scales = chains.front().proposal_scales;
    for (const auto& c : chains) {
        if (c.param_names != pooled.param_names) throw std::invalid_argument("chains have different parameters");
        pooled.draws.insert(pooled.draws.end(), c.draws.begin(), c.draws.end());
        pooled.deviance_draws.insert(pooled.deviance_draws.end(), c.deviance_draws.begin(),
                                     c.deviance_draws.end());
        for (std::size_t j = 0; j < c.accept_rates.size() && j < pooled.accept_rates.size(); ++j) {
            pooled.accept_rates[j] += c.accept_rates[j] / static_cast<double>(chains.size());
        }
    }
    return pooled;
}

// ---------------------------------------------------------------------------

std::size_t Chain::param_index(std::string_view name) const {
    for (std::size_t j = 0; j < param_names.size(); ++j) {
        if (param_names[j] == name) return j;
    }
    throw std::out_of_range("unknown parameter '" + std::string(name) + "'");
}

std::vector<double> Chain::column(std::size_t param) const {
    if (param >= n_params()) throw std::out_of_range("parameter index out of range");
    std::vector<double> col(n_draws());
    for (std::size_t i = 0; i < col.size(); ++i) col[i] = at(i, param);
    return col;
}

const ParamSummary& PosteriorSummary::operator[](std::string_view name) const {
    for (const auto& p : params) {
        if (p.name == name) return p;
    }
    throw std::out_of_range("no summary for parameter '" + std::string(name) + "'");
}

namespace {

ParamSummary summarize_column(const std::string& name, const std::vector<double>& col) {
    std::vector<double> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    ParamSummary s;
    s.name = name;
    s.mean = std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(col.size());
    s.median = quantile_sorted(sorted, 0.5);
    s.ci_low = quantile_sorted(sorted, 0.025);
    s.ci_high = quantile_sorted(sorted, 0.975);
    s.ess = effective_sample_size(col);
    s.geweke_z = geweke_z(col);
    return s;
}

}  // namespace

PosteriorSummary summarize(const Chain& chain) {
    if (chain.n_draws() == 0) throw std::invalid_argument("cannot summarize an empty chain");
    PosteriorSummary out;
    for (std::size_t j = 0; j < chain.n_params(); ++j) {
        out.params.push_back(summarize_column(chain.param_names[j], chain.column(j)));
    }
    return out;
}

PosteriorSummary summarize(const std::vector<Chain>& chains) {
    if (chains.size() == 1) return summarize(chains.front());
    PosteriorSummary out = summarize(pool_chains(chains));
    for (std::size_t j = 0; j < out.params.size(); ++j) {
        std::vector<std::vector<double>> cols;
        for (const auto& c : chains) cols.push_back(c.column(j));
        std::vector<std::span<const double>> views(cols.begin(), cols.end());
        double ess = 0.0;
        double worst_z = 0.0;
        for (const auto& col : cols) {
            ess += effective_sample_size(col);
            const double z = geweke_z(col);
            if (std::abs(z) > std::abs(worst_z)) worst_z = z;
        }
        out.params[j].ess = ess;
        out.params[j].geweke_z = worst_z;
        out.params[j].rhat = split_rhat(views);
    }
    return out;
}

double mean_deviance(const Chain& chain) {
    if (chain.deviance_draws.empty()) throw std::invalid_argument("chain has no deviance draws");
    return std::accumulate(chain.deviance_draws.begin(), chain.deviance_draws.end(), 0.0) /
           static_cast<double>(chain.deviance_draws.size());
}

std::vector<TracePoint> export_trace(const Chain& chain, std::string_view param) {
    std::vector<TracePoint> trace;
    trace.reserve(chain.n_draws());
    if (param == "deviance") {
        for (std::size_t i = 0; i < chain.n_draws(); ++i) {
            trace.push_back({chain.iteration_of(i), chain.deviance_draws[i]});
        }
        return trace;
    }
    const std::size_t j = chain.param_index(param);
    for (std::size_t i = 0; i < chain.n_draws(); ++i) trace.push_back({chain.iteration_of(i), chain.at(i, j)});
    return trace;
}

// ---------------------------------------------------------------------------

GridPosterior grid_posterior(const std::function<double(double)>& log_density, const GridSpec& grid) {
    if (grid.points < 3 || !(grid.upper > grid.lower)) throw OracleError("degenerate grid");
    const std::size_t n = grid.points;
    const double dx = (grid.upper - grid.lower) / static_cast<double>(n - 1);
    std::vector<double> x(n), lp(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = grid.lower + dx * static_cast<double>(i);
        lp[i] = log_density(x[i]);
        if (std::isnan(lp[i])) throw OracleError("log density is NaN on the grid");
    }
    const auto peak_it = std::max_element(lp.begin(), lp.end());
    if (*peak_it == kNegInf) throw OracleError("density vanishes on the whole grid");
    const double peak = *peak_it;
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = std::exp(lp[i] - peak);
    if (p.front() > 1e-4 || p.back() > 1e-4) {
        throw OracleError("grid does not cover the posterior mass (edge density above 1e-4 of peak)");
    }

    std::vector<double> cumulative(n, 0.0);
    double first_moment = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        cumulative[i] = cumulative[i - 1] + 0.5 * dx * (p[i - 1] + p[i]);
        first_moment += 0.5 * dx * (x[i - 1] * p[i - 1] + x[i] * p[i]);
    }
    const double mass = cumulative.back();
    auto inverse_cdf = [&](double q) {
        const double target = q * mass;
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), target);
        const auto i = static_cast<std::size_t>(std::distance(cumulative.begin(), it));
        if (i == 0) return x.front();
        if (i >= n) return x.back();
        const double span = cumulative[i] - cumulative[i - 1];
        const double frac = span > 0.0 ? (target - cumulative[i - 1]) / span : 0.0;
        return x[i - 1] + frac * dx;
    };

    GridPosterior out;
    out.mean = first_moment / mass;
    out.mode = x[static_cast<std::size_t>(std::distance(lp.begin(), peak_it))];
    out.q025 = inverse_cdf(0.025);
    out.q50 = inverse_cdf(0.5);
    out.q975 = inverse_cdf(0.975);
    return out;
}

GridPosterior grid_posterior_oracle(const PosteriorTarget& target, std::size_t free_param,
                                    std::vector<double> theta, const GridSpec& grid) {
    if (free_param >= target.dimension()) throw std::out_of_range("free parameter index out of range");
    if (theta.size() != target.dimension()) throw std::invalid_argument("theta has wrong length");
    return grid_posterior(
        [&](double v) {
            theta[free_param] = v;
            return target.log_posterior(theta);
        },
        grid);
}

}  // namespace hsens
