#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hsens/dataio.hpp"
#include "hsens/mcmc.hpp"

using namespace hsens;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double trunc_normal_logpdf(double x, double mean, double var, double lower) {
    const double sd = std::sqrt(var);
    const double z = (x - mean) / sd;
    const double tail = 0.5 * std::erfc((lower - mean) / (sd * std::numbers::sqrt2));
    return -0.5 * z * z - std::log(sd * std::sqrt(2.0 * std::numbers::pi)) - std::log(tail);
}

double gamma_logpdf(double x, double shape, double rate) {
    return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) - rate * x;
}

// n journals sharing one (P, C) so the E-R mean is the same constant 1000
// for every record: with alpha pinned, tau has a Gamma posterior.
Dataset constant_mean_data(std::size_t n, double noise_sd, std::uint64_t seed, double& ss) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> z(0.0, noise_sd);
    Dataset d;
    ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double h = 1000.0 + z(rng);
        ss += (h - 1000.0) * (h - 1000.0);
        d.records.push_back({"J" + std::to_string(i), h, 5000.0, 2.0e9});
    }
    return d;
}

Dataset small_gs_data() {
    ParamVector p{1.77};
    p.c = 0.7;
    return synthesize(ModelKind::GlanzelSchubert, p, ObservationModel::gaussian(5.0), 30, CovariateRanges::ecology(), 9);
}

SamplerConfig quick(std::size_t iters = 2000, std::size_t burn = 500, std::uint64_t seed = 1) {
    SamplerConfig c;
    c.iterations = iters;
    c.burn_in = burn;
    c.seed = seed;
    return c;
}

Chain constant_chain(double value, std::size_t n) {
    Chain c;
    c.param_names = {"alpha"};
    c.draws.assign(n, value);
    c.deviance_draws.assign(n, 1.0);
    c.config.iterations = n;
    c.config.burn_in = 0;
    return c;
}

}  // namespace

TEST_CASE("default priors") {
    const auto gs = default_priors(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian);
    REQUIRE(gs.size() == 3);
    const auto& alpha = std::get<TruncNormalPrior>(gs.at("alpha"));
    CHECK(alpha.mean == 1.0);
    CHECK(alpha.variance == 100.0);
    CHECK(alpha.lower == 1.0);
    const auto& c = std::get<TruncNormalPrior>(gs.at("c"));
    CHECK(c.mean == 0.0);
    CHECK(c.variance == 100.0);
    CHECK(c.lower == 0.0);
    const auto& tau = std::get<GammaPrior>(gs.at("tau"));
    CHECK(tau.shape == 0.001);
    CHECK(tau.rate == 0.001);

    const auto er = default_priors(ModelKind::EggheRousseau, ObservationKind::NegBinomial);
    REQUIRE(er.size() == 2);
    CHECK(std::get<TruncNormalPrior>(er.at("alpha")).lower == 2.0);
    CHECK(std::get<TruncNormalPrior>(er.at("alpha")).mean == 1.0);
    CHECK(std::get<GammaPrior>(er.at("r")).shape == 0.001);

    const auto h = default_priors(ModelKind::HirschNB, ObservationKind::NegBinomial);
    for (const char* name : {"alpha", "a", "b"}) {
        CHECK(std::get<TruncNormalPrior>(h.at(name)).mean == 1.0);
        CHECK(std::get<TruncNormalPrior>(h.at(name)).lower == 0.0);
    }
}

TEST_CASE("prior densities") {
    const PriorSpec tn = TruncNormalPrior{1.0, 100.0, 1.0};
    CHECK(log_prior_density(tn, 0.5) == kNegInf);
    CHECK(log_prior_density(tn, 1.0) == kNegInf);
    CHECK(log_prior_density(tn, 3.0) == doctest::Approx(trunc_normal_logpdf(3.0, 1.0, 100.0, 1.0)));
    const PriorSpec g = GammaPrior{2.0, 3.0};
    CHECK(log_prior_density(g, 0.0) == kNegInf);
    CHECK(log_prior_density(g, 0.7) == doctest::Approx(gamma_logpdf(0.7, 2.0, 3.0)));
}

TEST_CASE("log posterior special cases") {
    const auto priors = default_priors(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian);
    const PosteriorTarget empty(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian, priors, Dataset{});
    CHECK(empty.param_names() == std::vector<std::string>{"alpha", "c", "tau"});

    const std::vector<double> theta{1.5, 0.8, 0.25};
    const double prior_sum = trunc_normal_logpdf(1.5, 1.0, 100.0, 1.0) + trunc_normal_logpdf(0.8, 0.0, 100.0, 0.0) +
                             gamma_logpdf(0.25, 0.001, 0.001);
    CHECK(empty.log_posterior(theta) == doctest::Approx(prior_sum).epsilon(1e-12));
    CHECK(empty.log_posterior(std::vector<double>{0.9, 0.8, 0.25}) == kNegInf);
    CHECK(empty.log_posterior(std::vector<double>{1.5, -0.1, 0.25}) == kNegInf);
    CHECK(empty.log_posterior(std::vector<double>{1.5, 0.8, 0.0}) == kNegInf);

    Dataset one;
    one.records.push_back({"J1", 40.0, 1351.0, 14917.5});
    const PosteriorTarget single(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian, priors, one);
    ParamVector p{1.5};
    p.c = 0.8;
    const double mu = evaluate_mean(ModelKind::GlanzelSchubert, p, {1351.0, 14917.5});
    const double expected = prior_sum + log_density_trunc_gaussian(40.0, mu, 2.0);
    CHECK(single.log_posterior(theta) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(single.deviance(theta) == doctest::Approx(-2.0 * log_density_trunc_gaussian(40.0, mu, 2.0)));
}

TEST_CASE("negative binomial target needs integer h") {
    Dataset d;
    d.records.push_back({"J1", 4.5, 100.0, 500.0});
    CHECK_THROWS_AS(PosteriorTarget(ModelKind::EggheRousseau, ObservationKind::NegBinomial,
                                    default_priors(ModelKind::EggheRousseau, ObservationKind::NegBinomial), d),
                    DomainError);
}

TEST_CASE("default initial values") {
    const PosteriorTarget t(ModelKind::HirschNB, ObservationKind::NegBinomial,
                            default_priors(ModelKind::HirschNB, ObservationKind::NegBinomial), Dataset{});
    CHECK(t.default_inits() == std::vector<double>{1.0, 1.0, 1.0, 1.0});
    const PosteriorTarget e(ModelKind::EggheRousseau, ObservationKind::NegBinomial,
                            default_priors(ModelKind::EggheRousseau, ObservationKind::NegBinomial), Dataset{});
    CHECK(e.default_inits() == std::vector<double>{3.0, 1.0});
}

TEST_CASE("sampler configuration checks") {
    SamplerConfig c = quick();
    CHECK_NOTHROW(c.validate());
    c.iterations = 999;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = quick();
    c.thin = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = quick();
    c.target_acceptance = 1.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("initial values outside the support are rejected") {
    const auto data = small_gs_data();
    const PosteriorTarget t(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian,
                            default_priors(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian), data);
    CHECK_THROWS_AS(run_chain(t, quick(), {0.5, 1.0, 1.0}), InitializationError);
}

TEST_CASE("chains are deterministic per seed") {
    const auto data = small_gs_data();
    const PosteriorTarget t(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian,
                            default_priors(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian), data);
    const Chain a = run_chain(t, quick(), t.default_inits());
    const Chain b = run_chain(t, quick(), t.default_inits());
    CHECK(a == b);
    const Chain c = run_chain(t, quick(2000, 500, 2), t.default_inits());
    CHECK(a.draws != c.draws);

    SamplerConfig multi = quick();
    multi.chains = 3;
    const auto chains = run_chains(t, multi, t.default_inits());
    REQUIRE(chains.size() == 3);
    CHECK(chains[0].draws == a.draws);
    CHECK(chains[1].draws == c.draws);
    CHECK(run_chains(t, multi, t.default_inits()) == chains);
}

TEST_CASE("draws respect the truncation bounds and thinning") {
    const auto data = synthesize(ModelKind::EggheRousseau, {2.3}, ObservationModel::negbinom(3.0), 20,
                                 CovariateRanges::forestry(), 4);
    for (auto kind : {ModelKind::EggheRousseau, ModelKind::HirschNB}) {
        const PosteriorTarget t(kind, ObservationKind::NegBinomial,
                                default_priors(kind, ObservationKind::NegBinomial), data);
        SamplerConfig cfg = quick(3000, 500);
        cfg.thin = 3;
        const Chain chain = run_chain(t, cfg, t.default_inits());
        CHECK(chain.n_draws() == 1000);
        CHECK(chain.draws.size() == 1000 * t.dimension());
        CHECK(chain.iteration_of(0) == 503);
        CHECK(chain.iteration_of(999) == 3500);
        for (std::size_t i = 0; i < chain.n_draws(); ++i) {
            for (std::size_t j = 0; j < chain.n_params(); ++j) CHECK(chain.at(i, j) > t.lower_bounds()[j]);
            CHECK(std::isfinite(chain.deviance_draws[i]));
        }
        for (double rate : chain.accept_rates) {
            CHECK(rate > 0.0);
            CHECK(rate < 1.0);
        }
    }
}

TEST_CASE("proposal scales freeze after burn-in") {
    const auto data = small_gs_data();
    const PosteriorTarget t(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian,
                            default_priors(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian), data);
    const SamplerConfig cfg = quick(1000, 300);
    ComponentwiseMetropolis sampler(t, t.default_inits(), cfg);
    std::vector<double> initial(sampler.proposal_scales().begin(), sampler.proposal_scales().end());
    while (sampler.adapting()) sampler.sweep();
    CHECK(sampler.iteration() == 300);
    const std::vector<double> frozen(sampler.proposal_scales().begin(), sampler.proposal_scales().end());
    CHECK(frozen != initial);
    for (int i = 0; i < 500; ++i) {
        sampler.sweep();
        CHECK(std::equal(frozen.begin(), frozen.end(), sampler.proposal_scales().begin()));
    }
    CHECK(sampler.deviance() == doctest::Approx(t.deviance(sampler.state())));
}

TEST_CASE("fixed components stay put") {
    const auto data = small_gs_data();
    const PosteriorTarget t(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian,
                            default_priors(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian), data);
    const Chain chain = run_chain(t, quick(), {1.77, 0.7, 1.0}, {true, true, false});
    for (std::size_t i = 0; i < chain.n_draws(); ++i) {
        CHECK(chain.at(i, 0) == 1.77);
        CHECK(chain.at(i, 1) == 0.7);
    }
}

TEST_CASE("precision posterior matches its conjugate Gamma") {
    double ss = 0.0;
    const Dataset data = constant_mean_data(25, 2.0, 21, ss);
    const PosteriorTarget t(ModelKind::EggheRousseau, ObservationKind::TruncGaussian,
                            default_priors(ModelKind::EggheRousseau, ObservationKind::TruncGaussian), data);
    const double shape = 0.001 + 25 / 2.0, rate = 0.001 + ss / 2.0;

    const GridPosterior grid = grid_posterior_oracle(t, 1, {3.0, 1.0}, {1e-6, 4.0 * shape / rate, 8001});
    CHECK(grid.mean == doctest::Approx(shape / rate).epsilon(0.001));

    const Chain chain = run_chain(t, quick(20000, 2000, 5), {3.0, 1.0}, {true, false});
    const auto tau = chain.column("tau");
    double mean = 0.0;
    for (double v : tau) mean += v;
    mean /= static_cast<double>(tau.size());
    CHECK(mean == doctest::Approx(shape / rate).epsilon(0.02));
}

TEST_CASE("grid oracle on a symmetric density") {
    const auto post = grid_posterior([](double x) { return -0.5 * (x - 3.0) * (x - 3.0) / 0.25; }, {0.0, 6.0, 6001});
    CHECK(post.mean == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(post.mode == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(post.q50 == doctest::Approx(3.0).epsilon(1e-4));
    CHECK(post.q025 == doctest::Approx(3.0 - 1.959964 * 0.5).epsilon(1e-3));
    CHECK(post.q975 == doctest::Approx(3.0 + 1.959964 * 0.5).epsilon(1e-3));
}

TEST_CASE("grid oracle refuses a grid that truncates the mass") {
    CHECK_THROWS_AS(grid_posterior([](double x) { return -0.5 * x * x; }, {-1.0, 5.0, 1001}), OracleError);
}

TEST_CASE("summaries") {
    Chain c;
    c.param_names = {"alpha"};
    for (int i = 1; i <= 100; ++i) {
        c.draws.push_back(i);
        c.deviance_draws.push_back(i);
    }
    c.config.iterations = 100;
    const auto s = summarize(c);
    CHECK(s["alpha"].median == doctest::Approx(50.5));
    CHECK(s["alpha"].ci_low == doctest::Approx(3.475));
    CHECK(s["alpha"].ci_high == doctest::Approx(97.525));
    CHECK(s["alpha"].mean == doctest::Approx(50.5));
    CHECK_FALSE(s["alpha"].rhat.has_value());

    const auto flat = summarize(constant_chain(2.5, 200));
    CHECK(flat["alpha"].median == 2.5);
    CHECK(flat["alpha"].ci_low == 2.5);
    CHECK(flat["alpha"].ci_high == 2.5);

    Chain dev = constant_chain(1.0, 3);
    dev.deviance_draws = {10.0, 20.0, 30.0};
    CHECK(mean_deviance(dev) == 20.0);
    CHECK_THROWS(mean_deviance(Chain{}));
}

TEST_CASE("multi-chain summary reports R-hat") {
    const auto data = small_gs_data();
    const PosteriorTarget t(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian,
                            default_priors(ModelKind::GlanzelSchubert, ObservationKind::TruncGaussian), data);
    SamplerConfig cfg = quick(4000, 1000);
    cfg.chains = 2;
    const auto chains = run_chains(t, cfg, t.default_inits());
    const auto s = summarize(chains);
    for (const auto& p : s.params) {
        REQUIRE(p.rhat.has_value());
        CHECK(*p.rhat < 1.1);
        CHECK(p.ci_low <= p.median);
        CHECK(p.median <= p.ci_high);
    }
    const Chain pooled = pool_chains(chains);
    CHECK(pooled.n_draws() == 8000);
}

TEST_CASE("trace export") {
    const Chain flat = constant_chain(2.5, 1500);
    const auto trace = export_trace(flat, "alpha");
    REQUIRE(trace.size() == 1500);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        CHECK(trace[i].value == 2.5);
        CHECK(trace[i].iteration == i + 1);
    }
    CHECK(export_trace(flat, "deviance").size() == 1500);
    CHECK_THROWS_AS(export_trace(flat, "beta"), std::out_of_range);
}
