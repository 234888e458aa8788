#include "hsens/likelihood.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hsens {

std::string_view to_string(ObservationKind kind) {
    return kind == ObservationKind::TruncGaussian ? "gaussian" : "nb";
}

ObservationKind parse_observation_kind(std::string_view name) {
    if (name == "gaussian") return ObservationKind::TruncGaussian;
    if (name == "nb") return ObservationKind::NegBinomial;
    throw DomainError("unknown likelihood '" + std::string(name) + "'");
}

double log_normal_cdf(double x) {
    if (x > 5.0) return std::log1p(-0.5 * std::erfc(x / std::numbers::sqrt2));
    if (x > -20.0) return std::log(0.5 * std::erfc(-x / std::numbers::sqrt2));
    // Asymptotic expansion of the Mills ratio.
    const double x2 = x * x;
    const double series = 1.0 - 1.0 / x2 + 3.0 / (x2 * x2) - 15.0 / (x2 * x2 * x2);
    return -0.5 * x2 - std::log(-x) - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(series);
}

double log_density_trunc_gaussian(double h, double mu, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be > 0");
    if (!std::isfinite(mu)) throw DomainError("mean must be finite");
    if (h < 0.0) return -std::numeric_limits<double>::infinity();
    const double z = (h - mu) / sigma;
    return -0.5 * z * z - std::log(sigma) - 0.5 * std::log(2.0 * std::numbers::pi) -
           log_normal_cdf(mu / sigma);
}

double log_pmf_negbinom(long long h, double mu, double r) {
    if (h < 0) throw DomainError("negative count");
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("negative binomial mean must be > 0");
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("dispersion r must be > 0");
    const double k = static_cast<double>(h);
    // log q and log(1-q) without cancellation.
    const double log_q = -std::log1p(mu / r);
    const double log_1mq = -std::log1p(r / mu);
    return std::lgamma(k + r) - std::lgamma(r) - std::lgamma(k + 1.0) + r * log_q + k * log_1mq;
}

double log_likelihood(const ObservationModel& obs, double h, double mu) {
    if (obs.kind == ObservationKind::TruncGaussian) {
        if (!obs.sigma) throw DomainError("gaussian observation model without sigma");
        return log_density_trunc_gaussian(h, mu, *obs.sigma);
    }
    if (!obs.r) throw DomainError("negative binomial observation model without r");
    if (h < 0.0 || h != std::floor(h)) {
        throw DomainError("negative binomial needs a non-negative integer h, got " +
                          std::to_string(h));
    }
    if (mu == 0.0) return h == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return log_pmf_negbinom(static_cast<long long>(h), mu, *obs.r);
}

Deviance deviance(ModelKind kind, const ParamVector& params, const ObservationModel& obs,
                  const Dataset& data) {
    double total = 0.0;
    for (const auto& rec : data.records) {
        const double mu = evaluate_mean(kind, params, {rec.P, rec.C});
        const double ll = log_likelihood(obs, rec.h, mu);
        if (ll == -std::numeric_limits<double>::infinity()) {
            return {std::numeric_limits<double>::infinity()};
        }
        total += ll;
    }
    return {-2.0 * total};
}

}  // namespace hsens
