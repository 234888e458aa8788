#pragma once

// Observation models for the h-index around a model mean, and the deviance
// used for model comparison.

#include <optional>
#include <string_view>

#include "hsens/dataset.hpp"
#include "hsens/models.hpp"

namespace hsens {

enum class ObservationKind { TruncGaussian, NegBinomial };

std::string_view to_string(ObservationKind kind);
ObservationKind parse_observation_kind(std::string_view name);

// Exactly one of sigma (TruncGaussian) or r (NegBinomial) is set.
struct ObservationModel {
    ObservationKind kind = ObservationKind::TruncGaussian;
    std::optional<double> sigma;
    std::optional<double> r;

    static ObservationModel gaussian(double sigma) {
        return {ObservationKind::TruncGaussian, sigma, std::nullopt};
    }
    static ObservationModel negbinom(double r) {
        return {ObservationKind::NegBinomial, std::nullopt, r};
    }
};

struct Deviance {
    double value = 0.0;
};

// log Phi(x), accurate far into the lower tail.
double log_normal_cdf(double x);

// Gaussian N(mu, sigma^2) truncated below at zero, evaluated at h >= 0.
double log_density_trunc_gaussian(double h, double mu, double sigma);

// Negative binomial with mean mu and dispersion r: q = r / (r + mu).
double log_pmf_negbinom(long long h, double mu, double r);

// Log-likelihood of one observation. h must be integral under NegBinomial.
// A zero mean under NegBinomial is a point mass at zero.
double log_likelihood(const ObservationModel& obs, double h, double mu);

// -2 * total log-likelihood. +inf when an observation is impossible under
// the model (positive h with zero mean under NegBinomial).
Deviance deviance(ModelKind kind, const ParamVector& params, const ObservationModel& obs,
                  const Dataset& data);

}  // namespace hsens
