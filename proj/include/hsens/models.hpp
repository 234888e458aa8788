#pragma once

// Theoretical mean functions linking a journal's h-index to its
// publication (P) and citation (C) counts.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsens {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The two Hirsch entries share one mean function; they differ only in the
// observation model they are paired with.
enum class ModelKind { EggheRousseau, GlanzelSchubert, HirschGaussian, HirschNB };

inline constexpr ModelKind kAllModels[] = {ModelKind::EggheRousseau, ModelKind::GlanzelSchubert,
                                           ModelKind::HirschGaussian, ModelKind::HirschNB};

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

// True when the mean depends on P (only Glanzel-Schubert).
bool uses_publications(ModelKind kind) noexcept;

struct ParamVector {
    double alpha = 0.0;
    std::optional<double> c;
    std::optional<double> a;
    std::optional<double> b;
};

struct Covariates {
    double P = 1.0;  // publications, > 0
    double C = 0.0;  // citations, >= 0
};

struct ParamBound {
    std::string name;
    double lower;
};

// Names of the mean-function parameters, in sampling order.
std::vector<std::string> mean_param_names(ModelKind kind);

// Lower truncation bounds (open intervals) used by the priors.
std::vector<ParamBound> param_bounds(ModelKind kind);

// Throws DomainError when params do not satisfy the ranges for kind, or
// carry a parameter the model does not use.
void validate_params(ModelKind kind, const ParamVector& params);

// Model mean h for the given covariates. Zero citations give a zero mean
// for every model.
double evaluate_mean(ModelKind kind, const ParamVector& params, const Covariates& cov);

}  // namespace hsens
