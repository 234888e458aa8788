#include "hsens/models.hpp"

#include <cmath>
#include <string>

namespace hsens {

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::EggheRousseau: return "egghe-rousseau";
        case ModelKind::GlanzelSchubert: return "glanzel-schubert";
        case ModelKind::HirschGaussian: return "hirsch-gaussian";
        case ModelKind::HirschNB: return "hirsch-nb";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
    for (ModelKind k : kAllModels) {
        if (to_string(k) == name) return k;
    }
    throw DomainError("unknown model kind '" + std::string(name) + "'");
}

bool uses_publications(ModelKind kind) noexcept { return kind == ModelKind::GlanzelSchubert; }

std::vector<std::string> mean_param_names(ModelKind kind) {
    switch (kind) {
        case ModelKind::EggheRousseau: return {"alpha"};
        case ModelKind::GlanzelSchubert: return {"alpha", "c"};
        case ModelKind::HirschGaussian:
        case ModelKind::HirschNB: return {"alpha", "a", "b"};
    }
    return {};
}

std::vector<ParamBound> param_bounds(ModelKind kind) {
    switch (kind) {
        case ModelKind::EggheRousseau: return {{"alpha", 2.0}};
        case ModelKind::GlanzelSchubert: return {{"alpha", 1.0}, {"c", 0.0}};
        case ModelKind::HirschGaussian:
        case ModelKind::HirschNB: return {{"alpha", 0.0}, {"a", 0.0}, {"b", 0.0}};
    }
    return {};
}

namespace {

void require_above(std::string_view name, double value, double lower) {
    if (!(value > lower) || !std::isfinite(value)) {
        throw DomainError(std::string(name) + " = " + std::to_string(value) + " outside (" +
                          std::to_string(lower) + ", inf)");
    }
}

void require_present(std::string_view name, const std::optional<double>& v) {
    if (!v) throw DomainError("missing parameter " + std::string(name));
}

void require_absent(std::string_view name, const std::optional<double>& v) {
    if (v) throw DomainError("parameter " + std::string(name) + " is not used by this model");
}

}  // namespace

void validate_params(ModelKind kind, const ParamVector& p) {
    switch (kind) {
        case ModelKind::EggheRousseau:
            require_above("alpha", p.alpha, 2.0);
            require_absent("c", p.c);
            require_absent("a", p.a);
            require_absent("b", p.b);
            break;
        case ModelKind::GlanzelSchubert:
            require_above("alpha", p.alpha, 1.0);
            require_present("c", p.c);
            require_above("c", *p.c, 0.0);
            require_absent("a", p.a);
            require_absent("b", p.b);
            break;
        case ModelKind::HirschGaussian:
        case ModelKind::HirschNB:
            require_above("alpha", p.alpha, 0.0);
            require_present("a", p.a);
            require_present("b", p.b);
            require_above("a", *p.a, 0.0);
            require_above("b", *p.b, 0.0);
            require_absent("c", p.c);
            break;
    }
}

double evaluate_mean(ModelKind kind, const ParamVector& params, const Covariates& cov) {
    validate_params(kind, params);
    if (!(cov.P > 0.0) || !std::isfinite(cov.P)) throw DomainError("publications must be > 0");
    if (!(cov.C >= 0.0) || !std::isfinite(cov.C)) throw DomainError("citations must be >= 0");
    if (cov.C == 0.0) return 0.0;

    const double alpha = params.alpha;
    switch (kind) {
        case ModelKind::EggheRousseau: {
            const double A = cov.C / (alpha - 2.0);
            return std::pow((alpha - 2.0) / (alpha - 1.0) * A, 1.0 / alpha);
        }
        case ModelKind::GlanzelSchubert:
            return *params.c * std::pow(cov.P, 1.0 / (alpha + 1.0)) *
                   std::pow(cov.C / cov.P, alpha / (alpha + 1.0));
        case ModelKind::HirschGaussian:
        case ModelKind::HirschNB:
            return std::pow(cov.C / alpha, 1.0 / (*params.a * *params.b));
    }
    return 0.0;
}

}  // namespace hsens
