#include "hsens/report.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "hsens/numfmt.hpp"

namespace hsens {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (!cell.empty() && cell.back() == '\r') cell.pop_back();
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_cell(const std::string& cell, std::size_t line_no) {
    const auto v = parse_double(cell);
    if (!v) throw FormatError("non-numeric value '" + cell + "' on line " + std::to_string(line_no));
    return *v;
}

}  // namespace

void write_chain_csv(std::ostream& out, const std::vector<Chain>& chains) {
    if (chains.empty()) throw std::invalid_argument("no chains to write");
    out << "iter";
    for (const auto& n : chains.front().param_names) out << ',' << n;
    out << ",deviance\n";
    for (const auto& chain : chains) {
        for (std::size_t i = 0; i < chain.n_draws(); ++i) {
            out << chain.iteration_of(i);
            for (std::size_t j = 0; j < chain.n_params(); ++j) out << ',' << format_double(chain.at(i, j));
            out << ',' << format_double(chain.deviance_draws[i]) << '\n';
        }
    }
}

void write_chain_csv(std::ostream& out, const Chain& chain) { write_chain_csv(out, std::vector<Chain>{chain}); }

Chain read_chain_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty chain file");
    const auto header = split_line(line);
    if (header.size() < 3 || header.front() != "iter" || header.back() != "deviance") {
        throw FormatError("chain header must be iter,<param...>,deviance");
    }
    Chain chain;
    chain.param_names.assign(header.begin() + 1, header.end() - 1);
    std::vector<std::size_t> iters;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto cells = split_line(line);
        if (cells.size() != header.size()) {
            throw FormatError("wrong number of fields on line " + std::to_string(line_no));
        }
        iters.push_back(static_cast<std::size_t>(parse_cell(cells.front(), line_no)));
        for (std::size_t j = 1; j + 1 < cells.size(); ++j) chain.draws.push_back(parse_cell(cells[j], line_no));
        chain.deviance_draws.push_back(parse_cell(cells.back(), line_no));
    }
    if (iters.empty()) throw FormatError("chain file has no draws");
    chain.config.thin = iters.size() > 1 && iters[1] > iters[0] ? iters[1] - iters[0] : 1;
    chain.config.burn_in = iters[0] >= chain.config.thin ? iters[0] - chain.config.thin : 0;
    chain.config.iterations = iters.size() * chain.config.thin;
    return chain;
}

std::pair<ModelKind, ObservationKind> infer_model(const std::vector<std::string>& names) {
    auto has = [&](std::string_view n) { return std::find(names.begin(), names.end(), n) != names.end(); };
    const bool tau = has("tau");
    const bool r = has("r");
    if (tau == r) throw FormatError("chain must carry exactly one of tau or r");
    const ObservationKind obs = tau ? ObservationKind::TruncGaussian : ObservationKind::NegBinomial;
    if (!has("alpha")) throw FormatError("chain has no alpha column");
    if (has("c")) return {ModelKind::GlanzelSchubert, obs};
    if (has("a") && has("b")) {
        return {tau ? ModelKind::HirschGaussian : ModelKind::HirschNB, obs};
    }
    return {ModelKind::EggheRousseau, obs};
}

Json config_to_json(const SamplerConfig& c) {
    return Json{{"iterations", c.iterations}, {"burn_in", c.burn_in},         {"seed", c.seed},
                {"thin", c.thin},             {"target_acceptance", c.target_acceptance},
                {"chains", c.chains}};
}

std::string hash_to_hex(std::uint64_t hash) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

Json summary_to_json(const FitRecord& fit) {
    Json params = Json::object();
    for (const auto& p : fit.summary.params) {
        Json entry{{"median", p.median},   {"ci_low", p.ci_low},     {"ci_high", p.ci_high},
                   {"ess", p.ess},         {"geweke_z", p.geweke_z}, {"mean", p.mean}};
        if (p.rhat) entry["rhat"] = *p.rhat;
        params[p.name] = entry;
    }
    Json j;
    j["model"] = std::string(to_string(fit.model));
    j["likelihood"] = std::string(to_string(fit.likelihood));
    j["params"] = params;
    j["mean_deviance"] = fit.mean_deviance;
    j["config"] = config_to_json(fit.config);
    j["data_hash"] = hash_to_hex(fit.data_hash);
    j["n_records"] = fit.n_records;
    j["accept_rates"] = fit.accept_rates;
    return j;
}

FitRecord summary_from_json(const Json& j) {
    try {
        FitRecord fit;
        fit.model = parse_model_kind(j.at("model").get<std::string>());
        fit.likelihood = parse_observation_kind(j.at("likelihood").get<std::string>());
        fit.mean_deviance = j.at("mean_deviance").get<double>();
        for (const auto& [name, v] : j.at("params").items()) {
            ParamSummary p;
            p.name = name;
            p.median = v.at("median").get<double>();
            p.ci_low = v.at("ci_low").get<double>();
            p.ci_high = v.at("ci_high").get<double>();
            p.ess = v.value("ess", 0.0);
            p.geweke_z = v.value("geweke_z", 0.0);
            p.mean = v.value("mean", p.median);
            fit.summary.params.push_back(p);
        }
        if (j.contains("data_hash")) {
            fit.data_hash = std::stoull(j.at("data_hash").get<std::string>(), nullptr, 16);
        }
        fit.n_records = j.value("n_records", std::size_t{0});
        if (j.contains("config")) {
            const auto& c = j.at("config");
            fit.config.iterations = c.value("iterations", fit.config.iterations);
            fit.config.burn_in = c.value("burn_in", fit.config.burn_in);
            fit.config.seed = c.value("seed", fit.config.seed);
            fit.config.thin = c.value("thin", fit.config.thin);
            fit.config.chains = c.value("chains", fit.config.chains);
            fit.config.target_acceptance = c.value("target_acceptance", fit.config.target_acceptance);
        }
        return fit;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed summary JSON: ") + e.what());
    } catch (const std::logic_error& e) {
        // unknown model/likelihood names and unparsable hashes
        throw FormatError(std::string("malformed summary JSON: ") + e.what());
    }
}

void write_curve_csv(std::ostream& out, const SensitivityCurve& curve) {
    out << "grid_value,h_mean,h_q025,h_q50,h_q975\n";
    for (const auto& p : curve.points) {
        out << format_double(p.grid_value) << ',' << format_double(p.h_mean) << ',' << format_double(p.h_q025)
            << ',' << format_double(p.h_q50) << ',' << format_double(p.h_q975) << '\n';
    }
}

std::vector<CurvePoint> read_curve_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty curve file");
    if (split_line(line) != std::vector<std::string>{"grid_value", "h_mean", "h_q025", "h_q50", "h_q975"}) {
        throw FormatError("curve header must be grid_value,h_mean,h_q025,h_q50,h_q975");
    }
    std::vector<CurvePoint> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto c = split_line(line);
        if (c.size() != 5) throw FormatError("wrong number of fields on line " + std::to_string(line_no));
        points.push_back({parse_cell(c[0], line_no), parse_cell(c[1], line_no), parse_cell(c[2], line_no),
                          parse_cell(c[3], line_no), parse_cell(c[4], line_no)});
    }
    return points;
}

Json si_to_json(ModelKind model, ObservationKind likelihood, const SensitivityCurve& curve, const SIResult& si) {
    Json j;
    j["model"] = std::string(to_string(model));
    j["likelihood"] = std::string(to_string(likelihood));
    j["varied"] = std::string(to_string(curve.varied));
    j["mode"] = std::string(to_string(curve.mode));
    j["si"] = si.si;
    j["h_max"] = si.h_max;
    j["h_min"] = si.h_min;
    j["progressive"] = si.progressive;
    j["si_draw_q025"] = si.si_q025;
    j["si_draw_q975"] = si.si_q975;
    j["draws_used"] = curve.draws_used;
    return j;
}

}  // namespace hsens
