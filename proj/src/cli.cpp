#include "hsens/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hsens/dataio.hpp"
#include "hsens/mcmc.hpp"
#include "hsens/numfmt.hpp"
#include "hsens/report.hpp"
#include "hsens/sensitivity.hpp"
#include "hsens/svg.hpp"

namespace fs = std::filesystem;

namespace hsens::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModelChoice {
    ModelKind kind;
    ObservationKind obs;
    bool default_combination;
};

ModelChoice resolve_model(const std::string& model, const std::string& likelihood) {
    const ObservationKind obs = parse_observation_kind(likelihood);
    const bool gaussian = obs == ObservationKind::TruncGaussian;
    if (model == "gs") return {ModelKind::GlanzelSchubert, obs, gaussian};
    if (model == "er") return {ModelKind::EggheRousseau, obs, !gaussian};
    if (model == "h") return {gaussian ? ModelKind::HirschGaussian : ModelKind::HirschNB, obs, true};
    throw UsageError("unknown model '" + model + "'");
}

std::string timestamp_utc() {
    std::time_t t;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    } else {
        t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path.string());
    f << text;
    if (!f) throw UsageError("failed writing " + path.string());
}

std::string read_text(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path.string());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Json read_json(const fs::path& path) {
    try {
        return Json::parse(read_text(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

Chain load_chain(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path.string());
    return read_chain_csv(f);
}

struct Manifest {
    std::string command;
    std::vector<std::string> args;
    std::optional<SamplerConfig> config;
    std::optional<ModelKind> model;
    std::optional<ObservationKind> likelihood;
    std::vector<std::string> inputs;
    std::string output_dir;
};

void write_manifest(const fs::path& path, const Manifest& m) {
    Json j;
    j["command"] = m.command;
    j["args"] = m.args;
    j["config"] = m.config ? config_to_json(*m.config) : Json(nullptr);
    j["model"] = m.model ? Json(std::string(to_string(*m.model))) : Json(nullptr);
    j["likelihood"] = m.likelihood ? Json(std::string(to_string(*m.likelihood))) : Json(nullptr);
    j["inputs"] = m.inputs;
    j["output_dir"] = m.output_dir;
    j["timestamp"] = timestamp_utc();
    j["tool_version"] = kToolVersion;
    write_text(path, j.dump(2) + "\n");
}

// ---------------------------------------------------------------------------

struct FitArgs {
    std::string data, model, likelihood, out = ".";
    std::size_t iters = 50000, burnin = 5000, thin = 1, chains = 1;
    std::uint64_t seed = 1;
    bool allow_nonpaper = false;
};

int cmd_fit(const FitArgs& a, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    const ModelChoice choice = resolve_model(a.model, a.likelihood);
    if (!choice.default_combination && !a.allow_nonpaper) {
        throw UsageError("model '" + a.model + "' with likelihood '" + a.likelihood +
                         "' is not one of the fitted combinations (gs+gaussian, er+nb, h+gaussian, h+nb); "
                         "pass --allow-nonpaper to fit it anyway");
    }
    std::vector<std::string> warnings;
    Dataset data = load_csv(a.data, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    if (data.empty()) throw UsageError("dataset " + a.data + " has no records");
    const std::uint64_t hash = content_hash(data);
    if (choice.obs == ObservationKind::NegBinomial) {
        if (const auto changed = round_counts(data)) {
            err << "note: rounded " << changed << " non-integer h values for the negative binomial fit\n";
        }
    }

    SamplerConfig config;
    config.iterations = a.iters;
    config.burn_in = a.burnin;
    config.seed = a.seed;
    config.thin = a.thin;
    config.chains = a.chains;
    config.validate();

    const std::size_t n_records = data.size();
    const PosteriorTarget target(choice.kind, choice.obs, default_priors(choice.kind, choice.obs), std::move(data));
    const auto chains = run_chains(target, config, target.default_inits());
    const Chain pooled = pool_chains(chains);

    FitRecord fit;
    fit.model = choice.kind;
    fit.likelihood = choice.obs;
    fit.summary = summarize(chains);
    fit.mean_deviance = mean_deviance(pooled);
    fit.config = config;
    fit.data_hash = hash;
    fit.n_records = n_records;
    fit.accept_rates = pooled.accept_rates;

    const fs::path dir(a.out);
    fs::create_directories(dir);
    {
        std::ostringstream os;
        write_chain_csv(os, chains);
        write_text(dir / "chain.csv", os.str());
    }
    write_text(dir / "summary.json", summary_to_json(fit).dump(2) + "\n");
    write_manifest(dir / "manifest_fit.json",
                   {"fit", argv, config, choice.kind, choice.obs, {a.data}, dir.string()});

    out << to_string(choice.kind) << " / " << to_string(choice.obs) << "  n=" << n_records
        << "  mean deviance " << std::fixed << std::setprecision(2) << fit.mean_deviance << '\n';
    for (const auto& p : fit.summary.params) {
        out << "  " << std::left << std::setw(6) << p.name << std::right << std::setprecision(4) << " median "
            << std::setw(10) << p.median << "  95% CI (" << p.ci_low << ", " << p.ci_high << ")  ess "
            << std::setprecision(0) << p.ess << '\n';
    }
    out.unsetf(std::ios::floatfield);
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct CompareArgs {
    std::vector<std::string> summaries;
    bool force = false;
    std::string out;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
    if (a.summaries.size() < 2 && !a.force) {
        throw UsageError("compare needs at least two fitted summaries (use --force for one)");
    }
    struct Row {
        FitRecord fit;
        std::string path;
    };
    std::vector<Row> rows;
    for (const auto& p : a.summaries) rows.push_back({summary_from_json(read_json(p)), p});
    for (const auto& r : rows) {
        if (r.fit.data_hash != rows.front().fit.data_hash) {
            throw UsageError("summaries were fitted on different datasets (" + rows.front().path + " vs " + r.path + ")");
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        if (x.fit.mean_deviance != y.fit.mean_deviance) return x.fit.mean_deviance < y.fit.mean_deviance;
        const auto nx = std::string(to_string(x.fit.model)) + "/" + std::string(to_string(x.fit.likelihood));
        const auto ny = std::string(to_string(y.fit.model)) + "/" + std::string(to_string(y.fit.likelihood));
        return nx < ny;
    });

    std::ostringstream csv;
    csv << "rank,model,likelihood,mean_deviance,best\n";
    out << std::left << std::setw(6) << "rank" << std::setw(20) << "model" << std::setw(12) << "likelihood"
        << std::right << std::setw(14) << "mean_dev" << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& f = rows[i].fit;
        out << std::left << std::setw(6) << i + 1 << std::setw(20) << to_string(f.model) << std::setw(12)
            << to_string(f.likelihood) << std::right << std::setw(14) << std::fixed << std::setprecision(2)
            << f.mean_deviance << (i == 0 ? "  *best" : "") << '\n';
        csv << i + 1 << ',' << to_string(f.model) << ',' << to_string(f.likelihood) << ','
            << format_double(f.mean_deviance) << ',' << (i == 0 ? "true" : "false") << '\n';
    }
    out.unsetf(std::ios::floatfield);
    if (!a.out.empty()) write_text(a.out, csv.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct SensitivityArgs {
    std::string chain, data, vary, mode, out = ".";
    std::size_t max_draws = 5000;
    bool all_draws = false;
};

int cmd_sensitivity(const SensitivityArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
    const Covariate varied = parse_covariate(a.vary);
    const GridMode mode = parse_grid_mode(a.mode);
    const Chain chain = load_chain(a.chain);
    const auto [kind, obs] = infer_model(chain.param_names);
    if (varied == Covariate::P && !uses_publications(kind)) {
        throw UnsupportedCombination("model " + std::string(to_string(kind)) +
                                     " does not depend on P; use --vary C");
    }
    const Dataset data = load_csv(a.data);
    const SensitivityGrid grid =
        mode == GridMode::Global ? build_global_grid(data, varied) : build_local_grid(data, varied);
    const SensitivityCurve curve = propagate(chain, kind, grid, {a.max_draws, !a.all_draws});
    const SIResult si = sensitivity_index(curve);

    const fs::path dir(a.out);
    fs::create_directories(dir);
    const std::string tag = std::string(to_string(varied)) + "_" + std::string(to_string(mode));
    {
        std::ostringstream os;
        write_curve_csv(os, curve);
        write_text(dir / ("curve_" + tag + ".csv"), os.str());
    }
    write_text(dir / ("si_" + tag + ".json"), si_to_json(kind, obs, curve, si).dump(2) + "\n");

    std::vector<svg::Series> series(4);
    series[0].label = "posterior mean";
    series[1].label = "median";
    series[2].label = "2.5%";
    series[3].label = "97.5%";
    for (const auto& p : curve.points) {
        for (auto& s : series) s.x.push_back(p.grid_value);
        series[0].y.push_back(p.h_mean);
        series[1].y.push_back(p.h_q50);
        series[2].y.push_back(p.h_q025);
        series[3].y.push_back(p.h_q975);
    }
    const std::string title = std::string(to_string(kind)) + ": h-index vs " + std::string(to_string(varied)) +
                              " (" + std::string(to_string(mode)) + ")";
    write_text(dir / ("sensitivity_" + tag + ".svg"),
               svg::line_plot(series, {title, std::string(to_string(varied)), "h", mode == GridMode::Global, true}));

    svg::Series prog{"progressive SI", {}, si.progressive};
    for (const auto& p : curve.points) prog.x.push_back(p.grid_value);
    write_text(dir / ("progressive_" + tag + ".svg"),
               svg::line_plot({prog}, {std::string(to_string(kind)) + ": progressive SI (" + std::string(to_string(varied)) + ")",
                                       std::string(to_string(varied)), "SI", mode == GridMode::Global, true}));
    write_manifest(dir / ("manifest_sensitivity_" + tag + ".json"),
                   {"sensitivity", argv, std::nullopt, kind, obs, {a.chain, a.data}, dir.string()});

    out << to_string(kind) << " " << to_string(varied) << " " << to_string(mode) << ": SI = " << std::setprecision(4)
        << si.si << "  (h_min " << si.h_min << ", h_max " << si.h_max << ")\n";
    out << std::setprecision(6);
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_summary(const std::string& data_path, const std::string& json_out, std::ostream& out, std::ostream& err) {
    std::vector<std::string> warnings;
    const Dataset data = load_csv(data_path, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    if (data.empty()) throw UsageError("dataset has no records");
    const SummaryTable table = summarize(data);
    out << format_summary(table);
    if (!json_out.empty()) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < table.values.size(); ++r) {
            rows.push_back(Json{{"stat", SummaryTable::kRowLabels[r]},
                                {"h", table.values[r][0]},
                                {"P", table.values[r][1]},
                                {"C", table.values[r][2]}});
        }
        write_text(json_out, Json{{"n", data.size()}, {"rows", rows}}.dump(2) + "\n");
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
    std::string model, likelihood = "gaussian", ranges = "ecology", out;
    std::optional<double> alpha, c, a, b, sigma, r;
    std::optional<double> p_min, p_max, c_min, c_max;
    std::size_t n = 130;
    std::uint64_t seed = 1;
    bool allow_nonpaper = false;
};

int cmd_simulate(const SimulateArgs& s, const std::vector<std::string>& argv, std::ostream& out) {
    const ModelChoice choice = resolve_model(s.model, s.likelihood);
    if (!choice.default_combination && !s.allow_nonpaper) {
        throw UsageError("model/likelihood combination not fitted by default; pass --allow-nonpaper");
    }
    if (!s.alpha) throw UsageError("--alpha is required");
    ParamVector p;
    p.alpha = *s.alpha;
    p.c = s.c;
    p.a = s.a;
    p.b = s.b;
    validate_params(choice.kind, p);

    ObservationModel obs;
    if (choice.obs == ObservationKind::TruncGaussian) {
        if (!s.sigma) throw UsageError("--sigma is required for a gaussian likelihood");
        obs = ObservationModel::gaussian(*s.sigma);
    } else {
        if (!s.r) throw UsageError("--r is required for a negative binomial likelihood");
        obs = ObservationModel::negbinom(*s.r);
    }
    CovariateRanges ranges;
    if (s.ranges == "ecology") ranges = CovariateRanges::ecology();
    else if (s.ranges == "forestry") ranges = CovariateRanges::forestry();
    else throw UsageError("--ranges must be ecology or forestry");
    if (s.p_min) ranges.P_min = *s.p_min;
    if (s.p_max) ranges.P_max = *s.p_max;
    if (s.c_min) ranges.C_min = *s.c_min;
    if (s.c_max) ranges.C_max = *s.c_max;

    const Dataset data = synthesize(choice.kind, p, obs, s.n, ranges, s.seed);
    const fs::path path(s.out);
    std::ostringstream os;
    write_csv(os, data);
    write_text(path, os.str());
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    write_manifest(dir / ("manifest_simulate_" + path.stem().string() + ".json"),
                   {"simulate", argv, std::nullopt, choice.kind, choice.obs, {}, dir.string()});
    out << "wrote " << data.size() << " synthetic journals to " << path.string() << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct PlotArgs {
    std::string trace, param = "alpha", progressive, out;
    std::vector<std::string> violin, curve, labels;
};

int cmd_plot(const PlotArgs& a, std::ostream& out) {
    const int modes = !a.trace.empty() + !a.violin.empty() + !a.curve.empty() + !a.progressive.empty();
    if (modes != 1) throw UsageError("plot needs exactly one of --trace, --violin, --curve, --progressive");
    std::string doc;
    if (!a.trace.empty()) {
        const Chain chain = load_chain(a.trace);
        svg::Series s{a.param, {}, {}};
        for (const auto& pt : export_trace(chain, a.param)) {
            s.x.push_back(static_cast<double>(pt.iteration));
            s.y.push_back(pt.value);
        }
        doc = svg::line_plot({s}, {"History plot: " + a.param, "iteration", a.param});
    } else if (!a.violin.empty()) {
        std::vector<svg::ViolinGroup> groups;
        for (std::size_t i = 0; i < a.violin.size(); ++i) {
            const Chain chain = load_chain(a.violin[i]);
            std::string label;
            if (i < a.labels.size()) {
                label = a.labels[i];
            } else {
                const auto [kind, obs] = infer_model(chain.param_names);
                label = std::string(to_string(kind)) + " (" + std::string(to_string(obs)) + ")";
            }
            groups.push_back({label, chain.deviance_draws});
        }
        doc = svg::violin_plot(groups, {"Posterior deviance", "", "deviance"});
    } else if (!a.curve.empty()) {
        std::vector<svg::Series> series;
        for (std::size_t i = 0; i < a.curve.size(); ++i) {
            std::ifstream f(a.curve[i], std::ios::binary);
            if (!f) throw UsageError("cannot open " + a.curve[i]);
            svg::Series s{i < a.labels.size() ? a.labels[i] : fs::path(a.curve[i]).stem().string(), {}, {}};
            for (const auto& p : read_curve_csv(f)) {
                s.x.push_back(p.grid_value);
                s.y.push_back(p.h_mean);
            }
            series.push_back(std::move(s));
        }
        doc = svg::line_plot(series, {"Sensitivity of the h-index", "covariate", "h", false, true});
    } else {
        const Json j = read_json(a.progressive);
        try {
            svg::Series s{"progressive SI", {}, j.at("progressive").get<std::vector<double>>()};
            for (std::size_t k = 0; k < s.y.size(); ++k) s.x.push_back(static_cast<double>(k + 1));
            doc = svg::line_plot({s}, {"Progressive SI", "grid point", "SI", false, true});
        } catch (const nlohmann::json::exception& e) {
            throw FormatError(a.progressive + ": " + e.what());
        }
    }
    write_text(a.out, doc);
    out << "wrote " << a.out << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bayesian h-index model fitting and sensitivity analysis", "hsens"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "Fit one model by MCMC");
    fit->add_option("--data", fit_args.data, "Journal CSV (journal,h,P,C)")->required();
    fit->add_option("--model", fit_args.model, "Mean function")->required()->check(CLI::IsMember({"er", "gs", "h"}));
    fit->add_option("--likelihood", fit_args.likelihood, "Observation model")
        ->required()
        ->check(CLI::IsMember({"gaussian", "nb"}));
    fit->add_option("--iters", fit_args.iters, "Post burn-in iterations")->capture_default_str();
    fit->add_option("--burnin", fit_args.burnin, "Burn-in iterations")->capture_default_str();
    fit->add_option("--seed", fit_args.seed, "RNG seed")->capture_default_str();
    fit->add_option("--thin", fit_args.thin, "Keep every n-th draw")->capture_default_str();
    fit->add_option("--chains", fit_args.chains, "Independent chains")->capture_default_str();
    fit->add_option("--out", fit_args.out, "Output directory")->capture_default_str();
    fit->add_flag("--allow-nonpaper", fit_args.allow_nonpaper, "Allow er+gaussian and gs+nb");

    CompareArgs cmp_args;
    auto* compare = app.add_subcommand("compare", "Rank fitted models by mean posterior deviance");
    compare->add_option("summaries", cmp_args.summaries, "summary.json files")->required();
    compare->add_flag("--force", cmp_args.force, "Allow a single summary");
    compare->add_option("--out", cmp_args.out, "Also write the table as CSV");

    SensitivityArgs sens_args;
    auto* sens = app.add_subcommand("sensitivity", "Probabilistic sensitivity analysis of a fitted chain");
    sens->add_option("--chain", sens_args.chain, "chain.csv from fit")->required();
    sens->add_option("--data", sens_args.data, "Journal CSV")->required();
    sens->add_option("--vary", sens_args.vary, "Covariate to vary")->required()->check(CLI::IsMember({"P", "C"}));
    sens->add_option("--mode", sens_args.mode, "Grid")->required()->check(CLI::IsMember({"global", "local"}));
    sens->add_option("--out", sens_args.out, "Output directory")->capture_default_str();
    sens->add_option("--max-draws", sens_args.max_draws, "Subsample the chain to at most this many draws")
        ->capture_default_str();
    sens->add_flag("--all-draws", sens_args.all_draws, "Use every posterior draw");

    std::string summary_data, summary_json;
    auto* summary = app.add_subcommand("summary", "Descriptive statistics table");
    summary->add_option("--data", summary_data, "Journal CSV")->required();
    summary->add_option("--json", summary_json, "Also write JSON");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Write a synthetic journal dataset");
    simulate->add_option("--model", sim.model)->required()->check(CLI::IsMember({"er", "gs", "h"}));
    simulate->add_option("--likelihood", sim.likelihood)->check(CLI::IsMember({"gaussian", "nb"}))->capture_default_str();
    simulate->add_option("--alpha", sim.alpha);
    simulate->add_option("--c", sim.c);
    simulate->add_option("--a", sim.a);
    simulate->add_option("--b", sim.b);
    simulate->add_option("--sigma", sim.sigma);
    simulate->add_option("--r", sim.r);
    simulate->add_option("--n", sim.n)->capture_default_str();
    simulate->add_option("--seed", sim.seed)->capture_default_str();
    simulate->add_option("--ranges", sim.ranges, "Covariate ranges preset")
        ->check(CLI::IsMember({"ecology", "forestry"}))
        ->capture_default_str();
    simulate->add_option("--p-min", sim.p_min);
    simulate->add_option("--p-max", sim.p_max);
    simulate->add_option("--c-min", sim.c_min);
    simulate->add_option("--c-max", sim.c_max);
    simulate->add_option("--out", sim.out, "Output CSV")->required();
    simulate->add_flag("--allow-nonpaper", sim.allow_nonpaper);

    PlotArgs plot_args;
    auto* plot = app.add_subcommand("plot", "Render SVG figures from written CSV/JSON outputs");
    plot->add_option("--trace", plot_args.trace, "chain.csv for a history plot");
    plot->add_option("--param", plot_args.param, "Parameter for --trace")->capture_default_str();
    plot->add_option("--violin", plot_args.violin, "chain.csv files for deviance violins");
    plot->add_option("--curve", plot_args.curve, "curve CSV files");
    plot->add_option("--progressive", plot_args.progressive, "SI JSON");
    plot->add_option("--labels", plot_args.labels, "Series labels");
    plot->add_option("--out", plot_args.out, "Output SVG")->required();

    std::vector<std::string> argv_store{"hsens"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUser;
    }

    try {
        if (fit->parsed()) return cmd_fit(fit_args, args, out, err);
        if (compare->parsed()) return cmd_compare(cmp_args, out);
        if (sens->parsed()) return cmd_sensitivity(sens_args, args, out);
        if (summary->parsed()) return cmd_summary(summary_data, summary_json, out, err);
        if (simulate->parsed()) return cmd_simulate(sim, args, out);
        if (plot->parsed()) return cmd_plot(plot_args, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUser;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUser;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUser;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUser;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUser;
    } catch (const InitializationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUser;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace hsens::cli
