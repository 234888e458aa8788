#include "hsens/dataio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <unordered_set>

#include "hsens/numfmt.hpp"
#include "hsens/quantile.hpp"

namespace hsens {

namespace {

constexpr std::array<std::string_view, 4> kHeader = {"journal", "h", "P", "C"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string row_tag(std::size_t row) { return " at row " + std::to_string(row); }

}  // namespace

Dataset parse_csv(std::istream& in, std::string field_label, std::vector<std::string>* warnings) {
    std::string line;
    if (!std::getline(in, line)) throw DataError(DataErrorKind::MissingColumn, 0, "empty file: missing header");
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    const auto header = split(line);
    for (std::size_t k = 0; k < kHeader.size(); ++k) {
        if (k >= header.size() || header[k] != kHeader[k]) {
            throw DataError(DataErrorKind::MissingColumn, 0,
                            "missing column '" + std::string(kHeader[k]) + "' in header (expected journal,h,P,C)");
        }
    }
    if (header.size() != kHeader.size()) {
        throw DataError(DataErrorKind::FieldCount, 0, "unexpected extra columns in header");
    }

    Dataset data;
    data.field_label = std::move(field_label);
    std::unordered_set<std::string> names;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        ++row;
        const auto fields = split(line);
        if (fields.size() != kHeader.size()) {
            throw DataError(DataErrorKind::FieldCount, row,
                            "expected 4 fields, found " + std::to_string(fields.size()) + row_tag(row));
        }
        JournalRecord rec;
        rec.name = std::string(fields[0]);
        double* targets[] = {&rec.h, &rec.P, &rec.C};
        for (std::size_t k = 1; k < 4; ++k) {
            const auto v = parse_double(fields[k]);
            if (!v || !std::isfinite(*v)) {
                throw DataError(DataErrorKind::NonNumeric, row,
                                "non-numeric " + std::string(kHeader[k]) + " '" + std::string(fields[k]) + "'" +
                                    row_tag(row));
            }
            *targets[k - 1] = *v;
        }
        if (rec.h < 0.0) throw DataError(DataErrorKind::NegativeValue, row, "negative h" + row_tag(row));
        if (rec.C < 0.0) throw DataError(DataErrorKind::NegativeValue, row, "negative C" + row_tag(row));
        if (rec.P < 1.0) throw DataError(DataErrorKind::InvalidPublications, row, "P < 1" + row_tag(row));
        if (rec.h > rec.P) throw DataError(DataErrorKind::HExceedsP, row, "h exceeds P" + row_tag(row));
        if (!names.insert(rec.name).second) {
            throw DataError(DataErrorKind::DuplicateName, row,
                            "duplicate journal name '" + rec.name + "'" + row_tag(row));
        }
        if (warnings && rec.h >= 1.0 && rec.C < rec.h * rec.h) {
            warnings->push_back("C < h^2" + row_tag(row) + " (" + rec.name + ")");
        }
        data.records.push_back(std::move(rec));
    }
    return data;
}

Dataset load_csv(const std::filesystem::path& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError(DataErrorKind::Io, 0, "cannot open " + path.string());
    return parse_csv(in, path.stem().string(), warnings);
}

void write_csv(std::ostream& out, const Dataset& data) {
    out << "journal,h,P,C\n";
    for (const auto& r : data.records) {
        if (r.name.find_first_of(",\n\r") != std::string::npos) {
            throw DataError(DataErrorKind::NonNumeric, 0, "journal name '" + r.name + "' contains a separator");
        }
        out << r.name << ',' << format_double(r.h) << ',' << format_double(r.P) << ',' << format_double(r.C)
            << '\n';
    }
}

void save_csv(const std::filesystem::path& path, const Dataset& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError(DataErrorKind::Io, 0, "cannot write " + path.string());
    write_csv(out, data);
}

std::size_t round_counts(Dataset& data) {
    std::size_t changed = 0;
    for (auto& r : data.records) {
        const double rounded = std::round(r.h);
        if (rounded != r.h) {
            r.h = rounded;
            ++changed;
        }
    }
    return changed;
}

std::uint64_t content_hash(const Dataset& data) {
    std::ostringstream os;
    write_csv(os, data);
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char ch : os.str()) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    return hash;
}

SummaryTable summarize(const Dataset& data) {
    if (data.empty()) throw std::invalid_argument("cannot summarize an empty dataset");
    std::array<std::vector<double>, 3> cols;
    for (const auto& r : data.records) {
        cols[0].push_back(r.h);
        cols[1].push_back(r.P);
        cols[2].push_back(r.C);
    }
    SummaryTable table;
    for (std::size_t c = 0; c < 3; ++c) {
        std::sort(cols[c].begin(), cols[c].end());
        for (std::size_t row = 0; row < SummaryTable::kPercentiles.size(); ++row) {
            table.values[row][c] = quantile_sorted(cols[c], SummaryTable::kPercentiles[row] / 100.0);
        }
    }
    return table;
}

std::string format_summary(const SummaryTable& table) {
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return std::string(buf);
    };
    std::ostringstream os;
    os << std::left << std::setw(8) << "";
    for (const char* col : SummaryTable::kColumns) os << std::right << std::setw(14) << col;
    os << '\n';
    for (std::size_t row = 0; row < table.values.size(); ++row) {
        os << std::left << std::setw(8) << SummaryTable::kRowLabels[row];
        for (double v : table.values[row]) os << std::right << std::setw(14) << num(v);
        os << '\n';
    }
    return os.str();
}

void CovariateRanges::validate() const {
    if (!(P_min >= 1.0) || !(P_max >= P_min) || !std::isfinite(P_max)) {
        throw DomainError("invalid publication range");
    }
    if (!(C_min > 0.0) || !(C_max >= C_min) || !std::isfinite(C_max)) {
        throw DomainError("invalid citation range (log-uniform needs C_min > 0)");
    }
}

Dataset synthesize(ModelKind kind, const ParamVector& params, const ObservationModel& obs, std::size_t n,
                   const CovariateRanges& ranges, std::uint64_t seed) {
    validate_params(kind, params);
    ranges.validate();
    if (n < 1) throw DomainError("need at least one record");
    if (obs.kind == ObservationKind::TruncGaussian && !(obs.sigma && *obs.sigma > 0.0)) {
        throw DomainError("gaussian observation model needs sigma > 0");
    }
    if (obs.kind == ObservationKind::NegBinomial && !(obs.r && *obs.r > 0.0)) {
        throw DomainError("negative binomial observation model needs r > 0");
    }

    constexpr int kMaxAttempts = 100000;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_p(std::log(ranges.P_min), std::log(ranges.P_max));
    std::uniform_real_distribution<double> log_c(std::log(ranges.C_min), std::log(ranges.C_max));
    std::normal_distribution<double> normal(0.0, 1.0);

    auto draw_h = [&](double mu) -> double {
        if (obs.kind == ObservationKind::TruncGaussian) {
            double x;
            do {
                x = mu + *obs.sigma * normal(rng);
            } while (x < 0.0);
            return std::round(x);
        }
        if (mu == 0.0) return 0.0;
        const double r = *obs.r;
        std::gamma_distribution<double> gamma(r, mu / r);
        const double lambda = gamma(rng);
        std::poisson_distribution<long long> poisson(lambda);
        return static_cast<double>(poisson(rng));
    };

    const int width = static_cast<int>(std::to_string(n).size());
    Dataset data;
    data.field_label = "synthetic";
    data.records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        JournalRecord rec;
        char name[32];
        std::snprintf(name, sizeof name, "J%0*zu", width, i + 1);
        rec.name = name;
        double mu = 0.0;
        int attempts = 0;
        do {
            if (++attempts > kMaxAttempts) throw DomainError("covariate ranges admit no mean below P");
            rec.P = std::clamp(std::round(std::exp(log_p(rng))), ranges.P_min, ranges.P_max);
            rec.C = std::clamp(std::round(std::exp(log_c(rng))), ranges.C_min, ranges.C_max);
            mu = evaluate_mean(kind, params, {rec.P, rec.C});
        } while (mu > rec.P);
        attempts = 0;
        do {
            if (++attempts > kMaxAttempts) throw DomainError("cannot draw h <= P");
            rec.h = draw_h(mu);
        } while (rec.h > rec.P);
        data.records.push_back(std::move(rec));
    }
    return data;
}

}  // namespace hsens
