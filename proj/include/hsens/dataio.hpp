#pragma once

// Journal dataset I/O (CSV `journal,h,P,C`), descriptive statistics and
// synthetic data generation.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsens/dataset.hpp"
#include "hsens/likelihood.hpp"
#include "hsens/models.hpp"

namespace hsens {

enum class DataErrorKind {
    Io,
    MissingColumn,
    FieldCount,
    NonNumeric,
    InvalidPublications,
    NegativeValue,
    HExceedsP,
    DuplicateName,
};

// Row numbers count data rows from 1 (the header is row 0).
class DataError : public std::runtime_error {
public:
    DataError(DataErrorKind kind, std::size_t row, const std::string& message)
        : std::runtime_error(message), kind_(kind), row_(row) {}

    DataErrorKind kind() const noexcept { return kind_; }
    std::size_t row() const noexcept { return row_; }

private:
    DataErrorKind kind_;
    std::size_t row_;
};

// Parses and validates. Records with C < h^2 are accepted; a note for each
// is appended to `warnings` when given.
Dataset parse_csv(std::istream& in, std::string field_label = {},
                  std::vector<std::string>* warnings = nullptr);
Dataset load_csv(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

void write_csv(std::ostream& out, const Dataset& data);
void save_csv(const std::filesystem::path& path, const Dataset& data);

// Rounds every h to the nearest integer (for NB fits); returns how many
// records changed.
std::size_t round_counts(Dataset& data);

// FNV-1a over the canonical CSV serialization.
std::uint64_t content_hash(const Dataset& data);

struct SummaryTable {
    static constexpr std::array<const char*, 9> kRowLabels = {"min", "5%",  "10%", "25%", "median",
                                                              "75%", "90%", "95%", "max"};
    static constexpr std::array<double, 9> kPercentiles = {0, 5, 10, 25, 50, 75, 90, 95, 100};
    static constexpr std::array<const char*, 3> kColumns = {"h", "P", "C"};

    std::array<std::array<double, 3>, 9> values{};  // [row][column]
};

SummaryTable summarize(const Dataset& data);
std::string format_summary(const SummaryTable& table);

struct CovariateRanges {
    double P_min = 1.0;
    double P_max = 1.0;
    double C_min = 1.0;
    double C_max = 1.0;

    void validate() const;

    // Minimum and maximum rows of the two journal corpora.
    static CovariateRanges ecology() { return {48.0, 8678.0, 19.0, 456498.0}; }
    static CovariateRanges forestry() { return {18.0, 8374.0, 3.0, 135245.0}; }
};

// Draws n journals: P and C independently log-uniform in `ranges` (rounded
// to whole counts), then h from the observation model around the model
// mean (truncated Gaussian draws rounded to the nearest integer). Covariate pairs whose mean
// exceeds P are redrawn, as is any h above P, so that h <= P holds.
Dataset synthesize(ModelKind kind, const ParamVector& params, const ObservationModel& obs, std::size_t n,
                   const CovariateRanges& ranges, std::uint64_t seed);

}  // namespace hsens
