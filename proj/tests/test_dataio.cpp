#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "hsens/dataio.hpp"

using namespace hsens;
namespace fs = std::filesystem;

namespace {

Dataset parse(const std::string& text, std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    return parse_csv(in, "test", warnings);
}

DataErrorKind error_kind(const std::string& text) {
    try {
        parse(text);
    } catch (const DataError& e) {
        return e.kind();
    }
    FAIL("expected a DataError");
    return DataErrorKind::Io;
}

ParamVector gs(double alpha, double c) {
    ParamVector p{alpha};
    p.c = c;
    return p;
}

}  // namespace

TEST_CASE("minimal file") {
    const Dataset d = parse("journal,h,P,C\nJ1,2,48,19");
    REQUIRE(d.size() == 1);
    CHECK(d.records[0] == JournalRecord{"J1", 2.0, 48.0, 19.0});
    CHECK(d.field_label == "test");
}

TEST_CASE("negative h names the row") {
    try {
        parse("journal,h,P,C\nJ1,-1,10,5\n");
        FAIL("no error");
    } catch (const DataError& e) {
        CHECK(e.kind() == DataErrorKind::NegativeValue);
        CHECK(e.row() == 1);
        CHECK(std::string(e.what()).find("negative h at row 1") != std::string::npos);
    }
}

TEST_CASE("each validation failure has its own kind") {
    CHECK(error_kind("journal,h,P\nJ1,1,2\n") == DataErrorKind::MissingColumn);
    CHECK(error_kind("name,h,P,C\nJ1,1,2,3\n") == DataErrorKind::MissingColumn);
    CHECK(error_kind("") == DataErrorKind::MissingColumn);
    CHECK(error_kind("journal,h,P,C\nJ1,1,2\n") == DataErrorKind::FieldCount);
    CHECK(error_kind("journal,h,P,C\nJ1,x,2,3\n") == DataErrorKind::NonNumeric);
    CHECK(error_kind("journal,h,P,C\nJ1,1,2,\n") == DataErrorKind::NonNumeric);
    CHECK(error_kind("journal,h,P,C\nJ1,0,0.5,3\n") == DataErrorKind::InvalidPublications);
    CHECK(error_kind("journal,h,P,C\nJ1,1,2,-3\n") == DataErrorKind::NegativeValue);
    CHECK(error_kind("journal,h,P,C\nJ1,5,2,30\n") == DataErrorKind::HExceedsP);
    CHECK(error_kind("journal,h,P,C\nJ1,1,2,3\nJ1,1,2,3\n") == DataErrorKind::DuplicateName);
}

TEST_CASE("error rows count data lines") {
    try {
        parse("journal,h,P,C\nA,1,2,3\nB,1,2,3\nC,1,zz,3\n");
        FAIL("no error");
    } catch (const DataError& e) {
        CHECK(e.row() == 3);
    }
}

TEST_CASE("C below h squared is only a warning") {
    std::vector<std::string> warnings;
    const Dataset d = parse("journal,h,P,C\nJ1,5,20,10\nJ2,2,20,10\n", &warnings);
    CHECK(d.size() == 2);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("row 1") != std::string::npos);
}

TEST_CASE("save then load is the identity") {
    const std::string text = "journal,h,P,C\nAlpha,3,40,120\nBeta,7.5,100,1000.25\nGamma,0,1,0\n";
    const Dataset d = parse(text);
    CHECK(d.size() == 3);
    std::ostringstream out;
    write_csv(out, d);
    CHECK(out.str() == text);

    const fs::path dir = fs::temp_directory_path() / "hsens_dataio_test";
    fs::create_directories(dir);
    const Dataset eco = fixtures::ecology();
    save_csv(dir / "eco.csv", eco);
    Dataset back = load_csv(dir / "eco.csv");
    CHECK(back.field_label == "eco");
    back.field_label = eco.field_label;
    CHECK(back == eco);
    fs::remove_all(dir);

    CHECK_THROWS_AS(load_csv(dir / "missing.csv"), DataError);
}

TEST_CASE("round_counts") {
    Dataset d = parse("journal,h,P,C\nA,3.4,40,120\nB,7,100,1000\nC,2.5,10,30\n");
    CHECK(round_counts(d) == 2);
    CHECK(d.records[0].h == 3.0);
    CHECK(d.records[2].h == 3.0);
    CHECK(round_counts(d) == 0);
}

TEST_CASE("content hash tracks content") {
    const Dataset a = fixtures::ecology();
    Dataset b = a;
    CHECK(content_hash(a) == content_hash(b));
    b.records[3].C += 1.0;
    CHECK(content_hash(a) != content_hash(b));
}

TEST_CASE("summary table") {
    const auto single = summarize(parse("journal,h,P,C\nJ1,4,40,90\n"));
    for (const auto& row : single.values) CHECK(row == std::array<double, 3>{4, 40, 90});

    Dataset seq;
    for (int i = 1; i <= 99; ++i) seq.records.push_back({"J" + std::to_string(i), double(i), 100.0, 1.0e4});
    const auto t = summarize(seq);
    CHECK(t.values[4][0] == 50.0);
    CHECK(t.values[3][0] == doctest::Approx(25.5));

    for (const auto& [table, data] : {std::pair{fixtures::kEcology, fixtures::ecology()},
                                      std::pair{fixtures::kForestry, fixtures::forestry()}}) {
        const auto s = summarize(data);
        for (std::size_t r = 0; r < 9; ++r) {
            for (std::size_t c = 0; c < 3; ++c) CHECK(s.values[r][c] == doctest::Approx(table[r][c]).epsilon(1e-12));
        }
    }
    CHECK_THROWS(summarize(Dataset{}));
}

TEST_CASE("summary is permutation invariant and monotone down each column") {
    std::mt19937_64 rng(8);
    Dataset d = synthesize(ModelKind::GlanzelSchubert, gs(1.77, 0.7), ObservationModel::gaussian(5.0), 77,
                           CovariateRanges::ecology(), 2);
    const auto base = summarize(d);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(d.records.begin(), d.records.end(), rng);
        CHECK(summarize(d).values == base.values);
    }
    for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t r = 1; r < 9; ++r) CHECK(base.values[r - 1][c] <= base.values[r][c]);
    }
}

TEST_CASE("formatted summary layout") {
    const std::string text = format_summary(summarize(fixtures::ecology()));
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 10);
    CHECK(lines[0].find('h') != std::string::npos);
    CHECK(lines[5].rfind("median", 0) == 0);
    CHECK(lines[5].find("14917.5") != std::string::npos);
    CHECK(lines[9].rfind("max", 0) == 0);
}

TEST_CASE("synthesize is deterministic and respects its ranges") {
    const auto ranges = CovariateRanges::ecology();
    const Dataset a = synthesize(ModelKind::GlanzelSchubert, gs(1.77, 0.7), ObservationModel::gaussian(12.0), 130,
                                 ranges, 42);
    const Dataset b = synthesize(ModelKind::GlanzelSchubert, gs(1.77, 0.7), ObservationModel::gaussian(12.0), 130,
                                 ranges, 42);
    CHECK(a == b);
    CHECK(a.size() == 130);
    CHECK(a.records[0].name == "J001");
    const Dataset c = synthesize(ModelKind::GlanzelSchubert, gs(1.77, 0.7), ObservationModel::gaussian(12.0), 130,
                                 ranges, 43);
    CHECK_FALSE(a == c);
    for (const auto& r : a.records) {
        CHECK(r.P >= ranges.P_min);
        CHECK(r.P <= ranges.P_max);
        CHECK(r.C >= ranges.C_min);
        CHECK(r.C <= ranges.C_max);
        CHECK(r.h >= 0.0);
        CHECK(r.h <= r.P);
        CHECK(r.h == std::round(r.h));
    }

    ParamVector h{2.0};
    h.a = 1.5;
    h.b = 1.2;
    const Dataset nb = synthesize(ModelKind::HirschNB, h, ObservationModel::negbinom(4.0), 60,
                                  CovariateRanges::forestry(), 1);
    for (const auto& r : nb.records) {
        CHECK(r.h == std::round(r.h));
        CHECK(r.h <= r.P);
    }
}

TEST_CASE("vanishing noise rounds the mean") {
    const Dataset d = synthesize(ModelKind::GlanzelSchubert, gs(1.77, 0.7), ObservationModel::gaussian(1e-9), 200,
                                 CovariateRanges::ecology(), 3);
    for (const auto& r : d.records) {
        CHECK(r.h == std::round(evaluate_mean(ModelKind::GlanzelSchubert, gs(1.77, 0.7), {r.P, r.C})));
    }
}

TEST_CASE("median h matches an independent Monte Carlo of the generator") {
    // Oracle: log-uniform (P, C), pairs with mu > P discarded, no rounding.
    // Discarding removes the high-mean corner (small P, large C), so the
    // median sits below the mean at the geometric midpoints (19.15).
    const auto ranges = CovariateRanges::ecology();
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> lp(std::log(ranges.P_min), std::log(ranges.P_max));
    std::uniform_real_distribution<double> lc(std::log(ranges.C_min), std::log(ranges.C_max));
    std::vector<double> mus;
    std::size_t rejected = 0;
    while (mus.size() < 200000) {
        const double P = std::exp(lp(rng)), C = std::exp(lc(rng));
        const double mu = 0.7 * std::pow(P, 1.0 / 2.77) * std::pow(C / P, 1.77 / 2.77);
        if (mu > P) {
            ++rejected;
            continue;
        }
        mus.push_back(mu);
    }
    std::nth_element(mus.begin(), mus.begin() + 100000, mus.end());
    const double oracle = mus[100000];
    CHECK(oracle > 13.0);
    CHECK(oracle < 17.0);
    CHECK(static_cast<double>(rejected) / 200000.0 == doctest::Approx(0.12).epsilon(0.15));

    const Dataset big = synthesize(ModelKind::GlanzelSchubert, gs(1.77, 0.7), ObservationModel::gaussian(1.0),
                                   20000, ranges, 7);
    CHECK(summarize(big).values[4][0] == doctest::Approx(oracle).epsilon(0.05));

    const Dataset n130 = synthesize(ModelKind::GlanzelSchubert, gs(1.77, 0.7),
                                           ObservationModel::gaussian(12.0), 130, ranges, 7);
    CHECK(summarize(n130).values[4][0] == doctest::Approx(oracle).epsilon(0.35));
}

TEST_CASE("synthesize argument checks") {
    CHECK_THROWS_AS(synthesize(ModelKind::GlanzelSchubert, gs(1.77, 0.7), ObservationModel::gaussian(1.0), 10,
                               {100.0, 10.0, 1.0, 10.0}, 1),
                    DomainError);
    CHECK_THROWS_AS(synthesize(ModelKind::GlanzelSchubert, gs(1.77, 0.7), ObservationModel::gaussian(1.0), 10,
                               {1.0, 10.0, 0.0, 10.0}, 1),
                    DomainError);
    CHECK_THROWS_AS(synthesize(ModelKind::GlanzelSchubert, gs(0.5, 0.7), ObservationModel::gaussian(1.0), 10,
                               CovariateRanges::ecology(), 1),
                    DomainError);
    CHECK_THROWS_AS(synthesize(ModelKind::GlanzelSchubert, gs(1.77, 0.7), ObservationModel::gaussian(1.0), 0,
                               CovariateRanges::ecology(), 1),
                    DomainError);
}
