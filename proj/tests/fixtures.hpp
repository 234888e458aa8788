#pragma once

// Datasets whose type-7 descriptive statistics reproduce the reference
// ecology and forestry tables exactly. With 21 records every tabulated
// percentile (0, 5, 10, 25, 50, 75, 90, 95, 100) falls on an order
// statistic: positions 1, 2, 3, 6, 11, 16, 19, 20, 21.

#include <array>
#include <cstdio>
#include <string>

#include "hsens/dataset.hpp"

namespace fixtures {

using Table = std::array<std::array<double, 3>, 9>;  // [row][h, P, C]

inline constexpr Table kEcology = {{{2, 48, 19},
                                    {7, 145.4, 291},
                                    {11.9, 215, 754.6},
                                    {25.25, 565, 3651.5},
                                    {45.5, 1351, 14917.5},
                                    {83.75, 2875.5, 46843},
                                    {122, 4631.8, 143452.1},
                                    {153.3, 6560.6, 193911.8},
                                    {246, 8678, 456498}}};

inline constexpr Table kForestry = {{{1, 18, 3},
                                     {2, 46.9, 20.65},
                                     {3, 69, 51.6},
                                     {4.25, 173.25, 122.5},
                                     {19, 405.5, 2435},
                                     {39, 1616, 13743.75},
                                     {73.7, 3173.5, 44343.2},
                                     {85.8, 6116, 63350.15},
                                     {101, 8374, 135245}}};

inline hsens::Dataset matching_dataset(const Table& table, const std::string& label) {
    constexpr std::array<int, 9> anchors = {0, 1, 2, 5, 10, 15, 18, 19, 20};
    std::array<std::array<double, 3>, 21> cols{};
    for (std::size_t col = 0; col < 3; ++col) {
        for (std::size_t k = 0; k + 1 < anchors.size(); ++k) {
            const int i0 = anchors[k], i1 = anchors[k + 1];
            for (int i = i0; i <= i1; ++i) {
                const double t = static_cast<double>(i - i0) / (i1 - i0);
                cols[i][col] = table[k][col] + t * (table[k + 1][col] - table[k][col]);
            }
        }
    }
    hsens::Dataset d;
    d.field_label = label;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        char name[8];
        std::snprintf(name, sizeof name, "J%02zu", i + 1);
        d.records.push_back({name, cols[i][0], cols[i][1], cols[i][2]});
    }
    return d;
}

inline hsens::Dataset ecology() { return matching_dataset(kEcology, "ecology"); }
inline hsens::Dataset forestry() { return matching_dataset(kForestry, "forestry"); }

}  // namespace fixtures
