#pragma once

#include <string>
#include <vector>

namespace hsens {

// One journal's (h, P, C) triple. Counts are stored as doubles so that
// interpolated or fractional inputs survive a round trip unchanged.
struct JournalRecord {
    std::string name;
    double h = 0.0;
    double P = 1.0;
    double C = 0.0;

    friend bool operator==(const JournalRecord&, const JournalRecord&) = default;
};

struct Dataset {
    std::vector<JournalRecord> records;
    std::string field_label;

    std::size_t size() const noexcept { return records.size(); }
    bool empty() const noexcept { return records.empty(); }

    friend bool operator==(const Dataset&, const Dataset&) = default;
};

}  // namespace hsens
