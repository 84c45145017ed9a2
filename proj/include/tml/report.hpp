#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tml {

// Outcome of one certified check.  `observed` carries the empirical
// constants; values are serialized as 17-significant-digit decimal strings
// so reports are byte-identical across runs.
struct CertificationReport {
    std::string claim_id;
    std::string title;
    std::vector<std::pair<std::string, std::string>> params;  // ordered key/value
    bool pass = false;
    bool negative_control = false;  // expected to fail
    bool skipped = false;
    std::vector<std::pair<std::string, double>> observed;
    double tolerance = 0.0;
    std::string note;
    std::vector<std::string> artifacts;

    void param(std::string k, std::string v) { params.emplace_back(std::move(k), std::move(v)); }
    void param(std::string k, long long v) { params.emplace_back(std::move(k), std::to_string(v)); }
    void observe(std::string name, double v) { observed.emplace_back(std::move(name), v); }
    // A report "meets expectation" when pass == !negative_control.
    bool expected() const { return skipped || pass == !negative_control; }
};

// JSON encoding (schema "tml/1"), deterministic field order.
std::string report_to_json(const CertificationReport& r, int indent = 2);

}  // namespace tml
