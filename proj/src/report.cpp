#include "tml/report.hpp"

#include <json.hpp>

#include "tml/coeff.hpp"

namespace tml {

std::string report_to_json(const CertificationReport& r, int indent) {
    nlohmann::ordered_json j;
    j["schema"] = "tml/1";
    j["claim"] = r.claim_id;
    j["title"] = r.title;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["pass"] = r.pass;
    j["negative_control"] = r.negative_control;
    j["skipped"] = r.skipped;
    nlohmann::ordered_json obs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.observed) obs[k] = format_double(v);
    j["observed"] = obs;
    j["tolerance"] = format_double(r.tolerance);
    j["note"] = r.note;
    j["artifacts"] = r.artifacts;
    return j.dump(indent);
}

}  // namespace tml
