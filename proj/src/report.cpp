#include "bstab/report.hpp"

namespace bstab {

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["params"] = params;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["equal"] = equal;
    if (!note.empty()) {
        j["note"] = note;
    }
    if (!details.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& d : details) {
            arr.push_back(d.to_json());
        }
        j["details"] = std::move(arr);
    }
    return j;
}

bool all_equal(const VerificationReport& report) {
    if (!report.equal) {
        return false;
    }
    for (const auto& d : report.details) {
        if (!all_equal(d)) {
            return false;
        }
    }
    return true;
}

}  // namespace bstab
