#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace bstab {

/// Raised when a theorem check is asked about an input outside the theorem's
/// hypotheses (e.g. an unbalanced shape). Distinct from a failed identity.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Outcome of checking one identity on one instance. lhs and rhs are exact
/// values rendered as text (integers, "p/q" rationals or polynomials).
struct VerificationReport {
    std::string claim;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::string lhs;
    std::string rhs;
    bool equal = false;
    std::string note;
    std::vector<VerificationReport> details;

    /// {claim, params, lhs, rhs, equal}, plus "note" and "details" when present.
    nlohmann::ordered_json to_json() const;
};

/// True when the report and every nested detail compared equal.
bool all_equal(const VerificationReport& report);

}  // namespace bstab
