#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fencetri {

/// Parameter ranges for identity checks. Checks only read the fields
/// they need; boards/tile counts run up to n_max, j-indexed identities
/// up to j_max, and the conjecture check has its own n cap.
struct Bounds {
    int m_min = 1;
    int m_max = 5;
    int n_max = 20;
    int j_max = 6;
    int conj_n_max = 24;

    nlohmann::json to_json() const;
};

enum class CheckVerdict { pass, fail, evidence, error };

std::string to_string(CheckVerdict v);

/// Outcome of one identity check over a parameter grid. A fail carries
/// the lexicographically smallest counterexample (in (m, n, k, j, p, r)
/// order); conjecture-class checks never report better than `evidence`;
/// `error` records a guard violation instead of crashing.
struct IdentityCheck {
    std::string name;
    Bounds bounds;
    CheckVerdict verdict = CheckVerdict::error;
    std::optional<nlohmann::json> counterexample;
    std::string message;

    nlohmann::json to_json() const;
};

/// Names of every registered identity, in registry order.
std::vector<std::string> identity_names();

/// Run one identity check; unknown names raise std::invalid_argument
/// listing the valid names.
IdentityCheck verify(const std::string& name, const Bounds& bounds);

/// Run every registered identity.
std::vector<IdentityCheck> verify_all(const Bounds& bounds);

} // namespace fencetri
