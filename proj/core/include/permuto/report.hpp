#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace permuto {

using ordered_json = nlohmann::ordered_json;

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;  // counterexample payload or counts
};

// Machine-readable outcome of one verification suite. Deterministic for a
// fixed (command, seed); timing is reported out of band so byte-identical
// reruns stay byte-identical.
struct SuiteReport {
    std::string suite;
    ordered_json params;
    std::vector<CheckResult> checks;
    double wall_ms = 0.0;  // not serialized

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    ordered_json to_json() const;
    std::string to_text() const;
};

}  // namespace permuto
