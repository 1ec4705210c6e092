#include "permuto/report.hpp"

#include <sstream>

#include "permuto/version.hpp"

namespace permuto {

ordered_json SuiteReport::to_json() const {
    ordered_json j;
    j["suite"] = suite;
    j["version"] = version();
    j["params"] = params;
    ordered_json checks_json = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks_json.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks_json);
    j["passed"] = ok();
    return j;
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (v" << version() << ")";
    if (!params.empty()) os << " params " << params.dump();
    os << "\n";
    for (const auto& c : checks) {
        os << (c.passed ? "  PASS  " : "  FAIL  ") << c.name;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    os << (ok() ? "PASSED" : "FAILED") << " (" << checks.size() << " checks)\n";
    return os.str();
}

}  // namespace permuto
