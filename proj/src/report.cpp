#include "orderk/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "orderk/pointset_io.hpp"

namespace orderk {

CheckResult CheckResult::pass_fail(std::string name, double residual, double tolerance, int count,
                                   std::string detail) {
    CheckResult c;
    c.name = std::move(name);
    c.residual = residual;
    c.tolerance = tolerance;
    c.count = count;
    c.detail = std::move(detail);
    c.status = residual <= tolerance ? "pass" : "fail";
    return c;
}

CheckResult CheckResult::skipped(std::string name, std::string reason) {
    CheckResult c;
    c.name = std::move(name);
    c.status = "skip";
    c.detail = std::move(reason);
    return c;
}

bool VerificationReport::pass() const {
    for (const CheckResult& c : checks) {
        if (c.status == "fail") return false;
    }
    return true;
}

std::string VerificationReport::render_text() const {
    std::string out;
    for (const CheckResult& c : checks) {
        char line[256];
        if (c.status == "skip") {
            std::snprintf(line, sizeof(line), "%-34s SKIP  (%s)\n", c.name.c_str(), c.detail.c_str());
        } else {
            std::snprintf(line, sizeof(line), "%-34s %s  residual %.3e  tol %.3e  n=%d%s%s\n", c.name.c_str(),
                          c.status == "pass" ? "PASS" : "FAIL", c.residual, c.tolerance, c.count,
                          c.detail.empty() ? "" : "  ", c.detail.c_str());
        }
        out += line;
    }
    out += pass() ? "overall: PASS\n" : "overall: FAIL\n";
    return out;
}

std::string VerificationReport::render_json() const {
    nlohmann::json j;
    j["overall"] = pass() ? "pass" : "fail";
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : checks) {
        arr.push_back({{"name", c.name},
                       {"status", c.status},
                       {"residual", c.residual},
                       {"tolerance", c.tolerance},
                       {"count", c.count},
                       {"detail", c.detail}});
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

}  // namespace orderk
