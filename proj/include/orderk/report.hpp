#pragma once

#include <string>
#include <vector>

namespace orderk {

struct CheckResult {
    std::string name;
    std::string status;  // "pass", "fail", "skip"
    double residual = 0.0;
    double tolerance = 0.0;
    int count = 0;  // instances exercised
    std::string detail;

    static CheckResult pass_fail(std::string name, double residual, double tolerance, int count,
                                 std::string detail = "");
    static CheckResult skipped(std::string name, std::string reason);
};

// Ordered collection of check results; overall pass iff no check failed.
struct VerificationReport {
    std::vector<CheckResult> checks;

    bool pass() const;
    std::string render_text() const;
    std::string render_json() const;
};

}  // namespace orderk
