#pragma once

#include <string>
#include <utility>

namespace bc1 {

enum class VerdictStatus {
    holds_exact,   // identity holds with zero residual in exact arithmetic
    holds_approx,  // residual below tolerance (numerical engines only)
    fails,
};

/// Structured result of an identity check. Failure is data, not an
/// exception: callers aggregate verdicts into reports and exit codes.
struct OperatorVerdict {
    VerdictStatus status = VerdictStatus::fails;
    double residual = 0.0;   // max |coefficient| of the defect
    std::string detail;      // human-readable case description

    bool ok() const { return status != VerdictStatus::fails; }

    static OperatorVerdict exact_pass(std::string detail) {
        return {VerdictStatus::holds_exact, 0.0, std::move(detail)};
    }
    static OperatorVerdict approx_pass(double residual, std::string detail) {
        return {VerdictStatus::holds_approx, residual, std::move(detail)};
    }
    static OperatorVerdict failure(double residual, std::string detail) {
        return {VerdictStatus::fails, residual, std::move(detail)};
    }
};

}  // namespace bc1
