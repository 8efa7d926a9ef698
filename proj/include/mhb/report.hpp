#pragma once

// Verification reports and the CSV/JSON emitters shared by the CLI.  Files are
// byte-stable for identical inputs: fixed column order, 17-significant-digit
// decimals, no timestamps or timings in the payload.

#include <iosfwd>
#include <string>
#include <vector>

namespace mhb {

struct VerificationReport {
    std::string check;
    std::string params;
    double lhs = 0.0;
    double rhs = 0.0;
    double metric = 0.0;  // the compared residual or ratio deviation
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::string verifies;  // one-line description of the identity under test
    std::vector<VerificationReport> checks;

    bool all_pass() const;
};

std::string format_double(double v);  // %.17g rendering used in every emitter

void write_reports_csv(std::ostream& os, const SuiteResult& suite);
void write_reports_json(std::ostream& os, const SuiteResult& suite);

}  // namespace mhb
