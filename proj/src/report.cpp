#include "mhb/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace mhb {

bool SuiteResult::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

void write_reports_csv(std::ostream& os, const SuiteResult& suite) {
    os << "# suite: " << suite.suite << "\n";
    os << "# verifies: " << suite.verifies << "\n";
    os << "check,params,lhs,rhs,metric,tolerance,pass\n";
    for (const auto& c : suite.checks) {
        os << csv_escape(c.check) << "," << csv_escape(c.params) << ","
           << format_double(c.lhs) << "," << format_double(c.rhs) << ","
           << format_double(c.metric) << "," << format_double(c.tolerance) << ","
           << (c.pass ? "true" : "false") << "\n";
    }
}

void write_reports_json(std::ostream& os, const SuiteResult& suite) {
    nlohmann::ordered_json doc;
    doc["suite"] = suite.suite;
    doc["verifies"] = suite.verifies;
    doc["all_pass"] = suite.all_pass();
    auto& arr = doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : suite.checks) {
        nlohmann::ordered_json row;
        row["check"] = c.check;
        row["params"] = c.params;
        row["lhs"] = c.lhs;
        row["rhs"] = c.rhs;
        row["metric"] = c.metric;
        row["tolerance"] = c.tolerance;
        row["pass"] = c.pass;
        arr.push_back(std::move(row));
    }
    os << doc.dump(2) << "\n";
}

}  // namespace mhb
