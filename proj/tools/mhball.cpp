// mhball: coefficient sweeps, verification suites, and norm reports for
// M-harmonic Bergman-Besov spaces on the unit ball of C^n.
//
//   mhball coeffs --n 2 --s 0 --pmax 8 --qmax 8 --out coeffs.csv
//   mhball verify identity-pe --out report.csv
//   mhball norms f.json --s 0 --m 1 --t 1 --out norms.json
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 computational or input error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mhb/coeffs.hpp"
#include "mhb/function_spec.hpp"
#include "mhb/norms.hpp"
#include "mhb/parallel.hpp"
#include "mhb/report.hpp"
#include "mhb/verify.hpp"

namespace {

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw mhb::ValidationError("cannot open output file: " + path);
    return file;
}

struct CoeffRow {
    int p, q;
    double s;
    double value, err_est;
    mhb::Route route;
    double normalized;
};

int cmd_coeffs(int n, std::vector<double> s_values, int pmax, int qmax,
               const std::string& route_name_str, double tol, const std::string& out,
               const std::string& format) {
    const mhb::Route route = mhb::route_from_name(route_name_str);
    std::sort(s_values.begin(), s_values.end());
    std::vector<CoeffRow> rows;
    for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q <= qmax; ++q)
            for (double s : s_values) rows.push_back({p, q, s, 0, 0, route, 0});

    std::string failure;
    std::mutex failure_mtx;
    mhb::parallel_for(rows.size(), [&](std::size_t i) {
        auto& row = rows[i];
        try {
            mhb::Route eff = row.route;
            // the closed form is the only route available on the pq = 0 boundary
            if (eff == mhb::Route::double_integral && (row.p == 0 || row.q == 0))
                eff = mhb::Route::closed_p0;
            const mhb::CoeffResult r = mhb::c_pq({n, row.p, row.q, row.s, eff, tol});
            row.value = r.value;
            row.err_est = r.err_est;
            row.route = r.route_used;
            row.normalized = std::pow(row.p + 1.0, row.s + 1.0) *
                             std::pow(row.q + 1.0, row.s + 1.0) * r.value;
        } catch (const std::exception& e) {
            std::lock_guard lock(failure_mtx);
            if (failure.empty()) {
                std::ostringstream os;
                os << "cell (p=" << row.p << ", q=" << row.q << ", s=" << row.s
                   << "): " << e.what();
                failure = os.str();
            }
        }
    });
    if (!failure.empty()) {
        std::cerr << "mhball coeffs: " << failure << "\n";
        return 2;
    }

    std::ofstream file;
    std::ostream& os = open_output(out, file);
    if (format == "csv") {
        os << "p,q,s,value,err_est,route,normalized_value\n";
        for (const auto& r : rows) {
            os << r.p << "," << r.q << "," << mhb::format_double(r.s) << ","
               << mhb::format_double(r.value) << "," << mhb::format_double(r.err_est)
               << "," << mhb::route_name(r.route) << ","
               << mhb::format_double(r.normalized) << "\n";
        }
    } else {
        nlohmann::ordered_json doc;
        doc["n"] = n;
        auto& arr = doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back({{"p", r.p},
                           {"q", r.q},
                           {"s", r.s},
                           {"value", r.value},
                           {"err_est", r.err_est},
                           {"route", mhb::route_name(r.route)},
                           {"normalized_value", r.normalized}});
        }
        os << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite_name, int n_override, std::uint64_t seed,
               const std::string& out, const std::string& format) {
    const auto t0 = std::chrono::steady_clock::now();
    const mhb::SuiteResult suite = mhb::verify::run_suite(suite_name, n_override, seed);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ofstream file;
    std::ostream& os = open_output(out, file);
    if (format == "csv")
        mhb::write_reports_csv(os, suite);
    else
        mhb::write_reports_json(os, suite);
    std::cerr << "suite " << suite.suite << ": "
              << (suite.all_pass() ? "all checks passed" : "CHECK FAILURES") << " ("
              << suite.checks.size() << " checks, " << secs << " s)\n";
    return suite.all_pass() ? 0 : 1;
}

int cmd_norms(const std::string& spec_path, double s, int m, double t, int sobolev_order,
              const std::string& out, const std::string& format) {
    const mhb::MhFunction f = mhb::load_function_spec(spec_path);
    const mhb::NormReport r = mhb::norm_report(f, s, m, t, sobolev_order);

    std::ofstream file;
    std::ostream& os = open_output(out, file);
    const double vals[4] = {r.bergman, r.tangential, r.box_smoothed, r.hardy};
    const char* names[4] = {"bergman", "tangential", "box_smoothed", "hardy"};
    if (format == "csv") {
        os << "quantity,value\n";
        os << "bergman_s," << mhb::format_double(r.bergman) << "\n";
        os << "tangential_m," << mhb::format_double(r.tangential) << "\n";
        os << "box_smoothed_t," << mhb::format_double(r.box_smoothed) << "\n";
        os << "hardy_smoothed," << mhb::format_double(r.hardy) << "\n";
        os << "sobolev_m," << mhb::format_double(r.sobolev) << "\n";
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                os << "ratio_" << names[i] << "_" << names[j] << ","
                   << mhb::format_double(vals[i] / vals[j]) << "\n";
    } else {
        nlohmann::ordered_json doc;
        doc["n"] = f.dim();
        doc["s"] = r.s;
        doc["m"] = r.m;
        doc["t"] = r.t;
        doc["sobolev_order"] = r.sobolev_order;
        doc["bergman_s"] = r.bergman;
        doc["tangential_m"] = r.tangential;
        doc["box_smoothed_t"] = r.box_smoothed;
        doc["hardy_smoothed"] = r.hardy;
        doc["sobolev_m"] = r.sobolev;
        auto& ratios = doc["pairwise_ratios"];
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                ratios[std::string(names[i]) + "/" + names[j]] = vals[i] / vals[j];
        os << doc.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"M-harmonic Bergman-Besov norms and coefficients on the complex ball"};
    app.require_subcommand(1);

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "sweep the Bergman coefficients c_pq(s)");
    int n = 2, pmax = 8, qmax = 8;
    std::vector<double> s_values;
    std::string route = "auto", out = "-", format = "csv";
    double tol = 1e-10;
    coeffs->add_option("--n", n, "complex dimension")->check(CLI::PositiveNumber);
    coeffs->add_option("--s", s_values, "weight parameter (repeatable)")->required();
    coeffs->add_option("--pmax", pmax, "max holomorphic degree");
    coeffs->add_option("--qmax", qmax, "max anti-holomorphic degree");
    coeffs->add_option("--route", route,
                       "quadrature | double_integral | closed_p0 | auto");
    coeffs->add_option("--tol", tol, "relative tolerance")
        ->check(CLI::Range(1e-14, 1e-2));
    coeffs->add_option("--out", out, "output path ('-' for stdout)");
    coeffs->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int verify_n = 0;
    std::uint64_t seed = 0;
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(mhb::verify::suite_names()));
    verify->add_option("--n", verify_n, "override the dimension");
    verify->add_option("--seed", seed, "override the random seed");
    verify->add_option("--out", out, "output path ('-' for stdout)");
    verify->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    // norms
    auto* norms = app.add_subcommand("norms", "norm report for a function-spec file");
    std::string spec_path;
    double s = 0.0, t = 1.0;
    int m = 1, sobolev_order = 0;
    norms->add_option("spec", spec_path, "function-spec JSON path")->required();
    norms->add_option("--s", s, "weight parameter");
    norms->add_option("--m", m, "tangential order")->check(CLI::NonNegativeNumber);
    norms->add_option("--t", t, "box-smoothing order");
    norms->add_option("--sobolev-m", sobolev_order, "Sobolev order")
        ->check(CLI::NonNegativeNumber);
    norms->add_option("--out", out, "output path ('-' for stdout)");
    norms->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (coeffs->parsed())
            return cmd_coeffs(n, s_values, pmax, qmax, route, tol, out, format);
        if (verify->parsed()) return cmd_verify(suite, verify_n, seed, out, format);
        if (norms->parsed()) return cmd_norms(spec_path, s, m, t, sobolev_order, out, format);
    } catch (const mhb::ValidationError& e) {
        std::cerr << "mhball: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "mhball: computational error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
