// supercong: command-line front end for the supercongruence verifier.
//
// Exit codes: 0 all checks passed, 1 at least one failure, 2 usage/config error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "supercong/checks.hpp"
#include "supercong/errors.hpp"
#include "supercong/eta.hpp"
#include "supercong/hypergeom.hpp"
#include "supercong/padic_gamma.hpp"
#include "supercong/report.hpp"
#include "supercong/variety.hpp"

namespace sc = supercong;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int default_workers() {
    if (const char* env = std::getenv("SUPERCONG_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w >= 1) return w;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid SUPERCONG_WORKERS='" << env << "'\n";
    }
    return 1;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

std::vector<sc::Rational> parse_rationals(const std::vector<std::string>& items) {
    std::vector<sc::Rational> out;
    for (const auto& tok : split_list(items)) out.push_back(sc::Rational::parse(tok));
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw sc::ConfigError("cannot open output file '" + path + "'");
    f << text;
}

struct VerifyArgs {
    std::vector<std::string> checks{"all"};
    std::uint64_t pmin = 3;
    std::uint64_t pmax = 200;
    int workers = 1;
    std::size_t eta_bound = 1000;
    std::string format = "json";
    std::string out;
    bool timings = false;
    bool timestamp = false;
};

int run_verify(const VerifyArgs& a) {
    sc::SuiteConfig cfg;
    cfg.pmin = a.pmin;
    cfg.pmax = a.pmax;
    cfg.workers = a.workers;
    cfg.eta_bound = a.eta_bound;
    cfg.timings = a.timings;
    cfg.timestamp = a.timestamp;
    for (const auto& name : split_list(a.checks)) {
        if (name == "all") {
            cfg.checks.insert(sc::all_checks().begin(), sc::all_checks().end());
            continue;
        }
        const auto id = sc::check_from_string(name);
        if (!id) throw sc::ConfigError("unknown check '" + name + "'");
        cfg.checks.insert(*id);
    }
    const sc::Report report = sc::run_suite(cfg);
    write_output(sc::emit_report(report, a.format == "csv" ? sc::ReportFormat::Csv : sc::ReportFormat::Json), a.out);
    std::cerr << "pass " << report.summary.pass << ", fail " << report.summary.fail << ", skipped "
              << report.summary.skipped << "\n";
    return sc::exit_code(report);
}

int run_eta(std::size_t limit, const std::string& format) {
    const sc::EtaTable table(limit);
    if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (std::size_t n = 1; n <= limit; ++n) j.push_back({{"n", n}, {"a", table.a(n).get_str()}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n,a\n";
        for (std::size_t n = 1; n <= limit; ++n) std::cout << n << ',' << table.a(n).get_str() << '\n';
    }
    return 0;
}

int run_count(std::uint64_t p, bool brute) {
    if (!sc::is_prime(p) || p == 2) throw sc::ConfigError("--p must be an odd prime");
    const std::int64_t n = sc::count_N(p, sc::ExecPolicy::Parallel);
    std::cout << "p=" << p << " N=" << n << " p^3-2p^2-7-N=" << sc::trace_from_count(p, n) << "\n";
    if (brute) {
        const std::int64_t b = sc::brute_force_N(p);
        std::cout << "brute_force N=" << b << (b == n ? " (agrees)" : " (MISMATCH)") << "\n";
        if (b != n) return kExitFail;
    }
    return 0;
}

int run_gammap(std::uint64_t p, unsigned k, const std::string& x) {
    if (!sc::is_prime(p) || p == 2) throw sc::ConfigError("--p must be an odd prime");
    sc::GammaEvaluator g(p, k, sc::ExecPolicy::Parallel);
    const sc::ResidueInt r = g(sc::Rational::parse(x));
    std::cout << "Gamma_" << p << "(" << x << ") = " << r.str() << " (mod " << r.modulus().get_str() << ")\n";
    return 0;
}

int run_identity(const std::string& which, std::uint64_t p, std::uint64_t n, const std::string& y,
                 const std::string& reading) {
    bool equal = false;
    if (which == "b1") {
        if (p == 0) throw sc::ConfigError("identity b1 needs --p");
        const auto r = sc::bailey_b1_check(p, reading == "printed" ? sc::B1Reading::Printed : sc::B1Reading::Corrected);
        std::cout << "lhs = " << r.lhs << "\nrhs = " << r.rhs << "\n";
        equal = r.equal;
    } else if (which == "c3") {
        if (p == 0) throw sc::ConfigError("identity c3 needs --p");
        const auto r = sc::c3_check(p);
        std::cout << "lhs = " << r.lhs << "\nrhs = " << r.rhs << "\n";
        equal = r.equal;
    } else {
        if (y.empty()) throw sc::ConfigError("identity c1 needs --n and --y");
        const auto r = sc::whipple_c1_check(n, sc::Rational::parse(y));
        std::cout << "lhs = " << r.lhs << "\nrhs = " << r.rhs << "\n";
        equal = r.equal;
    }
    std::cout << "equal = " << (equal ? "true" : "false") << "\n";
    return equal ? 0 : kExitFail;
}

int run_hyper(const std::vector<std::string>& top, const std::vector<std::string>& bottom, const std::string& z,
              std::size_t terms) {
    sc::SeriesSpec<sc::Rational> spec{parse_rationals(top), parse_rationals(bottom), sc::Rational::parse(z), terms};
    std::cout << sc::pfq_truncated(spec) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of hypergeometric supercongruences"};
    app.require_subcommand(1);

    VerifyArgs va;
    va.workers = default_workers();
    auto* verify = app.add_subcommand("verify", "Run congruence checks over a prime range");
    verify->add_option("--checks", va.checks, "Comma-separated checks (a1,a2,a3,a4,swisher,b1,b4,b6,c1,c3,c5,wolstenholme,trace) or all")
        ->delimiter(',');
    verify->add_option("--pmin", va.pmin, "Smallest prime")->capture_default_str();
    verify->add_option("--pmax", va.pmax, "Largest prime")->capture_default_str();
    verify->add_option("--workers", va.workers, "Worker threads (default: $SUPERCONG_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--eta-bound", va.eta_bound, "Degree bound for the eta expansion")->capture_default_str();
    verify->add_option("--format", va.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    verify->add_option("--out", va.out, "Write the report to FILE instead of stdout");
    verify->add_flag("--timings", va.timings, "Record per-check elapsed_ms (report no longer byte-stable)");
    verify->add_flag("--timestamp", va.timestamp, "Include a UTC timestamp in JSON reports");

    std::size_t eta_limit = 100;
    std::string eta_format = "csv";
    auto* eta = app.add_subcommand("eta", "Print coefficients a(n) of eta^4(2z) eta^4(4z)");
    eta->add_option("--limit", eta_limit, "Largest n")->required()->check(CLI::PositiveNumber);
    eta->add_option("--out", eta_format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    std::uint64_t count_p = 0;
    bool brute = false;
    auto* count = app.add_subcommand("count", "Count points N(p) on the threefold over F_p");
    count->add_option("--p", count_p, "Odd prime")->required();
    count->add_flag("--brute", brute, "Also run the brute-force enumeration (p <= 13)");

    std::uint64_t gp_p = 0;
    unsigned gp_k = 1;
    std::string gp_x;
    auto* gammap = app.add_subcommand("gammap", "Evaluate the p-adic Gamma function mod p^k");
    gammap->add_option("--p", gp_p, "Odd prime")->required();
    gammap->add_option("--k", gp_k, "Precision exponent")->required()->check(CLI::PositiveNumber);
    gammap->add_option("--x", gp_x, "p-integral rational argument a/b")->required();

    std::string which;
    std::uint64_t id_p = 0;
    std::uint64_t id_n = 0;
    std::string id_y;
    std::string reading = "corrected";
    auto* identity = app.add_subcommand("identity", "Check one exact hypergeometric identity instance");
    identity->add_option("--which", which, "b1, c1 or c3")->required()->check(CLI::IsMember({"b1", "c1", "c3"}));
    identity->add_option("--p", id_p, "Prime (b1, c3)");
    identity->add_option("--n", id_n, "n (c1)");
    identity->add_option("--y", id_y, "y as a/b (c1)");
    identity->add_option("--reading", reading, "b1 parameter reading")
        ->check(CLI::IsMember({"corrected", "printed"}))
        ->capture_default_str();

    std::vector<std::string> top;
    std::vector<std::string> bottom;
    std::string z = "1";
    std::size_t terms = 0;
    auto* hyper = app.add_subcommand("hyper", "Evaluate a truncated hypergeometric series exactly");
    hyper->add_option("--top", top, "Top parameters (a/b, comma or space separated)")->required();
    hyper->add_option("--bottom", bottom, "Bottom parameters");
    hyper->add_option("--z", z, "Argument, typically 1 or -1")->capture_default_str();
    hyper->add_option("--terms", terms, "Truncation index n (sum k = 0..n)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) return run_verify(va);
        if (*eta) return run_eta(eta_limit, eta_format);
        if (*count) return run_count(count_p, brute);
        if (*gammap) return run_gammap(gp_p, gp_k, gp_x);
        if (*identity) return run_identity(which, id_p, id_n, id_y, reading);
        if (*hyper) return run_hyper(top, bottom, z, terms);
    } catch (const sc::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
