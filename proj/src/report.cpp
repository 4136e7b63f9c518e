#include "supercong/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "supercong/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace supercong {

namespace {

using ordered_json = nlohmann::ordered_json;

bool needs_eta(CheckId id) { return id == CheckId::A1 || id == CheckId::A2 || id == CheckId::TRACE_RELATION; }

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// One unit of parallel work: all selected checks at one prime, or one C1 case.
struct Task {
    bool c1 = false;
    std::uint64_t key = 0;  // p, or n for C1
    Rational y;
};

std::vector<CheckOutcome> run_task(const Task& task, const std::vector<CheckId>& ids, const EtaTable* eta,
                                   bool timings) {
    using clock = std::chrono::steady_clock;
    std::vector<CheckOutcome> out;
    auto timed = [&](auto&& fn) {
        const auto t0 = clock::now();
        CheckOutcome o = fn();
        if (timings) o.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        out.push_back(std::move(o));
    };
    if (task.c1) {
        timed([&] { return check_c1(task.key, task.y); });
        return out;
    }
    CheckEnv env(eta, ExecPolicy::Serial);
    for (CheckId id : ids) timed([&] { return run_check(id, task.key, env); });
    return out;
}

ordered_json opt(const std::optional<std::string>& s) { return s ? ordered_json(*s) : ordered_json(nullptr); }

std::optional<std::string> opt_string(const ordered_json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::string>();
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + '"';
}

}  // namespace

void finalize(Report& report) {
    std::sort(report.outcomes.begin(), report.outcomes.end(), [](const CheckOutcome& a, const CheckOutcome& b) {
        return std::tie(a.check, a.p, a.note) < std::tie(b.check, b.p, b.note);
    });
    report.summary = {};
    for (const auto& o : report.outcomes) {
        switch (o.status) {
            case Status::Pass: ++report.summary.pass; break;
            case Status::Fail: ++report.summary.fail; break;
            case Status::Skipped: ++report.summary.skipped; break;
        }
    }
}

Report run_suite(const SuiteConfig& config) {
    if (config.checks.empty()) throw ConfigError("empty check set");
    if (config.pmin > config.pmax) throw ConfigError("pmin > pmax");
    if (config.workers < 1) throw ConfigError("workers must be >= 1");

    std::vector<CheckId> prime_checks;
    bool want_c1 = false;
    bool want_eta = false;
    for (CheckId id : config.checks) {
        if (id == CheckId::C1_IDENTITY) {
            want_c1 = true;
            continue;
        }
        prime_checks.push_back(id);
        want_eta = want_eta || needs_eta(id);
    }
    if (want_eta && config.pmax > config.eta_bound)
        throw ConfigError("pmax = " + std::to_string(config.pmax) + " exceeds eta bound " +
                          std::to_string(config.eta_bound) + " required by a1/a2/trace");

    std::optional<EtaTable> eta;
    if (want_eta) eta.emplace(config.eta_bound);

    std::vector<Task> tasks;
    if (!prime_checks.empty())
        for (std::uint64_t p : primes_in(config.pmin, config.pmax)) tasks.push_back({false, p, {}});
    if (want_c1)
        for (std::uint64_t n = 0; n <= kC1MaxN; ++n)
            for (const Rational& y : c1_sample_ys()) tasks.push_back({true, n, y});

    std::vector<std::vector<CheckOutcome>> slots(tasks.size());
    const EtaTable* table = eta ? &*eta : nullptr;
    const auto count = static_cast<std::ptrdiff_t>(tasks.size());
    if (config.workers == 1) {
        for (std::ptrdiff_t i = 0; i < count; ++i)
            slots[static_cast<std::size_t>(i)] = run_task(tasks[static_cast<std::size_t>(i)], prime_checks, table,
                                                          config.timings);
    } else {
        // Largest primes first: their Gamma_p passes dominate the cost.
#pragma omp parallel for num_threads(config.workers) schedule(dynamic, 1)
        for (std::ptrdiff_t i = count - 1; i >= 0; --i)
            slots[static_cast<std::size_t>(i)] = run_task(tasks[static_cast<std::size_t>(i)], prime_checks, table,
                                                          config.timings);
    }

    Report report;
    report.pmin = config.pmin;
    report.pmax = config.pmax;
    if (config.timestamp) report.timestamp = utc_now();
    for (auto& s : slots)
        for (auto& o : s) report.outcomes.push_back(std::move(o));
    finalize(report);
    return report;
}

std::string emit_report(const Report& report, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::ostringstream os;
        os << "check,p,status,lhs,rhs,modulus,note,elapsed_ms\n";
        for (const auto& o : report.outcomes) {
            os << to_string(o.check) << ',' << o.p << ',' << to_string(o.status) << ',' << csv_field(o.lhs.value_or(""))
               << ',' << csv_field(o.rhs.value_or("")) << ',' << csv_field(o.modulus.value_or("")) << ','
               << csv_field(o.note) << ',';
            if (o.elapsed_ms) os << ordered_json(*o.elapsed_ms).dump();
            os << '\n';
        }
        return os.str();
    }
    ordered_json j;
    j["version"] = report.version;
    if (report.timestamp) j["timestamp"] = *report.timestamp;
    j["pmin"] = report.pmin;
    j["pmax"] = report.pmax;
    ordered_json outcomes = ordered_json::array();
    for (const auto& o : report.outcomes) {
        ordered_json e;
        e["check"] = std::string(to_string(o.check));
        e["p"] = o.p;
        e["status"] = std::string(to_string(o.status));
        e["lhs"] = opt(o.lhs);
        e["rhs"] = opt(o.rhs);
        e["modulus"] = opt(o.modulus);
        e["note"] = o.note;
        e["elapsed_ms"] = o.elapsed_ms ? ordered_json(*o.elapsed_ms) : ordered_json(nullptr);
        outcomes.push_back(std::move(e));
    }
    j["outcomes"] = std::move(outcomes);
    j["summary"] = {{"pass", report.summary.pass}, {"fail", report.summary.fail}, {"skipped", report.summary.skipped}};
    return j.dump(2) + "\n";
}

Report parse_report_json(std::string_view text) {
    try {
        const ordered_json j = ordered_json::parse(text);
        Report r;
        r.version = j.at("version").get<std::string>();
        if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
        r.pmin = j.at("pmin").get<std::uint64_t>();
        r.pmax = j.at("pmax").get<std::uint64_t>();
        for (const auto& e : j.at("outcomes")) {
            CheckOutcome o;
            const auto id = check_from_string(e.at("check").get<std::string>());
            const auto st = status_from_string(e.at("status").get<std::string>());
            if (!id || !st) throw std::invalid_argument("unknown check or status");
            o.check = *id;
            o.status = *st;
            o.p = e.at("p").get<std::uint64_t>();
            o.lhs = opt_string(e.at("lhs"));
            o.rhs = opt_string(e.at("rhs"));
            o.modulus = opt_string(e.at("modulus"));
            o.note = e.at("note").get<std::string>();
            if (!e.at("elapsed_ms").is_null()) o.elapsed_ms = e.at("elapsed_ms").get<double>();
            r.outcomes.push_back(std::move(o));
        }
        const auto& s = j.at("summary");
        r.summary = {s.at("pass").get<std::size_t>(), s.at("fail").get<std::size_t>(),
                     s.at("skipped").get<std::size_t>()};
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

int exit_code(const Report& report) { return report.summary.fail == 0 ? 0 : 1; }

}  // namespace supercong
