#include "doctest.h"

#include "supercong/checks.hpp"
#include "supercong/errors.hpp"
#include "supercong/report.hpp"

using namespace supercong;

namespace {

const EtaTable& table() {
    static const EtaTable t(400);
    return t;
}

}  // namespace

TEST_CASE("check_a1") {
    CheckEnv env(&table());
    const auto o = check_a1(3, env);
    CHECK(o.status == Status::Pass);
    CHECK(o.lhs == "23");
    CHECK(o.rhs == "23");
    CHECK(o.modulus == "27");
    CHECK(check_a1(2, env).status == Status::Skipped);
    CHECK(check_a1(2, env).note == "p must be odd");
    CHECK(check_a1(5, env).status == Status::Pass);
}

TEST_CASE("check_a2") {
    CheckEnv env(&table());
    CHECK(check_a2(3, env).status == Status::Skipped);
    CHECK(check_a2(3, env).note == "theorem requires p >= 5");
    CHECK(check_a2(5, env).status == Status::Pass);
    CHECK(check_a2(7, env).status == Status::Pass);
}

TEST_CASE("a(p) checks without an eta table fail loudly") {
    CheckEnv env;
    const auto o = check_a1(7, env);
    CHECK(o.status == Status::Fail);
    CHECK(o.note.find("eta") != std::string::npos);
}

TEST_CASE("check_a3 both branches") {
    CheckEnv env;
    const auto o3 = check_a3(3, env);
    CHECK(o3.status == Status::Pass);
    CHECK(o3.note.find("vp = 3") != std::string::npos);
    CHECK(check_a3(5, env).status == Status::Pass);
    CHECK(check_a3(13, env).status == Status::Pass);
    CHECK(check_a3(2, env).status == Status::Skipped);
}

TEST_CASE("check_a4") {
    CheckEnv env;
    CHECK(check_a4(5, env).status == Status::Skipped);
    CHECK(check_a4(3, env).status == Status::Skipped);
    const auto o = check_a4(7, env);
    CHECK(o.status == Status::Pass);
    CHECK(o.modulus == "2401");
    CHECK(check_a4(11, env).status == Status::Pass);
}

TEST_CASE("check_a3_swisher") {
    CheckEnv env;
    const auto o = check_a3_swisher(13, env);
    CHECK(o.status == Status::Pass);
    CHECK(o.modulus == "371293");
    CHECK(check_a3_swisher(17, env).status == Status::Pass);
    CHECK(check_a3_swisher(7, env).status == Status::Skipped);
    CHECK(check_a3_swisher(53, env).status == Status::Skipped);
}

TEST_CASE("intermediate congruences") {
    CheckEnv env;
    for (std::uint64_t p : {5, 7}) {
        CHECK(check_b4(p, env).status == Status::Pass);
        const auto b6 = check_b6(p, env);
        CHECK(b6.status == Status::Pass);
        CHECK(b6.note.find("FAILED") == std::string::npos);
    }
    CHECK(check_b4(3, env).status == Status::Skipped);
    CHECK(check_b6(3, env).status == Status::Skipped);
    CHECK(check_c5(7, env).status == Status::Pass);
    CHECK(check_c5(11, env).status == Status::Pass);
    CHECK(check_c5(13, env).status == Status::Skipped);
    CHECK(check_wolstenholme(5, env).status == Status::Pass);
    CHECK(check_wolstenholme(3, env).status == Status::Skipped);
    CHECK(check_wolstenholme(1093, env).status == Status::Pass);
}

TEST_CASE("identity and trace outcomes") {
    CheckEnv env(&table());
    CHECK(check_b1(3, env).status == Status::Pass);
    CHECK(check_c3(7, env).status == Status::Pass);
    CHECK(check_c3(5, env).status == Status::Skipped);
    CHECK(check_c3(3, env).status == Status::Skipped);
    const auto t = check_trace(7, env);
    CHECK(t.status == Status::Pass);
    CHECK(t.lhs == "24");
    CHECK(t.note == "N(p) = 214");
    const auto c1 = check_c1(1, Rational(1, 5));
    CHECK(c1.status == Status::Pass);
    CHECK(c1.note == "y=1/5");
    const auto pole = check_c1(0, Rational(1));
    CHECK(pole.status == Status::Fail);
    CHECK_THROWS_AS(run_check(CheckId::C1_IDENTITY, 3, env), std::invalid_argument);
}

TEST_CASE("check names") {
    for (CheckId id : all_checks()) {
        CHECK(check_from_string(to_string(id)) == id);
        CHECK(check_from_string(cli_name(id)) == id);
    }
    CHECK(check_from_string("swisher") == CheckId::A3_SWISHER);
    CHECK_FALSE(check_from_string("a5").has_value());
}

TEST_CASE("run_suite examples") {
    SuiteConfig cfg;
    cfg.pmin = 3;
    cfg.pmax = 50;
    cfg.checks = {CheckId::A1};
    cfg.workers = 4;
    const Report r = run_suite(cfg);
    CHECK(r.summary.fail == 0);
    CHECK(r.summary.skipped == 0);
    CHECK(r.summary.pass == 14);

    cfg = {};
    cfg.pmin = cfg.pmax = 5;
    cfg.checks = {CheckId::A4};
    const Report one = run_suite(cfg);
    REQUIRE(one.outcomes.size() == 1);
    CHECK(one.outcomes[0].status == Status::Skipped);
    CHECK_FALSE(one.outcomes[0].note.empty());
}

TEST_CASE("run_suite configuration errors") {
    SuiteConfig cfg;
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
    cfg.checks = {CheckId::A1};
    cfg.pmin = 10;
    cfg.pmax = 5;
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
    cfg.pmin = 3;
    cfg.pmax = 2000;
    cfg.eta_bound = 1000;
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
    cfg.checks = {CheckId::WOLSTENHOLME};
    cfg.pmax = 1100;
    CHECK(run_suite(cfg).summary.fail == 0);
    cfg.workers = 0;
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
}

TEST_CASE("skipped outcomes always name their hypothesis") {
    SuiteConfig cfg;
    cfg.pmin = 2;
    cfg.pmax = 60;
    cfg.checks = {all_checks().begin(), all_checks().end()};
    cfg.checks.erase(CheckId::C1_IDENTITY);
    cfg.workers = 3;
    const Report r = run_suite(cfg);
    CHECK(r.summary.fail == 0);
    for (const auto& o : r.outcomes)
        if (o.status == Status::Skipped) CHECK_FALSE(o.note.empty());
}

TEST_CASE("reports are sorted, tallied and worker-independent") {
    SuiteConfig cfg;
    cfg.pmin = 3;
    cfg.pmax = 40;
    cfg.checks = {CheckId::TRACE_RELATION, CheckId::A3, CheckId::A1, CheckId::C1_IDENTITY, CheckId::B6};
    cfg.workers = 1;
    const std::string serial = emit_report(run_suite(cfg), ReportFormat::Json);
    for (int w : {2, 5}) {
        cfg.workers = w;
        CHECK(emit_report(run_suite(cfg), ReportFormat::Json) == serial);
    }
    const Report r = parse_report_json(serial);
    for (std::size_t i = 1; i < r.outcomes.size(); ++i) {
        const auto& a = r.outcomes[i - 1];
        const auto& b = r.outcomes[i];
        CHECK((a.check < b.check || (a.check == b.check && (a.p < b.p || (a.p == b.p && a.note <= b.note)))));
    }
    std::size_t pass = 0;
    for (const auto& o : r.outcomes) pass += o.status == Status::Pass;
    CHECK(pass == r.summary.pass);
}

TEST_CASE("emit_report") {
    Report empty;
    finalize(empty);
    const std::string j = emit_report(empty, ReportFormat::Json);
    CHECK(j.find("\"summary\": {\n    \"pass\": 0,\n    \"fail\": 0,\n    \"skipped\": 0") != std::string::npos);
    CHECK(emit_report(empty, ReportFormat::Csv) == "check,p,status,lhs,rhs,modulus,note,elapsed_ms\n");

    SuiteConfig cfg;
    cfg.pmin = cfg.pmax = 3;
    cfg.checks = {CheckId::A1};
    const Report r = run_suite(cfg);
    const std::string json = emit_report(r, ReportFormat::Json);
    CHECK(json.find("\"lhs\": \"23\"") != std::string::npos);
    CHECK(json.find("\"modulus\": \"27\"") != std::string::npos);
    CHECK(json.find("\"elapsed_ms\": null") != std::string::npos);
    CHECK(json.find("timestamp") == std::string::npos);
    CHECK(json.find("\"version\": \"1.0.0\"") == json.find("\"version\""));
    CHECK(emit_report(r, ReportFormat::Csv) == "check,p,status,lhs,rhs,modulus,note,elapsed_ms\nA1,3,pass,23,23,27,,\n");
}

TEST_CASE("report JSON round-trip") {
    Report r;
    r.pmin = 3;
    r.pmax = 11;
    r.timestamp = "2026-01-01T00:00:00Z";
    CheckOutcome a;
    a.check = CheckId::B6;
    a.p = 7;
    a.status = Status::Fail;
    a.lhs = "12";
    a.rhs = "1";
    a.modulus = "2401";
    a.note = "quoted \"note\", with comma";
    a.elapsed_ms = 1.5;
    CheckOutcome b;
    b.check = CheckId::A2;
    b.p = 3;
    b.note = "theorem requires p >= 5";
    r.outcomes = {a, b};
    finalize(r);
    CHECK(parse_report_json(emit_report(r, ReportFormat::Json)) == r);
    CHECK(exit_code(r) == 1);
    CHECK(emit_report(r, ReportFormat::Csv).find("\"quoted \"\"note\"\", with comma\"") != std::string::npos);
    CHECK_THROWS_AS(parse_report_json("{\"version\": 1}"), std::invalid_argument);
}

TEST_CASE("timings are opt-in") {
    SuiteConfig cfg;
    cfg.pmin = 3;
    cfg.pmax = 11;
    cfg.checks = {CheckId::A3};
    cfg.timings = true;
    cfg.timestamp = true;
    const Report r = run_suite(cfg);
    CHECK(r.timestamp.has_value());
    for (const auto& o : r.outcomes) CHECK(o.elapsed_ms.has_value());
}
