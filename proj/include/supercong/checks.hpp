#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercong/eta.hpp"
#include "supercong/padic_gamma.hpp"
#include "supercong/rational.hpp"
#include "supercong/residue.hpp"

namespace supercong {

// Declaration order is the report sort order.
enum class CheckId {
    A1,
    A2,
    A3,
    A4,
    A3_SWISHER,
    B1_IDENTITY,
    B4,
    B6,
    C3_IDENTITY,
    C5,
    WOLSTENHOLME,
    TRACE_RELATION,
    C1_IDENTITY,
};

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(CheckId id);       // "A1", "A3_SWISHER", ...
std::string_view cli_name(CheckId id);        // "a1", "swisher", ...
std::string_view to_string(Status s);         // "pass", "fail", "skipped"
std::optional<CheckId> check_from_string(std::string_view s);  // accepts either spelling
std::optional<Status> status_from_string(std::string_view s);
const std::vector<CheckId>& all_checks();

struct CheckOutcome {
    CheckId check = CheckId::A1;
    std::uint64_t p = 0;  // for C1_IDENTITY this is n
    Status status = Status::Skipped;
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;
    std::optional<std::string> modulus;
    std::string note;
    std::optional<double> elapsed_ms;

    friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

/// Per-worker state for one batch of checks: shared read-only eta table and
/// a private Gamma_p evaluator cache keyed by (p, k).
class CheckEnv {
public:
    explicit CheckEnv(const EtaTable* eta = nullptr, ExecPolicy policy = ExecPolicy::Serial)
        : eta_(eta), policy_(policy) {}

    const EtaTable& eta() const;
    ResidueInt gamma(std::uint64_t p, unsigned k, const Rational& x);

private:
    const EtaTable* eta_;
    ExecPolicy policy_;
    std::map<std::pair<std::uint64_t, unsigned>, GammaEvaluator> gammas_;
};

CheckOutcome check_a1(std::uint64_t p, CheckEnv& env);
CheckOutcome check_a2(std::uint64_t p, CheckEnv& env);
CheckOutcome check_a3(std::uint64_t p, CheckEnv& env);
CheckOutcome check_a4(std::uint64_t p, CheckEnv& env);
CheckOutcome check_a3_swisher(std::uint64_t p, CheckEnv& env);
CheckOutcome check_b1(std::uint64_t p, CheckEnv& env);
CheckOutcome check_b4(std::uint64_t p, CheckEnv& env);
CheckOutcome check_b6(std::uint64_t p, CheckEnv& env);
CheckOutcome check_c3(std::uint64_t p, CheckEnv& env);
CheckOutcome check_c5(std::uint64_t p, CheckEnv& env);
CheckOutcome check_wolstenholme(std::uint64_t p, CheckEnv& env);
CheckOutcome check_trace(std::uint64_t p, CheckEnv& env);
CheckOutcome check_c1(std::uint64_t n, const Rational& y);

/// Dispatch for the prime-indexed checks (everything except C1_IDENTITY).
CheckOutcome run_check(CheckId id, std::uint64_t p, CheckEnv& env);

/// Largest p for which the p^5 Swisher check runs.
inline constexpr std::uint64_t kSwisherMaxPrime = 50;

/// The fixed y sample used for the C1 sweep (12 non-pole rationals) and its n range.
const std::vector<Rational>& c1_sample_ys();
inline constexpr std::uint64_t kC1MaxN = 8;

bool is_prime(std::uint64_t n);

}  // namespace supercong
