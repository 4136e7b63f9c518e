#include "supercong/checks.hpp"

#include <array>
#include <string>

#include "supercong/errors.hpp"
#include "supercong/hypergeom.hpp"
#include "supercong/pochhammer.hpp"
#include "supercong/variety.hpp"

namespace supercong {

namespace {

struct CheckName {
    CheckId id;
    std::string_view report;
    std::string_view cli;
};

constexpr std::array<CheckName, 13> kNames{{
    {CheckId::A1, "A1", "a1"},
    {CheckId::A2, "A2", "a2"},
    {CheckId::A3, "A3", "a3"},
    {CheckId::A4, "A4", "a4"},
    {CheckId::A3_SWISHER, "A3_SWISHER", "swisher"},
    {CheckId::B1_IDENTITY, "B1_IDENTITY", "b1"},
    {CheckId::B4, "B4", "b4"},
    {CheckId::B6, "B6", "b6"},
    {CheckId::C3_IDENTITY, "C3_IDENTITY", "c3"},
    {CheckId::C5, "C5", "c5"},
    {CheckId::WOLSTENHOLME, "WOLSTENHOLME", "wolstenholme"},
    {CheckId::TRACE_RELATION, "TRACE_RELATION", "trace"},
    {CheckId::C1_IDENTITY, "C1_IDENTITY", "c1"},
}};

Rational big(std::uint64_t p) { return Rational(BigInt(static_cast<unsigned long>(p))); }

CheckOutcome make(CheckId id, std::uint64_t p) {
    CheckOutcome o;
    o.check = id;
    o.p = p;
    return o;
}

CheckOutcome skipped(CheckId id, std::uint64_t p, std::string note) {
    CheckOutcome o = make(id, p);
    o.status = Status::Skipped;
    o.note = std::move(note);
    return o;
}

// Fills lhs/rhs/modulus from two residues and sets pass/fail on equality.
void compare(CheckOutcome& o, const ResidueInt& lhs, const ResidueInt& rhs) {
    o.lhs = lhs.str();
    o.rhs = rhs.str();
    o.modulus = lhs.modulus().get_str();
    o.status = lhs == rhs ? Status::Pass : Status::Fail;
}

// Runs body; library errors become a failed outcome carrying the message.
template <typename Body>
CheckOutcome guarded(CheckId id, std::uint64_t p, Body&& body) {
    CheckOutcome o = make(id, p);
    try {
        body(o);
    } catch (const Error& e) {
        o.status = Status::Fail;
        o.note = e.what();
    }
    return o;
}

ResidueInt minus_p_cubed_over_16(std::uint64_t p, unsigned k) {
    return reduce_mod(-big(p).pow(3) / Rational(16), p, k);
}

}  // namespace

std::string_view to_string(CheckId id) { return kNames[static_cast<std::size_t>(id)].report; }
std::string_view cli_name(CheckId id) { return kNames[static_cast<std::size_t>(id)].cli; }

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

std::optional<CheckId> check_from_string(std::string_view s) {
    for (const auto& n : kNames)
        if (n.report == s || n.cli == s) return n.id;
    return std::nullopt;
}

std::optional<Status> status_from_string(std::string_view s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "skipped") return Status::Skipped;
    return std::nullopt;
}

const std::vector<CheckId>& all_checks() {
    static const std::vector<CheckId> ids = [] {
        std::vector<CheckId> v;
        for (const auto& n : kNames) v.push_back(n.id);
        return v;
    }();
    return ids;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

const EtaTable& CheckEnv::eta() const {
    if (eta_ == nullptr) throw ConfigError("no eta coefficient table configured");
    return *eta_;
}

ResidueInt CheckEnv::gamma(std::uint64_t p, unsigned k, const Rational& x) {
    auto it = gammas_.find({p, k});
    if (it == gammas_.end()) it = gammas_.try_emplace({p, k}, p, k, policy_).first;
    return it->second(x);
}

CheckOutcome check_a1(std::uint64_t p, CheckEnv& env) {
    if (p % 2 == 0) return skipped(CheckId::A1, p, "p must be odd");
    return guarded(CheckId::A1, p, [&](CheckOutcome& o) {
        compare(o, reduce_mod(Rational(a_p(p, env.eta())), p, 3), reduce_mod(kilbourn_lhs(p), p, 3));
    });
}

CheckOutcome check_a2(std::uint64_t p, CheckEnv& env) {
    if (p < 5) return skipped(CheckId::A2, p, "theorem requires p >= 5");
    return guarded(CheckId::A2, p, [&](CheckOutcome& o) {
        compare(o, reduce_mod(Rational(a_p(p, env.eta())), p, 3), reduce_mod(thm1_rhs(p), p, 3));
    });
}

CheckOutcome check_a3(std::uint64_t p, CheckEnv& env) {
    if (p % 2 == 0) return skipped(CheckId::A3, p, "p must be odd");
    return guarded(CheckId::A3, p, [&](CheckOutcome& o) {
        const Rational lhs = vanhamme_lhs(p);
        if (p % 4 == 1) {
            const ResidueInt g = env.gamma(p, 3, Rational(1, 4));
            compare(o, reduce_mod(lhs, p, 3), reduce_mod(-big(p), p, 3) * g.pow(4));
            o.note = "p = 1 (mod 4) branch: -p*Gamma_p(1/4)^4";
        } else {
            const int v = vp(lhs, p);
            const ResidueInt zero(p, 3, 0L);
            o.lhs = reduce_mod(lhs, p, 3).str();
            o.rhs = zero.str();
            o.modulus = zero.modulus().get_str();
            o.status = v >= 3 ? Status::Pass : Status::Fail;
            o.note = "p = 3 (mod 4) branch: vp = " + std::to_string(v);
        }
    });
}

CheckOutcome check_a4(std::uint64_t p, CheckEnv& env) {
    if (p % 4 != 3) return skipped(CheckId::A4, p, "theorem requires p = 3 (mod 4)");
    if (p < 7) return skipped(CheckId::A4, p, "theorem requires p >= 5");
    return guarded(CheckId::A4, p, [&](CheckOutcome& o) {
        const ResidueInt g = env.gamma(p, 4, Rational(1, 4));
        compare(o, reduce_mod(vanhamme_lhs(p), p, 4), minus_p_cubed_over_16(p, 4) * g.pow(4));
    });
}

CheckOutcome check_a3_swisher(std::uint64_t p, CheckEnv& env) {
    if (p % 4 != 1) return skipped(CheckId::A3_SWISHER, p, "strengthening requires p = 1 (mod 4)");
    if (p > kSwisherMaxPrime)
        return skipped(CheckId::A3_SWISHER, p, "p > 50: outside the Gamma_p mod p^5 cost cap");
    return guarded(CheckId::A3_SWISHER, p, [&](CheckOutcome& o) {
        const ResidueInt g = env.gamma(p, 5, Rational(1, 4));
        compare(o, reduce_mod(vanhamme_lhs(p), p, 5), reduce_mod(-big(p), p, 5) * g.pow(4));
    });
}

CheckOutcome check_b1(std::uint64_t p, CheckEnv&) {
    if (p % 2 == 0) return skipped(CheckId::B1_IDENTITY, p, "p must be odd");
    return guarded(CheckId::B1_IDENTITY, p, [&](CheckOutcome& o) {
        const auto r = bailey_b1_check(p, B1Reading::Corrected);
        o.status = r.equal ? Status::Pass : Status::Fail;
        o.note = "exact equality in Q(omega)";
        if (!r.equal) {
            o.lhs = r.lhs.str();
            o.rhs = r.rhs.str();
        }
    });
}

CheckOutcome check_b4(std::uint64_t p, CheckEnv&) {
    if (p < 5) return skipped(CheckId::B4, p, "requires p >= 5");
    return guarded(CheckId::B4, p, [&](CheckOutcome& o) {
        const std::uint64_t m = (p - 1) / 2;
        const Rational pr = big(p);
        const Rational half_p = pr / Rational(2);
        const CycloRational w = CycloRational::zeta(RootTag::Omega);
        const CycloRational one(RootTag::Omega, Rational(1));
        const CycloRational pair =
            pochhammer_cyclo(one + w * half_p, m) * pochhammer_cyclo(one + w * w * half_p, m);
        const Rational den = pair.to_rational();

        Rational collapsed{1};
        for (std::uint64_t j = 1; j <= m; ++j) {
            const Rational jj(static_cast<long>(j));
            collapsed *= jj * jj - half_p * jj + half_p * half_p;
        }
        if (collapsed != den) throw NonRealResult("conjugate-pair product disagrees with its rational collapse");

        const Rational value = pochhammer(Rational(1, 2), m) * pochhammer((Rational(1) - pr) / Rational(2), m) / den;
        compare(o, reduce_mod(value, p, 3), ResidueInt(p, 3, 1L));
    });
}

CheckOutcome check_b6(std::uint64_t p, CheckEnv&) {
    if (p < 5) return skipped(CheckId::B6, p, "requires p >= 5");
    return guarded(CheckId::B6, p, [&](CheckOutcome& o) {
        const std::uint64_t m = (p - 1) / 2;
        const Rational pr = big(p);
        const Rational half_p = pr / Rational(2);
        const Rational product = pochhammer(Rational(1) + half_p, m) * pochhammer(Rational(1) - half_p, m) /
                                 pochhammer(Rational(1), m).pow(2);
        Rational factored{1};
        for (std::uint64_t j = 1; j <= m; ++j) {
            const Rational jj(static_cast<long>(j));
            factored *= Rational(1) - pr * pr / (Rational(4) * jj * jj);
        }
        const bool identity_ok = factored == product;
        const bool mod_p3 = reduce_mod(product, p, 3) == ResidueInt(p, 3, 1L);
        const Rational taylor = Rational(1) - pr * pr / Rational(4) * half_harmonic2(p);
        compare(o, reduce_mod(product, p, 4), reduce_mod(taylor, p, 4));
        const bool taylor_ok = o.status == Status::Pass;
        o.status = identity_ok && mod_p3 && taylor_ok ? Status::Pass : Status::Fail;
        o.note = std::string("product = 1 (mod p^3): ") + (mod_p3 ? "ok" : "FAILED") +
                 "; Taylor form mod p^4: " + (taylor_ok ? "ok" : "FAILED") +
                 (identity_ok ? "" : "; product != prod(1 - p^2/4j^2)");
    });
}

CheckOutcome check_c3(std::uint64_t p, CheckEnv&) {
    if (p % 4 != 3) return skipped(CheckId::C3_IDENTITY, p, "requires p = 3 (mod 4)");
    if (p < 7) return skipped(CheckId::C3_IDENTITY, p, "requires p >= 7");
    return guarded(CheckId::C3_IDENTITY, p, [&](CheckOutcome& o) {
        const auto r = c3_check(p);
        o.status = r.equal ? Status::Pass : Status::Fail;
        o.note = "exact equality, imaginary parts vanish";
        if (!r.equal) {
            o.lhs = r.lhs.str();
            o.rhs = r.rhs.str();
        }
    });
}

CheckOutcome check_c5(std::uint64_t p, CheckEnv& env) {
    if (p % 4 != 3) return skipped(CheckId::C5, p, "requires p = 3 (mod 4)");
    if (p < 7) return skipped(CheckId::C5, p, "requires p >= 7");
    return guarded(CheckId::C5, p, [&](CheckOutcome& o) {
        const ResidueInt g = env.gamma(p, 4, Rational(1, 4));
        compare(o, reduce_mod(c3_closed_form(p), p, 4), minus_p_cubed_over_16(p, 4) * g.pow(4));
    });
}

CheckOutcome check_wolstenholme(std::uint64_t p, CheckEnv&) {
    if (p < 5) return skipped(CheckId::WOLSTENHOLME, p, "requires p >= 5");
    return guarded(CheckId::WOLSTENHOLME, p, [&](CheckOutcome& o) {
        const Rational h = half_harmonic2(p);
        const int v = vp(h, p);
        compare(o, reduce_mod(h, p, 1), ResidueInt(p, 1, 0L));
        o.status = v >= 1 ? Status::Pass : Status::Fail;
        o.note = "vp = " + (v == kValuationInfinity ? std::string("inf") : std::to_string(v));
    });
}

CheckOutcome check_trace(std::uint64_t p, CheckEnv& env) {
    if (p % 2 == 0) return skipped(CheckId::TRACE_RELATION, p, "p must be odd");
    return guarded(CheckId::TRACE_RELATION, p, [&](CheckOutcome& o) {
        const std::int64_t a = env.eta().a_int64(static_cast<std::size_t>(p));
        const std::int64_t n_points = count_N(p);
        const std::int64_t rhs = trace_from_count(p, n_points);
        o.lhs = std::to_string(a);
        o.rhs = std::to_string(rhs);
        o.status = a == rhs ? Status::Pass : Status::Fail;
        o.note = "N(p) = " + std::to_string(n_points);
    });
}

CheckOutcome check_c1(std::uint64_t n, const Rational& y) {
    CheckOutcome o = guarded(CheckId::C1_IDENTITY, n, [&](CheckOutcome& out) {
        const auto r = whipple_c1_check(n, y);
        out.status = r.equal ? Status::Pass : Status::Fail;
        if (!r.equal) {
            out.lhs = r.lhs.str();
            out.rhs = r.rhs.str();
        }
    });
    o.note = "y=" + y.str() + (o.note.empty() ? "" : "; " + o.note);
    return o;
}

CheckOutcome run_check(CheckId id, std::uint64_t p, CheckEnv& env) {
    switch (id) {
        case CheckId::A1: return check_a1(p, env);
        case CheckId::A2: return check_a2(p, env);
        case CheckId::A3: return check_a3(p, env);
        case CheckId::A4: return check_a4(p, env);
        case CheckId::A3_SWISHER: return check_a3_swisher(p, env);
        case CheckId::B1_IDENTITY: return check_b1(p, env);
        case CheckId::B4: return check_b4(p, env);
        case CheckId::B6: return check_b6(p, env);
        case CheckId::C3_IDENTITY: return check_c3(p, env);
        case CheckId::C5: return check_c5(p, env);
        case CheckId::WOLSTENHOLME: return check_wolstenholme(p, env);
        case CheckId::TRACE_RELATION: return check_trace(p, env);
        case CheckId::C1_IDENTITY: break;
    }
    throw std::invalid_argument("run_check: C1_IDENTITY is keyed by (n, y), not by a prime");
}

const std::vector<Rational>& c1_sample_ys() {
    static const std::vector<Rational> ys{
        Rational(1, 3), Rational(-1, 3), Rational(1, 5),  Rational(-1, 5), Rational(2, 7),  Rational(-2, 7),
        Rational(3, 4), Rational(-3, 4), Rational(5, 6), Rational(-7, 9), Rational(11, 13), Rational(4, 3),
    };
    return ys;
}

}  // namespace supercong
