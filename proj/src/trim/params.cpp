#include "hnode/trim/params.hpp"

#include <cmath>
#include <cstdio>

#include "hnode/error.hpp"

namespace hnode::trim {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

ParamCheck check(std::string name, double lhs, double rhs, bool strict) {
    ParamCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.ok = strict ? lhs > rhs : lhs >= rhs;
    if (!c.ok) c.message = "\"" + c.name + "\" violated (" + fmt(lhs) + " < " + fmt(rhs) + ")";
    return c;
}

}  // namespace

std::uint64_t TailOverride::eval(std::uint64_t chain_length) const {
    switch (kind) {
        case Kind::None: return 0;
        case Kind::Constant: return static_cast<std::uint64_t>(std::ceil(value));
        case Kind::Log: return static_cast<std::uint64_t>(std::ceil(value * std::log1p(static_cast<double>(chain_length))));
    }
    return 0;
}

double ln_plus(double x) { return x < 1 ? 0.0 : std::log(x); }

double k_prime_for(double k, double a, double delta) {
    return k - a * std::log(((1 + delta * delta) + delta) / delta);
}

void validate_basic(const TrimParams& p) {
    if (!(p.delta > 0 && p.delta < 1)) throw Error(ErrorCode::ConfigInvalid, "delta must lie in (0,1)");
    if (!(p.a > 0)) throw Error(ErrorCode::ConfigInvalid, "a must be positive");
    if (!(p.c > 0)) throw Error(ErrorCode::ConfigInvalid, "c must be positive");
    if (!(p.k >= 0)) throw Error(ErrorCode::ConfigInvalid, "k must be non-negative");
    if (p.Q == 0) throw Error(ErrorCode::ConfigInvalid, "trimming interval Q must be positive");
    if (p.tail.active() && !(p.tail.value > 0)) throw Error(ErrorCode::ConfigInvalid, "tail override needs a positive value");
}

std::vector<ParamCheck> theorem1_checks(const TrimParams& p, double lambda_h, double lambda_a) {
    std::vector<ParamCheck> out;
    const double d = p.delta;
    out.push_back(check("a ≥ 8/δ²", p.a, 8 / (d * d), false));

    // k' is an integer in practice, so accept it within one of the formula.
    double want = k_prime_for(p.k, p.a, d);
    ParamCheck kp;
    kp.name = "k′ = k − a·ln(((1+δ²)+δ)/δ)";
    kp.lhs = p.k_prime;
    kp.rhs = want;
    kp.ok = std::fabs(p.k_prime - want) <= 1.0 && p.k_prime >= 0;
    if (!kp.ok) kp.message = "\"" + kp.name + "\" violated (k′ = " + fmt(p.k_prime) + ", formula gives " + fmt(want) + ")";
    out.push_back(kp);

    double ratio = lambda_a > 0 ? lambda_h / lambda_a : INFINITY;
    double one_minus = 1 - d;
    double q1 = std::pow(one_minus, 3) * ratio * ((p.c_prime - 1) / p.c_prime) * ((p.c - 1 - p.c_prime) / p.c);
    out.push_back(check("1 < (1−δ)³(λh/λa)((c′−1)/c′)((c−1−c′)/c)", q1, 1, true));
    double q2 = std::pow(one_minus, 5) * ratio * ((p.c - 1) / p.c);
    out.push_back(check("1 < (1−δ)⁵(λh/λa)((c−1)/c)", q2, 1, true));
    out.push_back(check("2 < c′", p.c_prime, 2, true));
    out.push_back(check("c′ < c", p.c, p.c_prime, true));
    out.push_back(check("λh > λa", lambda_h, lambda_a, true));
    return out;
}

void validate_theorem1(const TrimParams& p, double lambda_h, double lambda_a) {
    validate_basic(p);
    for (const auto& c : theorem1_checks(p, lambda_h, lambda_a)) {
        if (!c.ok) throw Error(ErrorCode::ConfigInvalid, c.message);
    }
}

}  // namespace hnode::trim
