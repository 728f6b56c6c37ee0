#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hnode::trim {

/// Replaces Delta with a fixed function of the chain length. Used only to
/// reproduce the short-tail regime; protocol runs leave it off.
struct TailOverride {
    enum class Kind { None, Constant, Log } kind = Kind::None;
    double value = 0;  // the constant, or c0 in c0*ln(1+B)

    [[nodiscard]] bool active() const noexcept { return kind != Kind::None; }
    [[nodiscard]] std::uint64_t eval(std::uint64_t chain_length) const;
};

struct TrimParams {
    double k = 733;
    double k_prime = 1;
    double a = 356;
    double c = 20;
    double c_prime = 4;
    double delta = 0.15;
    std::uint64_t Q = 500;
    TailOverride tail;
};

/// One Theorem 1 inequality evaluated at concrete values.
struct ParamCheck {
    std::string name;
    bool ok = false;
    double lhs = 0;
    double rhs = 0;
    std::string message;
};

double ln_plus(double x);
/// k - a*ln(((1+delta^2)+delta)/delta)
double k_prime_for(double k, double a, double delta);

/// Basic sanity (delta in (0,1), positive a and c, Q > 0). Throws ConfigInvalid.
void validate_basic(const TrimParams& p);
std::vector<ParamCheck> theorem1_checks(const TrimParams& p, double lambda_h, double lambda_a);
/// Throws ConfigInvalid naming the first violated inequality.
void validate_theorem1(const TrimParams& p, double lambda_h, double lambda_a);

}  // namespace hnode::trim
