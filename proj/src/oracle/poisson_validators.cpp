#include <algorithm>
#include <cmath>
#include <sstream>

#include "hnode/oracle/oracle.hpp"

namespace hnode::oracle {
namespace {

constexpr double kDelta = 0.3;

std::string fmt(double v) {
    std::ostringstream o;
    o << v;
    return o.str();
}

std::uint64_t count_before(const std::vector<double>& times, double t) {
    return static_cast<std::uint64_t>(std::upper_bound(times.begin(), times.end(), t) - times.begin());
}

}  // namespace

bool adversary_count_bound(const sim::SimTrace& trace, const sim::SimConfig& cfg, std::uint64_t n) {
    if (n == 0 || trace.honest_times.size() < n) return true;
    double t = trace.honest_times[n - 1];
    double bound = (1 + kDelta) * (1 + kDelta) * cfg.lambda_a / cfg.lambda_h * static_cast<double>(n);
    return static_cast<double>(count_before(trace.adversary_times, t)) <= bound;
}

OracleReport poisson_validators(const sim::SimTrace& trace, const sim::SimConfig& cfg) {
    OracleReport rep;
    const double T = trace.summary.end_time;
    const std::string tag = "seed " + std::to_string(trace.seed);
    const auto nh = static_cast<double>(trace.honest_times.size());
    if (T <= 0 || trace.honest_times.empty()) return rep;

    // Count tails: N(T) within (1 +- delta') lambda T.
    auto tail = [&](const char* name, const std::vector<double>& times, double rate) {
        if (rate <= 0) return;
        double mean = rate * T;
        auto n = static_cast<double>(times.size());
        bool ok = n >= (1 - kDelta) * mean && n <= (1 + kDelta) * mean;
        rep.record(ok, {tag + " " + name + " count", "within 0.3 of " + fmt(mean), fmt(n)});
    };
    tail("honest", trace.honest_times, cfg.lambda_h);
    if (cfg.strategy == sim::Strategy::PrivateFork || cfg.strategy == sim::Strategy::ShortTailAlpha) {
        tail("adversary", trace.adversary_times, cfg.lambda_a);
    }
    if (cfg.strategy == sim::Strategy::StateForge) tail("forge", trace.forge_times, cfg.lambda_s);

    // Time for n honest events within (1 +- delta') n / lambda_h.
    double t_n = trace.honest_times.back();
    double expect = nh / cfg.lambda_h;
    rep.record(t_n >= (1 - kDelta) * expect && t_n <= (1 + kDelta) * expect,
               {tag + " time for n honest", "within 0.3 of " + fmt(expect), fmt(t_n)});

    // Cross-process ratio.
    if (!trace.adversary_times.empty() && cfg.lambda_a > 0) {
        auto n = static_cast<std::uint64_t>(nh);
        rep.record(adversary_count_bound(trace, cfg, n),
                   {tag + " adversary events per n honest",
                    "<= " + fmt((1 + kDelta) * (1 + kDelta) * cfg.lambda_a / cfg.lambda_h * nh),
                    fmt(static_cast<double>(count_before(trace.adversary_times, t_n)))});
    }
    return rep;
}

}  // namespace hnode::oracle
