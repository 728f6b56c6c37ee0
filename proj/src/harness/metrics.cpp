#include "hnode/harness/metrics.hpp"

#include <json.hpp>

#include "hnode/trim/serialize.hpp"

namespace hnode::harness {

std::uint64_t storage_size(const trim::TrimmedChain& P) { return trim::encode_trimmed(P).size(); }

MetricsRow metrics_row(const sim::SimConfig& cfg, const sim::SimResult& r) {
    MetricsRow m;
    m.seed = cfg.seed;
    m.strategy = sim::to_string(cfg.strategy);
    const auto& s = r.trace.summary;
    m.honest_length = s.honest_length;
    m.retained = s.retained;
    m.bytes = storage_size(r.final_chain);
    m.trim_point = s.trim_point;
    m.mu_h = s.mu_h;
    m.trims = s.trims;
    m.monitors = r.trace.monitors;
    return m;
}

std::string metrics_header(const std::string& experiment, const sim::SimConfig& cfg) {
    nlohmann::ordered_json j;
    j["schema"] = "hnode-metrics";
    j["version"] = kMetricsVersion;
    j["experiment"] = experiment;
    j["config"] = sim::format_config(cfg);
    return j.dump();
}

std::string metrics_line(const MetricsRow& r) {
    nlohmann::ordered_json j;
    const auto& m = r.monitors;
    j["seed"] = r.seed;
    j["strategy"] = r.strategy;
    j["honest_length"] = r.honest_length;
    j["retained"] = r.retained;
    j["bytes"] = r.bytes;
    j["trim_point"] = r.trim_point;
    j["mu_h"] = r.mu_h;
    j["trims"] = r.trims;
    j["trim_attacked"] = m.trim_attacked;
    j["congruence_checks"] = m.congruence_checks;
    j["congruence_violations"] = m.congruence_violations;
    j["state_attacked"] = m.state_attacked;
    j["bootstrap_joins"] = m.bootstrap_joins;
    j["bootstrap_attacked"] = m.bootstrap_attacked;
    j["bootstrap_failures"] = m.bootstrap_failures;
    j["reorgs"] = m.reorgs;
    j["replay_ok"] = r.replay_ok;
    return j.dump();
}

std::string metrics_jsonl(const std::string& experiment, const sim::SimConfig& cfg, const std::vector<MetricsRow>& rows) {
    std::string out = metrics_header(experiment, cfg) + "\n";
    for (const auto& r : rows) out += metrics_line(r) + "\n";
    return out;
}

}  // namespace hnode::harness
