#include "hnode/sim/trace.hpp"

#include <json.hpp>

namespace hnode::sim {

std::string summary_json(const SimTrace& t) {
    nlohmann::ordered_json j;
    const auto& s = t.summary;
    const auto& m = t.monitors;
    j["ev"] = "summary";
    j["seed"] = t.seed;
    j["honest_events"] = s.honest_events;
    j["adversary_events"] = s.adversary_events;
    j["forge_events"] = s.forge_events;
    j["honest_length"] = s.honest_length;
    j["retained"] = s.retained;
    j["trim_point"] = s.trim_point;
    j["mu_h"] = s.mu_h;
    j["trims"] = s.trims;
    j["end_time"] = s.end_time;
    j["trim_attacked"] = m.trim_attacked;
    j["congruence_checks"] = m.congruence_checks;
    j["congruence_violations"] = m.congruence_violations;
    j["state_attacked"] = m.state_attacked;
    j["bootstrap_joins"] = m.bootstrap_joins;
    j["bootstrap_attacked"] = m.bootstrap_attacked;
    j["bootstrap_failures"] = m.bootstrap_failures;
    j["perturbed_offers"] = m.perturbed_offers;
    j["perturbed_rejected"] = m.perturbed_rejected;
    j["reorgs"] = m.reorgs;
    j["attack_attempts"] = m.attack_attempts;
    return j.dump();
}

std::string render_trace(const SimTrace& t) {
    std::string out;
    for (const auto& l : t.lines) {
        out += l;
        out += '\n';
    }
    out += summary_json(t);
    out += '\n';
    return out;
}

}  // namespace hnode::sim
