#include "hnode/sim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hnode/error.hpp"

namespace hnode::sim {

namespace {

std::string trim_ws(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void bad(const std::string& key, const std::string& why) {
    throw Error(ErrorCode::ConfigInvalid, "config key '" + key + "': " + why);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        double d = std::stod(v, &used);
        if (used != v.size()) bad(key, "not a number: " + v);
        return d;
    } catch (const std::logic_error&) {
        bad(key, "not a number: " + v);
    }
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
    std::uint64_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size()) bad(key, "not an unsigned integer: " + v);
    return out;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "1" || v == "true") return true;
    if (v == "0" || v == "false") return false;
    bad(key, "expected 0/1/true/false");
}

std::vector<std::string> split_commas(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim_ws(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

const char* to_string(Strategy s) noexcept {
    switch (s) {
        case Strategy::None: return "none";
        case Strategy::PrivateFork: return "private_fork";
        case Strategy::ShortTailAlpha: return "short_tail_alpha";
        case Strategy::StateForge: return "state_forge";
    }
    return "none";
}

Strategy strategy_from_string(std::string_view s) {
    if (s == "none") return Strategy::None;
    if (s == "private_fork") return Strategy::PrivateFork;
    if (s == "short_tail_alpha") return Strategy::ShortTailAlpha;
    if (s == "state_forge") return Strategy::StateForge;
    throw Error(ErrorCode::ConfigInvalid, "unknown adversary strategy: " + std::string(s));
}

SimConfig parse_config(std::string_view text) {
    SimConfig cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim_ws(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ConfigInvalid, "expected key = value: " + line);
        std::string key = trim_ws(line.substr(0, eq));
        std::string val = trim_ws(line.substr(eq + 1));
        auto& p = cfg.params;
        if (key == "lambda_h") cfg.lambda_h = to_double(key, val);
        else if (key == "lambda_a") cfg.lambda_a = to_double(key, val);
        else if (key == "lambda_s") cfg.lambda_s = to_double(key, val);
        else if (key == "k") p.k = to_double(key, val);
        else if (key == "k_prime") p.k_prime = to_double(key, val);
        else if (key == "a") p.a = to_double(key, val);
        else if (key == "c") p.c = to_double(key, val);
        else if (key == "c_prime") p.c_prime = to_double(key, val);
        else if (key == "delta") p.delta = to_double(key, val);
        else if (key == "Q") p.Q = to_u64(key, val);
        else if (key == "tail_override") {
            if (val == "none") {
                p.tail = {};
            } else if (val.rfind("constant:", 0) == 0) {
                p.tail = {trim::TailOverride::Kind::Constant, to_double(key, val.substr(9))};
            } else if (val.rfind("log:", 0) == 0) {
                p.tail = {trim::TailOverride::Kind::Log, to_double(key, val.substr(4))};
            } else {
                bad(key, "expected none, constant:<n> or log:<c0>");
            }
        }
        else if (key == "horizon_blocks") cfg.horizon_blocks = to_u64(key, val);
        else if (key == "horizon_time") cfg.horizon_time = to_double(key, val);
        else if (key == "seed") cfg.seed = to_u64(key, val);
        else if (key == "strategy") cfg.strategy = strategy_from_string(val);
        else if (key == "bootstrap") {
            cfg.bootstrap_schedule.clear();
            for (const auto& t : split_commas(val)) cfg.bootstrap_schedule.push_back(to_double(key, t));
        }
        else if (key == "txs_per_block") cfg.txs_per_block = static_cast<unsigned>(to_u64(key, val));
        else if (key == "must_be_secure") cfg.must_be_secure = to_bool(key, val);
        else if (key == "check_theorem1") cfg.check_theorem1 = to_bool(key, val);
        else if (key == "allow_dishonest_majority") cfg.allow_dishonest_majority = to_bool(key, val);
        else if (key == "archive") cfg.keep_archive = to_bool(key, val);
        else if (key == "trace") {
            if (val == "full") cfg.trace_level = TraceLevel::Full;
            else if (val == "summary") cfg.trace_level = TraceLevel::Summary;
            else bad(key, "expected full or summary");
        }
        else if (key == "snapshots") {
            cfg.snapshot_lengths.clear();
            for (const auto& t : split_commas(val)) cfg.snapshot_lengths.push_back(to_u64(key, t));
        }
        else throw Error(ErrorCode::ConfigInvalid, "unknown config key: " + key);
    }
    return cfg;
}

SimConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigInvalid, "cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string format_config(const SimConfig& cfg) {
    std::ostringstream os;
    const auto& p = cfg.params;
    os << "lambda_h = " << num(cfg.lambda_h) << "\n";
    os << "lambda_a = " << num(cfg.lambda_a) << "\n";
    os << "lambda_s = " << num(cfg.lambda_s) << "\n";
    os << "k = " << num(p.k) << "\nk_prime = " << num(p.k_prime) << "\na = " << num(p.a) << "\n";
    os << "c = " << num(p.c) << "\nc_prime = " << num(p.c_prime) << "\ndelta = " << num(p.delta) << "\n";
    os << "Q = " << p.Q << "\n";
    switch (p.tail.kind) {
        case trim::TailOverride::Kind::None: os << "tail_override = none\n"; break;
        case trim::TailOverride::Kind::Constant: os << "tail_override = constant:" << num(p.tail.value) << "\n"; break;
        case trim::TailOverride::Kind::Log: os << "tail_override = log:" << num(p.tail.value) << "\n"; break;
    }
    os << "horizon_blocks = " << cfg.horizon_blocks << "\n";
    os << "horizon_time = " << num(cfg.horizon_time) << "\n";
    os << "seed = " << cfg.seed << "\n";
    os << "strategy = " << to_string(cfg.strategy) << "\n";
    os << "bootstrap = ";
    for (std::size_t i = 0; i < cfg.bootstrap_schedule.size(); ++i) os << (i ? "," : "") << num(cfg.bootstrap_schedule[i]);
    os << "\ntxs_per_block = " << cfg.txs_per_block << "\n";
    os << "must_be_secure = " << cfg.must_be_secure << "\n";
    os << "check_theorem1 = " << cfg.check_theorem1 << "\n";
    os << "allow_dishonest_majority = " << cfg.allow_dishonest_majority << "\n";
    os << "archive = " << cfg.keep_archive << "\n";
    os << "trace = " << (cfg.trace_level == TraceLevel::Full ? "full" : "summary") << "\n";
    os << "snapshots = ";
    for (std::size_t i = 0; i < cfg.snapshot_lengths.size(); ++i) os << (i ? "," : "") << cfg.snapshot_lengths[i];
    os << "\n";
    return os.str();
}

void validate(const SimConfig& cfg) {
    if (!(cfg.lambda_h > 0)) throw Error(ErrorCode::ConfigInvalid, "lambda_h must be positive");
    if (!(cfg.lambda_a >= 0) || !(cfg.lambda_s >= 0)) throw Error(ErrorCode::ConfigInvalid, "rates must be non-negative");
    if (!cfg.allow_dishonest_majority && !(cfg.lambda_h > cfg.lambda_a)) {
        throw Error(ErrorCode::ConfigInvalid, "\"λh > λa\" violated (honest majority required)");
    }
    if (cfg.horizon_blocks == 0 && !(cfg.horizon_time > 0)) throw Error(ErrorCode::ConfigInvalid, "empty horizon");
    trim::validate_basic(cfg.params);
    if (cfg.strategy == Strategy::ShortTailAlpha && cfg.params.tail.kind != trim::TailOverride::Kind::Log) {
        throw Error(ErrorCode::ConfigInvalid, "short_tail_alpha needs tail_override = log:<c0>");
    }
    if (cfg.check_theorem1) trim::validate_theorem1(cfg.params, cfg.lambda_h, cfg.lambda_a);
}

SimConfig preset_secure() {
    SimConfig cfg;
    cfg.lambda_h = 1.0;
    cfg.lambda_a = 0.33;
    cfg.params = trim::TrimParams{};  // delta 0.15, a 356, k 733, k' 1, c 20, c' 4, Q 500
    cfg.check_theorem1 = true;
    return cfg;
}

SimConfig preset_desk() {
    SimConfig cfg;
    cfg.lambda_h = 1.0;
    cfg.lambda_a = 0.33;
    cfg.params.k = 30;
    cfg.params.k_prime = 28;
    cfg.params.a = 1;
    cfg.params.c = 2;
    cfg.params.c_prime = 1.5;
    cfg.params.delta = 0.3;
    cfg.params.Q = 100;
    return cfg;
}

}  // namespace hnode::sim
