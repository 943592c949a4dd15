#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mogi/interp.hpp"

namespace mogi {

long long Fixtures::cost_of(const std::string &builtin) const {
    auto it = step_costs.find(builtin);
    if (it != step_costs.end()) return it->second;
    if (builtin == "fetch") return 1000;
    if (builtin == "alloc") return 10;
    return 1;
}

Fixtures parse_fixtures(const std::string &json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error(std::string("bad fixtures json: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("fixtures must be a json object");
    Fixtures fx;
    if (j.contains("responses")) {
        for (auto &[k, v] : j.at("responses").items()) {
            if (!v.is_string())
                throw std::runtime_error("fixtures response for '" + k + "' must be a string");
            fx.responses[k] = v.get<std::string>();
        }
    }
    if (j.contains("step_costs")) {
        for (auto &[k, v] : j.at("step_costs").items()) {
            if (!v.is_number_integer())
                throw std::runtime_error("fixtures step cost for '" + k + "' must be an integer");
            fx.step_costs[k] = v.get<long long>();
        }
    }
    return fx;
}

Fixtures load_fixtures_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixtures file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fixtures(ss.str());
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double unit_open(std::mt19937_64 &g) {
    // (0, 1]; never 0 so log is safe
    return double((g() >> 11) + 1) * (1.0 / 9007199254740992.0);
}

// Box-Muller by hand: std::normal_distribution is not pinned across
// standard library implementations.
double std_normal(std::mt19937_64 &g) {
    constexpr double kTwoPi = 6.283185307179586;
    double u1 = unit_open(g);
    double u2 = unit_open(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

long long scale(long long x, double f) {
    if (x == 0) return 0;
    long long v = (long long)std::llround((double)x * f);
    return v < 1 ? 1 : v;
}

}  // namespace

FitnessVector apply_noise(const FitnessVector &raw, const NoiseModel &noise,
                          std::uint64_t seed, int sample_index) {
    if (noise.kind == NoiseModel::Kind::None) return raw;
    std::mt19937_64 g(splitmix64(seed ^ splitmix64((std::uint64_t)sample_index)));
    FitnessVector out = raw;
    out.steps = scale(raw.steps, std::exp(noise.sigma * std_normal(g)));
    out.peak_bytes = scale(raw.peak_bytes, std::exp(noise.sigma * std_normal(g)));
    out.net_bytes = scale(raw.net_bytes, std::exp(noise.sigma * std_normal(g)));
    return out;
}

}  // namespace mogi
