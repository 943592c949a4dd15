#include <stdexcept>

#include "json.hpp"
#include "mogi/search.hpp"

namespace mogi {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

using nlohmann::json;

json config_to_json(const SearchConfig &c) {
    json names = json::array();
    for (Objective o : c.objectives) names.push_back(objective_name(o));
    return json{
        {"algorithm", algo_name(c.algorithm)},
        {"crossover_rate", c.crossover_rate},
        {"evaluation_budget", c.evaluation_budget},
        {"generations", c.generations},
        {"mutation_rate", c.mutation_rate},
        {"noise", c.noise.kind == NoiseModel::Kind::None ? "none" : "multiplicative"},
        {"noise_sigma", c.noise.sigma},
        {"objectives", names},
        {"population_size", c.population_size},
        {"repeats", c.repeats},
        {"seed", c.seed},
    };
}

SearchConfig config_from_json(const json &j) {
    SearchConfig c;
    const auto algo = algo_from_name(j.at("algorithm").get<std::string>());
    if (!algo) throw std::runtime_error("run record names an unknown algorithm");
    c.algorithm = *algo;
    c.crossover_rate = j.at("crossover_rate").get<double>();
    c.evaluation_budget = j.at("evaluation_budget").get<int>();
    c.generations = j.at("generations").get<int>();
    c.mutation_rate = j.at("mutation_rate").get<double>();
    c.population_size = j.at("population_size").get<int>();
    c.repeats = j.at("repeats").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    const std::string noise = j.at("noise").get<std::string>();
    const double sigma = j.at("noise_sigma").get<double>();
    if (noise == "none")
        c.noise = NoiseModel::none();
    else if (noise == "multiplicative")
        c.noise = NoiseModel::multiplicative(sigma);
    else
        throw std::runtime_error("run record names an unknown noise model");
    c.objectives.clear();
    for (const auto &s : j.at("objectives")) {
        const auto o = objective_from_name(s.get<std::string>());
        if (!o) throw std::runtime_error("run record names an unknown objective");
        c.objectives.push_back(*o);
    }
    return c;
}

}  // namespace

std::string record_to_json_text(const RunRecord &rec) {
    json gens = json::array();
    for (const auto &g : rec.generations)
        gens.push_back(json{
            {"evaluations_used", g.evaluations_used},
            {"generation", g.generation},
            {"patches", g.patches},
            {"summaries", g.summaries},
            {"valid", g.valid},
        });
    json front = json::array();
    for (const auto &f : rec.front) {
        json samples = json::array();
        for (const auto &s : f.samples)
            samples.push_back(json::array({s.steps, s.peak_bytes, s.net_bytes}));
        front.push_back(json{
            {"full", f.full},
            {"patch", f.patch_text},
            {"samples", samples},
            {"summary", f.summary},
        });
    }
    const json j{
        {"all_invalid", rec.all_invalid},
        {"benchmark", rec.benchmark},
        {"config", config_to_json(rec.config)},
        {"evaluations_used", rec.evaluations_used},
        {"front", front},
        {"generations", gens},
        {"wall_seconds", rec.wall_seconds},
    };
    return j.dump(2) + "\n";
}

RunRecord record_from_json_text(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw std::runtime_error(std::string("malformed run record: ") + e.what());
    }
    try {
        RunRecord r;
        r.config = config_from_json(j.at("config"));
        r.benchmark = j.at("benchmark").get<std::string>();
        r.evaluations_used = j.at("evaluations_used").get<int>();
        r.wall_seconds = j.at("wall_seconds").get<double>();
        r.all_invalid = j.at("all_invalid").get<bool>();
        for (const auto &gj : j.at("generations")) {
            GenerationSnapshot s;
            s.generation = gj.at("generation").get<int>();
            s.evaluations_used = gj.at("evaluations_used").get<int>();
            s.patches = gj.at("patches").get<std::vector<std::string>>();
            s.summaries = gj.at("summaries").get<std::vector<std::vector<double>>>();
            s.valid = gj.at("valid").get<std::vector<bool>>();
            r.generations.push_back(std::move(s));
        }
        for (const auto &fj : j.at("front")) {
            FrontPoint p;
            p.patch_text = fj.at("patch").get<std::string>();
            p.summary = fj.at("summary").get<std::vector<double>>();
            p.full = fj.at("full").get<std::vector<double>>();
            for (const auto &sj : fj.at("samples")) {
                FitnessVector s;
                s.steps = sj.at(0).get<long long>();
                s.peak_bytes = sj.at(1).get<long long>();
                s.net_bytes = sj.at(2).get<long long>();
                s.valid = true;
                p.samples.push_back(s);
            }
            r.front.push_back(std::move(p));
        }
        return r;
    } catch (const json::exception &e) {
        throw std::runtime_error(std::string("malformed run record: ") + e.what());
    }
}

std::uint64_t record_digest(const RunRecord &rec) {
    RunRecord masked = rec;
    masked.wall_seconds = 0.0;
    return fnv1a64(record_to_json_text(masked));
}

}  // namespace mogi
