#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "mogi/search.hpp"
#include "search_internal.hpp"

namespace mogi {

std::string algo_name(Algo a) {
    switch (a) {
        case Algo::Nsga2: return "nsga2";
        case Algo::Nsga3: return "nsga3";
        case Algo::Spea2: return "spea2";
        case Algo::HillClimb: return "hillclimb";
    }
    return "nsga2";
}

std::optional<Algo> algo_from_name(const std::string &name) {
    if (name == "nsga2") return Algo::Nsga2;
    if (name == "nsga3") return Algo::Nsga3;
    if (name == "spea2") return Algo::Spea2;
    if (name == "hillclimb") return Algo::HillClimb;
    return std::nullopt;
}

std::string objective_name(Objective o) {
    switch (o) {
        case Objective::Steps: return "steps";
        case Objective::Memory: return "memory";
        case Objective::Net: return "net";
    }
    return "steps";
}

std::optional<Objective> objective_from_name(const std::string &name) {
    if (name == "steps") return Objective::Steps;
    if (name == "memory") return Objective::Memory;
    if (name == "net") return Objective::Net;
    return std::nullopt;
}

namespace {

double component(const FitnessVector &f, Objective o) {
    switch (o) {
        case Objective::Steps: return static_cast<double>(f.steps);
        case Objective::Memory: return static_cast<double>(f.peak_bytes);
        case Objective::Net: return static_cast<double>(f.net_bytes);
    }
    return 0.0;
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

Evaluator::Evaluator(const SearchConfig &cfg, const Program &original,
                     const Fixtures &fx, std::int64_t step_budget)
    : cfg_(cfg), original_(original), fx_(fx), step_budget_(step_budget) {}

const Individual &Evaluator::evaluate(const Patch &patch) {
    std::string key = serialize(patch, kProgramFileName);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    ++used_;

    Individual ind;
    ind.patch = patch;
    ind.patch_text = key;
    ApplyReport rep = apply(patch, original_);
    FitnessVector raw;
    bool tests_pass = false;
    if (rep.ok()) {
        ++suite_runs_;
        SuiteRun run = run_suite(*rep.result, fx_, step_budget_);
        raw = run.fitness;
        tests_pass = run.report.all_passed();
    }
    if (tests_pass) {
        ind.valid = true;
        // The interpreter is deterministic, so one execution stands in for
        // all repeats; only the noise differs per sample.
        const std::uint64_t patch_seed = cfg_.seed ^ fnv1a64(key);
        ind.samples.reserve(cfg_.repeats);
        for (int i = 0; i < cfg_.repeats; ++i)
            ind.samples.push_back(apply_noise(raw, cfg_.noise, patch_seed, i));
        for (Objective o : cfg_.objectives) {
            std::vector<double> vals;
            vals.reserve(ind.samples.size());
            for (auto &s : ind.samples) vals.push_back(component(s, o));
            ind.summary.push_back(median_of(std::move(vals)));
        }
        for (Objective o : {Objective::Steps, Objective::Memory, Objective::Net}) {
            std::vector<double> vals;
            vals.reserve(ind.samples.size());
            for (auto &s : ind.samples) vals.push_back(component(s, o));
            ind.full.push_back(median_of(std::move(vals)));
        }
    } else {
        ind.summary.assign(cfg_.objectives.size(), kInvalidObjective);
        ind.full.assign(3, kInvalidObjective);
    }
    return cache_.emplace(std::move(key), std::move(ind)).first->second;
}

namespace detail {

bool coin(std::mt19937_64 &rng, double rate) {
    return (rng() >> 11) * 0x1.0p-53 < rate;
}

void shuffle_indices(std::vector<size_t> &idx, std::mt19937_64 &rng) {
    for (size_t i = idx.size(); i > 1; --i)
        std::swap(idx[i - 1], idx[draw_uniform(rng, i)]);
}

std::vector<std::vector<double>> summaries_of(const std::vector<Individual> &pop) {
    std::vector<std::vector<double>> pts;
    pts.reserve(pop.size());
    for (auto &ind : pop) pts.push_back(ind.summary);
    return pts;
}

void take_snapshot(std::vector<GenerationSnapshot> &out, int generation,
                   const std::vector<Individual> &pop, const Evaluator &ev) {
    GenerationSnapshot s;
    s.generation = generation;
    s.evaluations_used = ev.evaluations_used();
    for (auto &ind : pop) {
        s.patches.push_back(ind.patch_text);
        s.summaries.push_back(ind.summary);
        s.valid.push_back(ind.valid);
    }
    out.push_back(std::move(s));
}

std::vector<Individual> initial_population(Evaluator &ev, const SearchConfig &cfg,
                                           const EditSpace &space,
                                           std::mt19937_64 &rng) {
    std::vector<Individual> pop;
    while (static_cast<int>(pop.size()) < cfg.population_size && ev.budget_left()) {
        Patch p;
        p.edits.push_back(random_edit(space, rng));
        pop.push_back(ev.evaluate(p));
    }
    return pop;
}

Patch make_child(const std::vector<Individual> &pool,
                 const std::function<size_t(std::mt19937_64 &)> &pick,
                 const SearchConfig &cfg, const EditSpace &space,
                 std::mt19937_64 &rng) {
    Patch child;
    if (coin(rng, cfg.crossover_rate)) {
        const size_t a = pick(rng);
        const size_t b = pick(rng);
        child = crossover(pool[a].patch, pool[b].patch);
    } else {
        child = pool[pick(rng)].patch;
    }
    if (coin(rng, cfg.mutation_rate)) child = mutate(child, space, rng);
    return child;
}

}  // namespace detail

namespace {

void validate_config(const SearchConfig &cfg) {
    if (cfg.population_size < 1) throw std::invalid_argument("population_size must be >= 1");
    if (cfg.generations < 1) throw std::invalid_argument("generations must be >= 1");
    if (cfg.evaluation_budget < 1) throw std::invalid_argument("evaluation_budget must be >= 1");
    if (cfg.repeats < 1) throw std::invalid_argument("repeats must be >= 1");
    if (cfg.mutation_rate < 0.0 || cfg.mutation_rate > 1.0)
        throw std::invalid_argument("mutation_rate must be in [0, 1]");
    if (cfg.crossover_rate < 0.0 || cfg.crossover_rate > 1.0)
        throw std::invalid_argument("crossover_rate must be in [0, 1]");
    if (cfg.objectives.empty()) throw std::invalid_argument("objectives must be nonempty");
    for (size_t i = 0; i < cfg.objectives.size(); ++i)
        for (size_t j = i + 1; j < cfg.objectives.size(); ++j)
            if (cfg.objectives[i] == cfg.objectives[j])
                throw std::invalid_argument("objectives must be distinct");
    if (cfg.algorithm == Algo::HillClimb && cfg.objectives.size() != 1)
        throw std::invalid_argument("hillclimb takes exactly one objective");
    if (cfg.noise.kind == NoiseModel::Kind::Multiplicative && cfg.noise.sigma < 0.0)
        throw std::invalid_argument("noise sigma must be >= 0");
}

}  // namespace

RunRecord run_search(const SearchConfig &cfg, const Program &original,
                     const Fixtures &fx, const std::string &benchmark_name) {
    validate_config(cfg);
    const auto t0 = std::chrono::steady_clock::now();

    Program base = clone_program(original, true);
    auto errs = typecheck(base);
    if (!errs.empty())
        throw std::runtime_error("original program does not type-check: " +
                                 errs.front().render());
    SuiteRun probe =
        run_suite(base, fx, std::numeric_limits<long long>::max() / 4);
    if (!probe.report.all_passed())
        throw std::runtime_error("original program fails its own tests");
    // Mutants that loop are cut off at a small multiple of the original cost.
    const std::int64_t step_budget = 10 * probe.fitness.steps;

    EditSpace space = build_edit_space(base);
    if (space.stmt_ids.empty() && space.method_targets.empty() &&
        space.class_targets.empty())
        throw std::runtime_error("program has no editable statements or calls");

    Evaluator ev(cfg, base, fx, step_budget);
    std::mt19937_64 rng(cfg.seed);

    RunRecord rec;
    rec.config = cfg;
    rec.benchmark = benchmark_name;

    std::vector<Individual> elite;
    switch (cfg.algorithm) {
        case Algo::Nsga2:
            elite = detail::drive_nsga2(ev, cfg, space, rng, rec.generations);
            break;
        case Algo::Nsga3:
            elite = detail::drive_nsga3(ev, cfg, space, rng, rec.generations);
            break;
        case Algo::Spea2:
            elite = detail::drive_spea2(ev, cfg, space, rng, rec.generations);
            break;
        case Algo::HillClimb:
            elite = detail::drive_hillclimb(ev, cfg, space, rng, rec.generations);
            break;
    }
    rec.evaluations_used = ev.evaluations_used();

    std::map<std::string, const Individual *> uniq;
    for (auto &ind : elite)
        if (ind.valid) uniq.emplace(ind.patch_text, &ind);
    for (auto &[text, ind] : uniq) {
        bool beaten = false;
        for (auto &[otext, other] : uniq) {
            if (otext != text && dominates(other->summary, ind->summary)) {
                beaten = true;
                break;
            }
        }
        if (!beaten) rec.front.push_back({text, ind->summary, ind->full, ind->samples});
    }
    std::sort(rec.front.begin(), rec.front.end(),
              [](const FrontPoint &a, const FrontPoint &b) {
                  if (a.summary != b.summary) return a.summary < b.summary;
                  return a.patch_text < b.patch_text;
              });
    rec.all_invalid = rec.front.empty();
    rec.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

}  // namespace mogi
