#pragma once

// Patch search: NSGA-II, NSGA-III, SPEA2, and a single-objective hill
// climber over the edit space of one program, plus the seeded runner and
// its JSON run record.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mogi/interp.hpp"
#include "mogi/operators.hpp"

namespace mogi {

enum class Algo { Nsga2, Nsga3, Spea2, HillClimb };
enum class Objective { Steps, Memory, Net };

std::string algo_name(Algo a);
std::optional<Algo> algo_from_name(const std::string &name);
std::string objective_name(Objective o);
std::optional<Objective> objective_from_name(const std::string &name);

// Summary value given to invalid individuals on every objective. Any real
// measurement is far below it, so plain dominance ranks invalid individuals
// behind every valid one without special-casing.
constexpr double kInvalidObjective = 1e18;

struct SearchConfig {
    Algo algorithm = Algo::Nsga2;
    int population_size = 40;
    int generations = 10;
    double mutation_rate = 0.5;
    double crossover_rate = 0.2;
    int evaluation_budget = 400;
    int repeats = 20;
    std::uint64_t seed = 0;
    // Hill climbing takes exactly one objective; the others any nonempty
    // duplicate-free subset.
    std::vector<Objective> objectives = {Objective::Steps, Objective::Memory,
                                         Objective::Net};
    NoiseModel noise = NoiseModel::none();
};

struct Individual {
    Patch patch;
    std::string patch_text;  // canonical serialization; also the cache key
    std::vector<FitnessVector> samples;  // empty when the suite never ran
    std::vector<double> summary;  // per-objective medians, configured order
    std::vector<double> full;     // medians over steps, memory, net
    bool valid = false;
};

struct GenerationSnapshot {
    int generation = 0;         // 1-based; 1 is the initial population
    int evaluations_used = 0;   // cumulative at snapshot time
    std::vector<std::string> patches;
    std::vector<std::vector<double>> summaries;
    std::vector<bool> valid;
};

struct FrontPoint {
    std::string patch_text;
    std::vector<double> summary;
    std::vector<double> full;
    std::vector<FitnessVector> samples;  // per-repeat measurements, canonical order
};

struct RunRecord {
    SearchConfig config;
    std::string benchmark;
    std::vector<GenerationSnapshot> generations;
    int evaluations_used = 0;
    double wall_seconds = 0.0;  // the one field allowed to vary between runs
    std::vector<FrontPoint> front;  // valid, mutually non-dominated, sorted
    bool all_invalid = false;       // true iff no valid individual was found
};

// Pareto dominance, minimization. Throws std::invalid_argument on arity
// mismatch.
bool dominates(const std::vector<double> &a, const std::vector<double> &b);

// Front 0 is the non-dominated set; front k is non-dominated once fronts
// < k are removed. Indices within a front are ascending.
std::vector<std::vector<int>> fast_nondominated_sort(
    const std::vector<std::vector<double>> &points);

// Canonical NSGA-II crowding for one front (indices into `points`); result
// aligned with `front`. Boundary individuals get +infinity; a zero-range
// objective contributes nothing.
std::vector<double> crowding_distance(const std::vector<std::vector<double>> &points,
                                      const std::vector<int> &front);

// Das-Dennis structured reference directions on the simplex, lexicographic
// order, C(divisions + m - 1, m - 1) of them. One objective yields {1}.
std::vector<std::vector<double>> das_dennis(int objectives, int divisions);

// Fitness evaluation with duplicate-patch caching. Each distinct patch
// charges one budget unit on first sight; cache hits are free. A patch that
// fails to type-check never runs the suite; one that fails tests runs it
// once; a valid one runs it once and replicates samples through the noise
// model. Callers check budget_left() before evaluating anything new.
class Evaluator {
  public:
    Evaluator(const SearchConfig &cfg, const Program &original, const Fixtures &fx,
              std::int64_t step_budget);

    const Individual &evaluate(const Patch &patch);

    bool budget_left() const { return used_ < cfg_.evaluation_budget; }
    int evaluations_used() const { return used_; }
    // interpreter suite executions so far; at most one per budget unit
    std::int64_t suite_runs() const { return suite_runs_; }
    std::int64_t step_budget() const { return step_budget_; }

  private:
    SearchConfig cfg_;
    const Program &original_;
    const Fixtures &fx_;
    std::int64_t step_budget_;
    int used_ = 0;
    std::int64_t suite_runs_ = 0;
    std::map<std::string, Individual> cache_;
};

// Runs the configured algorithm against `original`. The original must
// type-check and pass its own tests (throws std::runtime_error otherwise);
// its measured cost seeds the per-test step budget for mutants. Identical
// (config, original, fixtures) inputs produce an identical record apart
// from wall_seconds.
RunRecord run_search(const SearchConfig &cfg, const Program &original,
                     const Fixtures &fx, const std::string &benchmark_name);

std::string record_to_json_text(const RunRecord &rec);
// Throws std::runtime_error on malformed input.
RunRecord record_from_json_text(const std::string &text);

std::uint64_t fnv1a64(std::string_view s);
// Hash of the record JSON with wall_seconds zeroed; the replay identity.
std::uint64_t record_digest(const RunRecord &rec);

}  // namespace mogi
