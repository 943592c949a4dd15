#pragma once

// Shared plumbing for the algorithm drivers. Each driver owns one run's
// generation loop: it appends snapshots and returns the elite set the
// final front is read from (population, archive, or best-so-far).

#include <functional>
#include <random>

#include "mogi/search.hpp"

namespace mogi::detail {

// Probability draw on the same open-unit-interval mapping the noise model
// uses; frozen so seeded runs replay.
bool coin(std::mt19937_64 &rng, double rate);

// Seeded Fisher-Yates over an index vector.
void shuffle_indices(std::vector<size_t> &idx, std::mt19937_64 &rng);

std::vector<std::vector<double>> summaries_of(const std::vector<Individual> &pop);

void take_snapshot(std::vector<GenerationSnapshot> &out, int generation,
                   const std::vector<Individual> &pop, const Evaluator &ev);

// population_size single-edit individuals, truncated if the budget dies.
std::vector<Individual> initial_population(Evaluator &ev, const SearchConfig &cfg,
                                           const EditSpace &space,
                                           std::mt19937_64 &rng);

// One child: crossover coin, tournament pick(s), mutation coin, in that
// order. `pick` returns an index into the mating pool.
Patch make_child(const std::vector<Individual> &pool,
                 const std::function<size_t(std::mt19937_64 &)> &pick,
                 const SearchConfig &cfg, const EditSpace &space,
                 std::mt19937_64 &rng);

std::vector<Individual> drive_nsga2(Evaluator &ev, const SearchConfig &cfg,
                                    const EditSpace &space, std::mt19937_64 &rng,
                                    std::vector<GenerationSnapshot> &snapshots);
std::vector<Individual> drive_nsga3(Evaluator &ev, const SearchConfig &cfg,
                                    const EditSpace &space, std::mt19937_64 &rng,
                                    std::vector<GenerationSnapshot> &snapshots);
std::vector<Individual> drive_spea2(Evaluator &ev, const SearchConfig &cfg,
                                    const EditSpace &space, std::mt19937_64 &rng,
                                    std::vector<GenerationSnapshot> &snapshots);
std::vector<Individual> drive_hillclimb(Evaluator &ev, const SearchConfig &cfg,
                                        const EditSpace &space, std::mt19937_64 &rng,
                                        std::vector<GenerationSnapshot> &snapshots);

}  // namespace mogi::detail
