#include <algorithm>
#include <numeric>

#include "search_internal.hpp"

namespace mogi::detail {
namespace {

struct RankInfo {
    std::vector<int> rank;
    std::vector<double> crowd;
};

RankInfo rank_and_crowd(const std::vector<Individual> &pop) {
    const auto pts = summaries_of(pop);
    const auto fronts = fast_nondominated_sort(pts);
    RankInfo info;
    info.rank.assign(pop.size(), 0);
    info.crowd.assign(pop.size(), 0.0);
    for (size_t f = 0; f < fronts.size(); ++f) {
        const auto cd = crowding_distance(pts, fronts[f]);
        for (size_t i = 0; i < fronts[f].size(); ++i) {
            info.rank[fronts[f][i]] = static_cast<int>(f);
            info.crowd[fronts[f][i]] = cd[i];
        }
    }
    return info;
}

// Whole fronts in rank order; the split front by descending crowding, equal
// crowding resolved by a seeded shuffle rather than population position.
std::vector<Individual> nsga2_select(const std::vector<Individual> &uni, size_t n,
                                     std::mt19937_64 &rng) {
    const auto pts = summaries_of(uni);
    const auto fronts = fast_nondominated_sort(pts);
    std::vector<Individual> next;
    for (const auto &front : fronts) {
        if (next.size() + front.size() <= n) {
            for (int i : front) next.push_back(uni[i]);
            if (next.size() == n) break;
            continue;
        }
        const size_t need = n - next.size();
        const auto cd = crowding_distance(pts, front);
        std::vector<size_t> order(front.size());
        std::iota(order.begin(), order.end(), size_t{0});
        shuffle_indices(order, rng);
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return cd[a] > cd[b]; });
        for (size_t r = 0; r < need; ++r) next.push_back(uni[front[order[r]]]);
        break;
    }
    return next;
}

}  // namespace

std::vector<Individual> drive_nsga2(Evaluator &ev, const SearchConfig &cfg,
                                    const EditSpace &space, std::mt19937_64 &rng,
                                    std::vector<GenerationSnapshot> &snapshots) {
    auto pop = initial_population(ev, cfg, space, rng);
    take_snapshot(snapshots, 1, pop, ev);
    for (int gen = 2; gen <= cfg.generations; ++gen) {
        if (!ev.budget_left()) break;
        const RankInfo info = rank_and_crowd(pop);
        const size_t n = pop.size();
        auto pick = [&](std::mt19937_64 &r) -> size_t {
            const size_t i = draw_uniform(r, n);
            const size_t j = draw_uniform(r, n);
            if (info.rank[i] != info.rank[j])
                return info.rank[i] < info.rank[j] ? i : j;
            if (info.crowd[i] != info.crowd[j])
                return info.crowd[i] > info.crowd[j] ? i : j;
            return draw_uniform(r, 2) == 0 ? i : j;
        };
        std::vector<Individual> offspring;
        while (static_cast<int>(offspring.size()) < cfg.population_size &&
               ev.budget_left())
            offspring.push_back(ev.evaluate(make_child(pop, pick, cfg, space, rng)));
        std::vector<Individual> uni = std::move(pop);
        uni.insert(uni.end(), offspring.begin(), offspring.end());
        pop = nsga2_select(uni, std::min<size_t>(cfg.population_size, uni.size()), rng);
        take_snapshot(snapshots, gen, pop, ev);
    }
    return pop;
}

}  // namespace mogi::detail
