#include <algorithm>
#include <cmath>
#include <numeric>

#include "search_internal.hpp"

namespace mogi::detail {
namespace {

double euclid(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Strength, raw fitness from dominators, density from the k-th nearest
// neighbor; nondominated individuals are exactly those with fitness < 1.
std::vector<double> spea2_fitness(const std::vector<std::vector<double>> &pts) {
    const size_t n = pts.size();
    std::vector<int> strength(n, 0);
    std::vector<std::vector<char>> dom(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && dominates(pts[i], pts[j])) {
                dom[i][j] = 1;
                ++strength[i];
            }
    size_t k = static_cast<size_t>(std::floor(std::sqrt(static_cast<double>(n))));
    if (k < 1) k = 1;
    if (n > 1 && k > n - 1) k = n - 1;
    std::vector<double> fit(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        double raw = 0.0;
        for (size_t j = 0; j < n; ++j)
            if (dom[j][i]) raw += strength[j];
        double sigma = 0.0;
        if (n > 1) {
            std::vector<double> d;
            d.reserve(n - 1);
            for (size_t j = 0; j < n; ++j)
                if (j != i) d.push_back(euclid(pts[i], pts[j]));
            std::sort(d.begin(), d.end());
            sigma = d[k - 1];
        }
        fit[i] = raw + 1.0 / (sigma + 2.0);
    }
    return fit;
}

struct ArchiveOut {
    std::vector<Individual> members;
    std::vector<double> fit;
};

// Nondominated of the union, truncated by repeated removal of the member
// with the lexicographically smallest sorted neighbor-distance vector, or
// filled with the best dominated individuals by fitness.
ArchiveOut update_archive(const std::vector<Individual> &uni, size_t size) {
    const auto pts = summaries_of(uni);
    const auto fit = spea2_fitness(pts);
    std::vector<size_t> nd, rest;
    for (size_t i = 0; i < uni.size(); ++i)
        (fit[i] < 1.0 ? nd : rest).push_back(i);
    std::vector<size_t> chosen = nd;
    while (chosen.size() > size) {
        const size_t n = chosen.size();
        std::vector<std::vector<double>> dv(n);
        for (size_t a = 0; a < n; ++a) {
            dv[a].reserve(n - 1);
            for (size_t b = 0; b < n; ++b)
                if (b != a) dv[a].push_back(euclid(pts[chosen[a]], pts[chosen[b]]));
            std::sort(dv[a].begin(), dv[a].end());
        }
        size_t rm = 0;
        for (size_t a = 1; a < n; ++a)
            if (dv[a] < dv[rm]) rm = a;
        chosen.erase(chosen.begin() + static_cast<long>(rm));
    }
    if (chosen.size() < size) {
        std::vector<size_t> order = rest;
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return fit[a] < fit[b]; });
        for (size_t i = 0; i < order.size() && chosen.size() < size; ++i)
            chosen.push_back(order[i]);
    }
    ArchiveOut out;
    for (size_t i : chosen) {
        out.members.push_back(uni[i]);
        out.fit.push_back(fit[i]);
    }
    return out;
}

}  // namespace

std::vector<Individual> drive_spea2(Evaluator &ev, const SearchConfig &cfg,
                                    const EditSpace &space, std::mt19937_64 &rng,
                                    std::vector<GenerationSnapshot> &snapshots) {
    auto pop = initial_population(ev, cfg, space, rng);
    take_snapshot(snapshots, 1, pop, ev);
    std::vector<Individual> archive;
    for (int gen = 2; gen <= cfg.generations; ++gen) {
        if (!ev.budget_left()) break;
        std::vector<Individual> uni = std::move(pop);
        uni.insert(uni.end(), archive.begin(), archive.end());
        ArchiveOut upd = update_archive(uni, cfg.population_size);
        archive = std::move(upd.members);
        const std::vector<double> fit = std::move(upd.fit);
        const size_t n = archive.size();
        auto pick = [&](std::mt19937_64 &r) -> size_t {
            const size_t i = draw_uniform(r, n);
            const size_t j = draw_uniform(r, n);
            if (fit[i] != fit[j]) return fit[i] < fit[j] ? i : j;
            return draw_uniform(r, 2) == 0 ? i : j;
        };
        std::vector<Individual> offspring;
        while (static_cast<int>(offspring.size()) < cfg.population_size &&
               ev.budget_left())
            offspring.push_back(
                ev.evaluate(make_child(archive, pick, cfg, space, rng)));
        pop = std::move(offspring);
        take_snapshot(snapshots, gen, archive, ev);
    }
    std::vector<Individual> uni = std::move(pop);
    uni.insert(uni.end(), archive.begin(), archive.end());
    if (uni.empty()) return uni;
    return update_archive(uni, cfg.population_size).members;
}

}  // namespace mogi::detail
