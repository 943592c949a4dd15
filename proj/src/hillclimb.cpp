#include "search_internal.hpp"

namespace mogi::detail {

// Accepts a proposal only when it is valid and strictly better on the single
// configured objective, so every recorded climb segment is monotone. An
// empty-patch snapshot marks the start and each restart. Cache hits cost no
// budget, so a proposal cap keeps exhausted landscapes from spinning.
std::vector<Individual> drive_hillclimb(Evaluator &ev, const SearchConfig &cfg,
                                        const EditSpace &space, std::mt19937_64 &rng,
                                        std::vector<GenerationSnapshot> &snapshots) {
    const Patch empty;
    Individual current = ev.evaluate(empty);
    Individual best = current;
    int move = 1;
    take_snapshot(snapshots, move, {current}, ev);

    int rejections = 0;
    long long proposals = 0;
    const long long cap = 50LL * cfg.evaluation_budget;
    while (ev.budget_left() && proposals < cap) {
        ++proposals;
        const Patch cand = mutate(current.patch, space, rng);
        const Individual &c = ev.evaluate(cand);
        if (c.valid && c.summary[0] < current.summary[0]) {
            current = c;
            if (current.summary[0] < best.summary[0]) best = current;
            rejections = 0;
            take_snapshot(snapshots, ++move, {current}, ev);
        } else if (++rejections >= 50) {
            current = ev.evaluate(empty);
            rejections = 0;
            take_snapshot(snapshots, ++move, {current}, ev);
        }
    }
    return {best};
}

}  // namespace mogi::detail
