#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "mogi/stats.hpp"

namespace mogi {

namespace {

const char *kAxisNames[3] = {"steps", "memory", "net"};

double axis_of(const FitnessVector &f, int axis) {
    switch (axis) {
        case 0: return static_cast<double>(f.steps);
        case 1: return static_cast<double>(f.peak_bytes);
        default: return static_cast<double>(f.net_bytes);
    }
}

std::vector<double> axis_samples(const std::vector<FitnessVector> &samples,
                                 int axis) {
    std::vector<double> v;
    v.reserve(samples.size());
    for (const auto &s : samples) v.push_back(axis_of(s, axis));
    return v;
}

const FrontPoint *best_point(const RunRecord &rec, int axis) {
    const FrontPoint *best = nullptr;
    for (const auto &fp : rec.front)
        if (!best || fp.full[axis] < best->full[axis]) best = &fp;
    return best;
}

}  // namespace

CompareReport compare_runs(const std::vector<RunRecord> &records,
                           const std::vector<FitnessVector> &baseline_samples) {
    if (records.empty())
        throw std::invalid_argument("compare_runs needs at least one record");
    if (baseline_samples.empty())
        throw std::invalid_argument("compare_runs needs baseline samples");
    CompareReport rep;
    rep.benchmark = records.front().benchmark;
    for (const auto &r : records)
        if (r.benchmark != rep.benchmark)
            throw std::runtime_error("compare_runs: records mix benchmarks (" +
                                     rep.benchmark + " vs " + r.benchmark + ")");

    std::array<std::vector<double>, 3> base;
    std::array<double, 3> base_med{};
    for (int c = 0; c < 3; ++c) {
        base[c] = axis_samples(baseline_samples, c);
        base_med[c] = median(base[c]);
    }

    // Worst observation across every algorithm's fronts plus the baseline:
    // the shared reference that makes hypervolumes comparable.
    rep.best.assign(3, 0.0);
    rep.worst.assign(3, 0.0);
    for (int c = 0; c < 3; ++c) rep.best[c] = rep.worst[c] = base_med[c];
    for (const auto &r : records)
        for (const auto &fp : r.front)
            for (int c = 0; c < 3; ++c) {
                rep.best[c] = std::min(rep.best[c], fp.full[c]);
                rep.worst[c] = std::max(rep.worst[c], fp.full[c]);
            }
    std::vector<std::pair<double, double>> bounds;
    for (int c = 0; c < 3; ++c) bounds.push_back({rep.best[c], rep.worst[c]});

    std::map<std::string, std::vector<const RunRecord *>> groups;
    for (const auto &r : records)
        groups[algo_name(r.config.algorithm)].push_back(&r);

    for (auto &[name, recs] : groups) {
        std::stable_sort(recs.begin(), recs.end(),
                         [](const RunRecord *a, const RunRecord *b) {
                             return a->config.seed < b->config.seed;
                         });
        AlgoReport ar;
        ar.algorithm = name;
        ar.runs = static_cast<int>(recs.size());
        for (int c = 0; c < 3; ++c) {
            ObjectiveReport &obr = ar.objectives[c];
            obr.baseline_median = base_med[c];
            const FrontPoint *overall = nullptr;
            for (const RunRecord *r : recs) {
                const FrontPoint *p = best_point(*r, c);
                if (!p) continue;
                if (!overall || p->full[c] < overall->full[c]) overall = p;
                const auto patch = axis_samples(p->samples, c);
                if (base[c].size() >= 3 && patch.size() >= 3) {
                    if (mann_whitney_u(base[c], patch).improved) ++obr.improved_runs;
                } else if (median(patch) < base_med[c]) {
                    // too few repeats for the test; fall back to the medians
                    ++obr.improved_runs;
                }
            }
            if (overall) {
                obr.best_median = overall->full[c];
                obr.best_improvement_pct =
                    base_med[c] != 0.0
                        ? (base_med[c] - obr.best_median) / base_med[c] * 100.0
                        : 0.0;
                const auto eff =
                    vargha_delaney_a(base[c], axis_samples(overall->samples, c));
                obr.a_measure = eff.a_measure;
                obr.effect_label = eff.label;
            } else {
                obr.best_median = base_med[c];
            }
        }
        std::vector<std::vector<double>> pooled;
        for (const RunRecord *r : recs) {
            std::vector<std::vector<double>> pts;
            for (const auto &fp : r->front) pts.push_back(fp.full);
            ar.run_hv.push_back(hypervolume(pts, rep.worst, bounds).normalized);
            pooled.insert(pooled.end(), pts.begin(), pts.end());
        }
        ar.union_hv = hypervolume(pareto_front(pooled), rep.worst, bounds).normalized;
        std::vector<double> walls;
        for (const RunRecord *r : recs) walls.push_back(r->wall_seconds);
        ar.wall_median = median(walls);
        ar.wall_min = *std::min_element(walls.begin(), walls.end());
        ar.wall_max = *std::max_element(walls.begin(), walls.end());
        double sum = 0.0;
        for (double w : walls) sum += w;
        ar.wall_mean = sum / walls.size();
        rep.algorithms.push_back(std::move(ar));
    }
    return rep;
}

std::string compare_report_to_json_text(const CompareReport &report) {
    using nlohmann::json;
    json algos = json::array();
    for (const auto &ar : report.algorithms) {
        json objectives;
        for (int c = 0; c < 3; ++c) {
            const auto &o = ar.objectives[c];
            objectives[kAxisNames[c]] = json{
                {"a_measure", o.a_measure},
                {"baseline_median", o.baseline_median},
                {"best_improvement_pct", o.best_improvement_pct},
                {"best_median", o.best_median},
                {"effect_label", o.effect_label},
                {"improved_runs", o.improved_runs},
            };
        }
        algos.push_back(json{
            {"algorithm", ar.algorithm},
            {"objectives", objectives},
            {"run_hv", ar.run_hv},
            {"runs", ar.runs},
            {"union_hv", ar.union_hv},
            {"wall", json{{"max", ar.wall_max},
                          {"mean", ar.wall_mean},
                          {"median", ar.wall_median},
                          {"min", ar.wall_min}}},
        });
    }
    const json j{
        {"algorithms", algos},
        {"benchmark", report.benchmark},
        {"bounds", json{{"best", report.best}, {"worst", report.worst}}},
    };
    return j.dump(2) + "\n";
}

}  // namespace mogi
