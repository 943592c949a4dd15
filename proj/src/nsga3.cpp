#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "search_internal.hpp"

namespace mogi {

std::vector<std::vector<double>> das_dennis(int objectives, int divisions) {
    std::vector<std::vector<double>> dirs;
    if (objectives <= 1) {
        dirs.push_back({1.0});
        return dirs;
    }
    std::vector<int> parts(objectives, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == objectives - 1) {
            parts[pos] = left;
            std::vector<double> d(objectives);
            for (int i = 0; i < objectives; ++i)
                d[i] = static_cast<double>(parts[i]) / divisions;
            dirs.push_back(std::move(d));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            parts[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, divisions);
    return dirs;
}

}  // namespace mogi

namespace mogi::detail {
namespace {

constexpr double kHuge = std::numeric_limits<double>::max();

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// distance from f to the ray through direction w
double perp_dist(const std::vector<double> &f, const std::vector<double> &w) {
    const double t = dot(f, w) / dot(w, w);
    double d2 = 0.0;
    for (size_t i = 0; i < f.size(); ++i) {
        const double diff = f[i] - t * w[i];
        d2 += diff * diff;
    }
    return std::sqrt(d2);
}

// Hyperplane sum(x_i / a_i) = 1 through the extreme points; false when the
// system is singular or an intercept comes out nonpositive.
bool intercepts_from(const std::vector<std::vector<double>> &extremes,
                     std::vector<double> &a) {
    const size_t m = extremes.size();
    std::vector<std::vector<double>> t(m, std::vector<double>(m + 1, 0.0));
    for (size_t r = 0; r < m; ++r) {
        for (size_t c = 0; c < m; ++c) t[r][c] = extremes[r][c];
        t[r][m] = 1.0;
    }
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < m; ++r)
            if (std::fabs(t[r][col]) > std::fabs(t[piv][col])) piv = r;
        if (std::fabs(t[piv][col]) < 1e-12) return false;
        std::swap(t[col], t[piv]);
        const double lead = t[col][col];
        for (double &v : t[col]) v /= lead;
        for (size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            const double f = t[r][col];
            for (size_t c = 0; c <= m; ++c) t[r][c] -= f * t[col][c];
        }
    }
    for (size_t i = 0; i < m; ++i) {
        if (t[i][m] <= 1e-12) return false;
        a[i] = 1.0 / t[i][m];
    }
    return true;
}

std::vector<Individual> nsga3_select(const std::vector<Individual> &uni, size_t n,
                                     std::mt19937_64 &rng,
                                     const std::vector<std::vector<double>> &dirs) {
    const auto pts = summaries_of(uni);
    const auto fronts = fast_nondominated_sort(pts);
    std::vector<Individual> next;
    std::vector<int> taken;
    size_t fi = 0;
    for (; fi < fronts.size(); ++fi) {
        if (next.size() + fronts[fi].size() > n) break;
        for (int i : fronts[fi]) {
            next.push_back(uni[i]);
            taken.push_back(i);
        }
        if (next.size() == n) return next;
    }
    if (fi == fronts.size()) return next;
    const std::vector<int> &last = fronts[fi];
    const size_t need = n - next.size();

    std::vector<int> members = taken;
    members.insert(members.end(), last.begin(), last.end());
    const size_t m = pts[members[0]].size();

    std::vector<double> ideal(m, kHuge);
    for (int i : members)
        for (size_t j = 0; j < m; ++j) ideal[j] = std::min(ideal[j], pts[i][j]);
    auto trans = [&](int i, size_t j) { return pts[i][j] - ideal[j]; };

    std::vector<std::vector<double>> extremes(m, std::vector<double>(m, 0.0));
    for (size_t ax = 0; ax < m; ++ax) {
        double best = kHuge;
        int bi = members[0];
        for (int i : members) {
            double asf = 0.0;
            for (size_t j = 0; j < m; ++j)
                asf = std::max(asf, trans(i, j) / (j == ax ? 1.0 : 1e-6));
            if (asf < best) {
                best = asf;
                bi = i;
            }
        }
        for (size_t j = 0; j < m; ++j) extremes[ax][j] = trans(bi, j);
    }
    std::vector<double> inter(m, 1.0);
    if (!intercepts_from(extremes, inter)) {
        for (size_t j = 0; j < m; ++j) {
            double mx = 0.0;
            for (int i : members) mx = std::max(mx, trans(i, j));
            inter[j] = mx;
        }
    }
    for (double &v : inter)
        if (v < 1e-12) v = 1e-12;

    auto associate = [&](int i, int &dir, double &dist) {
        std::vector<double> f(m);
        for (size_t j = 0; j < m; ++j) f[j] = trans(i, j) / inter[j];
        dir = 0;
        dist = kHuge;
        for (size_t d = 0; d < dirs.size(); ++d) {
            const double pd = perp_dist(f, dirs[d]);
            if (pd < dist) {
                dist = pd;
                dir = static_cast<int>(d);
            }
        }
    };

    std::vector<int> niche(dirs.size(), 0);
    for (int i : taken) {
        int d;
        double ds;
        associate(i, d, ds);
        ++niche[d];
    }
    struct Cand {
        int idx;
        int dir;
        double dist;
    };
    std::vector<Cand> pool;
    for (int i : last) {
        Cand c{i, 0, 0.0};
        associate(i, c.dir, c.dist);
        pool.push_back(c);
    }
    std::vector<char> active(dirs.size(), 1);
    size_t got = 0;
    while (got < need) {
        int low = std::numeric_limits<int>::max();
        for (size_t d = 0; d < dirs.size(); ++d)
            if (active[d]) low = std::min(low, niche[d]);
        std::vector<size_t> mins;
        for (size_t d = 0; d < dirs.size(); ++d)
            if (active[d] && niche[d] == low) mins.push_back(d);
        const size_t d = mins[draw_uniform(rng, mins.size())];
        std::vector<size_t> mem;
        for (size_t c = 0; c < pool.size(); ++c)
            if (pool[c].dir == static_cast<int>(d)) mem.push_back(c);
        if (mem.empty()) {
            active[d] = 0;
            continue;
        }
        size_t chosen;
        if (niche[d] == 0) {
            chosen = mem[0];
            for (size_t c : mem)
                if (pool[c].dist < pool[chosen].dist) chosen = c;
        } else {
            chosen = mem[draw_uniform(rng, mem.size())];
        }
        next.push_back(uni[pool[chosen].idx]);
        ++niche[d];
        pool.erase(pool.begin() + static_cast<long>(chosen));
        ++got;
    }
    return next;
}

std::vector<int> ranks_of(const std::vector<Individual> &pop) {
    const auto fronts = fast_nondominated_sort(summaries_of(pop));
    std::vector<int> rank(pop.size(), 0);
    for (size_t f = 0; f < fronts.size(); ++f)
        for (int i : fronts[f]) rank[i] = static_cast<int>(f);
    return rank;
}

}  // namespace

std::vector<Individual> drive_nsga3(Evaluator &ev, const SearchConfig &cfg,
                                    const EditSpace &space, std::mt19937_64 &rng,
                                    std::vector<GenerationSnapshot> &snapshots) {
    const int m = static_cast<int>(cfg.objectives.size());
    const int divisions = m == 3 ? 12 : m == 2 ? 39 : 1;
    const auto dirs = das_dennis(m, divisions);

    auto pop = initial_population(ev, cfg, space, rng);
    take_snapshot(snapshots, 1, pop, ev);
    for (int gen = 2; gen <= cfg.generations; ++gen) {
        if (!ev.budget_left()) break;
        const auto rank = ranks_of(pop);
        const size_t n = pop.size();
        auto pick = [&](std::mt19937_64 &r) -> size_t {
            const size_t i = draw_uniform(r, n);
            const size_t j = draw_uniform(r, n);
            if (rank[i] != rank[j]) return rank[i] < rank[j] ? i : j;
            return draw_uniform(r, 2) == 0 ? i : j;
        };
        std::vector<Individual> offspring;
        while (static_cast<int>(offspring.size()) < cfg.population_size &&
               ev.budget_left())
            offspring.push_back(ev.evaluate(make_child(pop, pick, cfg, space, rng)));
        std::vector<Individual> uni = std::move(pop);
        uni.insert(uni.end(), offspring.begin(), offspring.end());
        pop = nsga3_select(uni, std::min<size_t>(cfg.population_size, uni.size()), rng,
                           dirs);
        take_snapshot(snapshots, gen, pop, ev);
    }
    return pop;
}

}  // namespace mogi::detail
