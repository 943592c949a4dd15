#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mogi/search.hpp"

namespace mogi {

bool dominates(const std::vector<double> &a, const std::vector<double> &b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: objective arity mismatch");
    bool strict = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

std::vector<std::vector<int>> fast_nondominated_sort(
    const std::vector<std::vector<double>> &points) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> dominated(n);  // indices each point dominates
    std::vector<int> dom_count(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominated[i].push_back(j);
                ++dom_count[j];
            } else if (dominates(points[j], points[i])) {
                dominated[j].push_back(i);
                ++dom_count[i];
            }
        }
    }
    std::vector<std::vector<int>> fronts;
    std::vector<int> current;
    for (int i = 0; i < n; ++i)
        if (dom_count[i] == 0) current.push_back(i);
    while (!current.empty()) {
        std::vector<int> next;
        for (int p : current)
            for (int q : dominated[p])
                if (--dom_count[q] == 0) next.push_back(q);
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<std::vector<double>> &points,
                                      const std::vector<int> &front) {
    const size_t k = front.size();
    std::vector<double> dist(k, 0.0);
    if (k == 0) return dist;
    const double inf = std::numeric_limits<double>::infinity();
    const size_t m = points[front[0]].size();
    std::vector<size_t> order(k);
    for (size_t obj = 0; obj < m; ++obj) {
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return points[front[a]][obj] < points[front[b]][obj];
        });
        dist[order[0]] = inf;
        dist[order[k - 1]] = inf;
        const double lo = points[front[order[0]]][obj];
        const double hi = points[front[order[k - 1]]][obj];
        if (hi <= lo) continue;  // zero range: no contribution
        for (size_t r = 1; r + 1 < k; ++r) {
            const double gap = points[front[order[r + 1]]][obj] -
                               points[front[order[r - 1]]][obj];
            dist[order[r]] += gap / (hi - lo);
        }
    }
    return dist;
}

}  // namespace mogi
