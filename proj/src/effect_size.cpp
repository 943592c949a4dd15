#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mogi/stats.hpp"

namespace mogi {

EffectResult vargha_delaney_a(const std::vector<double> &a,
                              const std::vector<double> &b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("vargha_delaney_a needs non-empty samples");
    const size_t n1 = a.size(), n2 = b.size();
    struct Tagged {
        double v;
        bool from_a;
    };
    std::vector<Tagged> all;
    all.reserve(n1 + n2);
    for (double v : a) all.push_back({v, true});
    for (double v : b) all.push_back({v, false});
    std::stable_sort(all.begin(), all.end(),
                     [](const Tagged &x, const Tagged &y) { return x.v < y.v; });
    double rank_sum_a = 0.0;
    for (size_t i = 0; i < all.size();) {
        size_t j = i;
        while (j < all.size() && all[j].v == all[i].v) ++j;
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (size_t k = i; k < j; ++k)
            if (all[k].from_a) rank_sum_a += midrank;
        i = j;
    }
    const double a_measure =
        (rank_sum_a - n1 * (n1 + 1.0) / 2.0) / (static_cast<double>(n1) * n2);
    const double d = std::fabs(a_measure - 0.5);
    EffectResult r;
    r.a_measure = a_measure;
    r.label = d < 0.06 ? "N" : d < 0.14 ? "S" : d < 0.21 ? "M" : "L";
    return r;
}

}  // namespace mogi
