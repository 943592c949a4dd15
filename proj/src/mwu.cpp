#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mogi/stats.hpp"

namespace mogi {

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty sample");
    std::sort(values.begin(), values.end());
    const size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

double u_statistic(const std::vector<double> &a, const std::vector<double> &b) {
    double u = 0.0;
    for (double x : a)
        for (double y : b) {
            if (x > y)
                u += 1.0;
            else if (x == y)
                u += 0.5;
        }
    return u;
}

// p = share of the C(n1+n2, n1) equally likely splits of the combined
// multiset whose U deviates from the null mean at least as far as observed.
double exact_p(const std::vector<double> &a, const std::vector<double> &b,
               double u_obs) {
    const size_t n1 = a.size();
    std::vector<double> all(a);
    all.insert(all.end(), b.begin(), b.end());
    const double center = static_cast<double>(n1) * b.size() / 2.0;
    const double dev = std::fabs(u_obs - center);
    std::vector<char> mask(all.size(), 0);
    std::fill(mask.begin(), mask.begin() + n1, 1);
    std::sort(mask.begin(), mask.end());
    long long total = 0, extreme = 0;
    std::vector<double> xa, xb;
    do {
        xa.clear();
        xb.clear();
        for (size_t i = 0; i < all.size(); ++i)
            (mask[i] ? xa : xb).push_back(all[i]);
        ++total;
        if (std::fabs(u_statistic(xa, xb) - center) >= dev - 1e-9) ++extreme;
    } while (std::next_permutation(mask.begin(), mask.end()));
    return static_cast<double>(extreme) / static_cast<double>(total);
}

double approx_p(const std::vector<double> &a, const std::vector<double> &b,
                double u_obs) {
    const double n1 = static_cast<double>(a.size());
    const double n2 = static_cast<double>(b.size());
    const double n = n1 + n2;
    std::vector<double> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    double tie_sum = 0.0;
    for (size_t i = 0; i < all.size();) {
        size_t j = i;
        while (j < all.size() && all[j] == all[i]) ++j;
        const double t = static_cast<double>(j - i);
        tie_sum += t * t * t - t;
        i = j;
    }
    const double mu = n1 * n2 / 2.0;
    const double var = n1 * n2 / 12.0 * ((n + 1.0) - tie_sum / (n * (n - 1.0)));
    if (var <= 0.0) return 1.0;
    double z = (std::fabs(u_obs - mu) - 0.5) / std::sqrt(var);
    if (z < 0.0) z = 0.0;
    return std::erfc(z / std::sqrt(2.0));
}

}  // namespace

MwuResult mann_whitney_u(const std::vector<double> &a, const std::vector<double> &b,
                         double alpha) {
    if (a.size() < 3 || b.size() < 3)
        throw std::invalid_argument("mann_whitney_u needs >= 3 samples per side");
    const double u = u_statistic(a, b);
    bool degenerate = true;
    for (double v : a)
        if (v != a.front()) degenerate = false;
    for (double v : b)
        if (v != a.front()) degenerate = false;
    if (degenerate) return {u, 1.0, false};

    double p = (a.size() < 8 && b.size() < 8) ? exact_p(a, b, u) : approx_p(a, b, u);
    if (p > 1.0) p = 1.0;
    const bool improved = p < alpha && median(b) < median(a);
    return {u, p, improved};
}

}  // namespace mogi
