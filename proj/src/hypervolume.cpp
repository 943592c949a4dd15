#include <algorithm>
#include <stdexcept>

#include "mogi/stats.hpp"

namespace mogi {

std::vector<std::vector<double>> pareto_front(
    const std::vector<std::vector<double>> &points) {
    std::vector<std::vector<double>> out;
    for (size_t i = 0; i < points.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < points.size() && keep; ++j) {
            if (j == i) continue;
            if (dominates(points[j], points[i])) keep = false;
            if (j < i && points[j] == points[i]) keep = false;  // duplicate collapse
        }
        if (keep) out.push_back(points[i]);
    }
    return out;
}

namespace {

// staircase area for minimization against reference (rx, ry)
double hv2(std::vector<std::pair<double, double>> pts, double rx, double ry) {
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double prev_y = ry;
    for (const auto &[x, y] : pts) {
        if (y >= prev_y) continue;  // dominated in this projection
        area += (rx - x) * (prev_y - y);
        prev_y = y;
    }
    return area;
}

}  // namespace

double hv_exact(const std::vector<std::vector<double>> &points,
                const std::vector<double> &reference) {
    const size_t m = reference.size();
    if (m > 3) throw std::invalid_argument("hv_exact supports at most 3 objectives");
    std::vector<std::vector<double>> pts;
    for (const auto &p : points) {
        if (p.size() != m)
            throw std::invalid_argument("hv_exact: point arity mismatch");
        bool inside = true;
        for (size_t j = 0; j < m; ++j)
            if (p[j] > reference[j]) inside = false;
        if (inside) pts.push_back(p);
    }
    if (m == 0 || pts.empty()) return 0.0;
    if (m == 1) {
        double lo = pts[0][0];
        for (const auto &p : pts) lo = std::min(lo, p[0]);
        return reference[0] - lo;
    }
    if (m == 2) {
        std::vector<std::pair<double, double>> flat;
        for (const auto &p : pts) flat.push_back({p[0], p[1]});
        return hv2(std::move(flat), reference[0], reference[1]);
    }
    // m == 3: sweep slabs between consecutive distinct third coordinates
    std::vector<double> zs;
    for (const auto &p : pts) zs.push_back(p[2]);
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    double vol = 0.0;
    for (size_t k = 0; k < zs.size(); ++k) {
        const double top = k + 1 < zs.size() ? zs[k + 1] : reference[2];
        const double height = top - zs[k];
        if (height <= 0.0) continue;
        std::vector<std::pair<double, double>> slice;
        for (const auto &p : pts)
            if (p[2] <= zs[k]) slice.push_back({p[0], p[1]});
        vol += hv2(std::move(slice), reference[0], reference[1]) * height;
    }
    return vol;
}

HVResult hypervolume(const std::vector<std::vector<double>> &points,
                     const std::vector<double> &reference,
                     const std::vector<std::pair<double, double>> &bounds) {
    if (bounds.size() != reference.size())
        throw std::invalid_argument("hypervolume: bounds arity mismatch");
    HVResult r;
    r.reference = reference;
    r.bounds = bounds;
    r.raw = hv_exact(points, reference);
    std::vector<size_t> dims;
    for (size_t j = 0; j < bounds.size(); ++j)
        if (bounds[j].second > bounds[j].first) dims.push_back(j);
    if (dims.empty()) return r;  // no observed spread anywhere
    std::vector<std::vector<double>> mapped;
    for (const auto &p : points) {
        if (p.size() != reference.size())
            throw std::invalid_argument("hypervolume: point arity mismatch");
        std::vector<double> q(dims.size());
        for (size_t d = 0; d < dims.size(); ++d) {
            const auto [lo, hi] = bounds[dims[d]];
            q[d] = (p[dims[d]] - lo) / (hi - lo);
        }
        mapped.push_back(std::move(q));
    }
    r.normalized = hv_exact(mapped, std::vector<double>(dims.size(), 1.0));
    return r;
}

HVResult hypervolume(const std::vector<std::vector<double>> &points,
                     const std::vector<double> &reference) {
    std::vector<std::pair<double, double>> bounds;
    for (size_t j = 0; j < reference.size(); ++j) {
        double lo = reference[j];
        for (const auto &p : points) {
            bool inside = true;
            for (size_t k = 0; k < reference.size(); ++k)
                if (p[k] > reference[k]) inside = false;
            if (inside) lo = std::min(lo, p[j]);
        }
        bounds.push_back({lo, reference[j]});
    }
    return hypervolume(points, reference, bounds);
}

}  // namespace mogi
