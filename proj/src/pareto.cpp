#include "qslice/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qslice {

namespace {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    bool strictly = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly = true;
    }
    return strictly;
}

} // namespace

std::vector<ObjectiveVector> pareto_front(const std::vector<ObjectiveVector>& points) {
    if (points.empty()) throw ValidationError("pareto_front needs at least one point");
    const std::size_t arity = points[0].size();
    for (const auto& p : points)
        if (p.size() != arity) throw ValidationError("objective vectors must share one arity");

    // Sweep in lexicographic order: a point can only be dominated by one
    // sorted before it, so it is checked against kept points only.
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });

    std::vector<bool> keep(points.size(), false);
    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
        bool dominated = false;
        for (std::size_t k : kept) {
            if (dominates(points[k], points[idx])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            keep[idx] = true;
            kept.push_back(idx);
        }
    }

    std::vector<ObjectiveVector> front;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (keep[i]) front.push_back(points[i]);
    return front;
}

std::size_t knee_point_index(const std::vector<ObjectiveVector>& front) {
    if (front.empty()) throw ValidationError("knee point of an empty front");
    const std::size_t arity = front[0].size();

    ObjectiveVector lo(arity, std::numeric_limits<double>::infinity());
    ObjectiveVector hi(arity, -std::numeric_limits<double>::infinity());
    for (const auto& p : front) {
        for (std::size_t i = 0; i < arity; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }

    std::size_t best = 0;
    double best_norm = std::numeric_limits<double>::infinity();
    for (std::size_t idx = 0; idx < front.size(); ++idx) {
        double norm2 = 0.0;
        for (std::size_t i = 0; i < arity; ++i) {
            const double range = hi[i] - lo[i];
            const double v = range > 0.0 ? (front[idx][i] - lo[i]) / range : 0.0;
            norm2 += v * v;
        }
        if (norm2 < best_norm) {
            best_norm = norm2;
            best = idx;
        }
    }
    return best;
}

} // namespace qslice
