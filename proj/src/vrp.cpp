#include "qslice/vrp.hpp"

#include <cmath>

namespace qslice {

std::vector<std::vector<double>> VrpInstance::distance_matrix() const {
    const int m = num_locations();
    std::vector<std::vector<double>> w(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const double dx = coords[i].first - coords[j].first;
            const double dy = coords[i].second - coords[j].second;
            w[i][j] = w[j][i] = std::hypot(dx, dy);
        }
    }
    return w;
}

double VrpInstance::max_distance() const {
    double W = 0.0;
    const auto w = distance_matrix();
    for (const auto& row : w)
        for (double d : row) W = std::max(W, d);
    return W;
}

QuboModel build_vrp_qubo(const VrpInstance& inst) {
    const int n = inst.n();
    const int A = inst.A;
    if (n < 1 || A < 1) throw ValidationError("VRP instance needs n >= 1 and A >= 1");

    const auto w = inst.distance_matrix();
    const double W = inst.max_distance();
    if (!(W > 0.0)) throw ValidationError("degenerate instance: all locations coincide");

    const int L = n + 1; // locations (incl. depot) = steps per vehicle
    QuboModel q(A * L * L);
    for (int a = 0; a < A; ++a)
        for (int i = 0; i < L; ++i)
            for (int s = 0; s < L; ++s)
                q.set_label(vrp_var_index(a, i, s, n), VarLabel{a, i, s});

    // Transit objective: sum_a sum_{i,j} sum_{s=0}^{n-1} (w_ij/W) x_{a,i,s} x_{a,j,s+1}
    for (int a = 0; a < A; ++a) {
        for (int s = 0; s < n; ++s) {
            for (int i = 0; i < L; ++i) {
                for (int j = 0; j < L; ++j) {
                    if (w[i][j] == 0.0) continue;
                    q.add_quadratic(vrp_var_index(a, i, s, n), vrp_var_index(a, j, s + 1, n),
                                    w[i][j] / W, Tag::objective());
                }
            }
        }
    }

    // Step one-hot per vehicle: sum_s (1 - sum_i x_{a,i,s})^2, tag vehicle(a).
    for (int a = 0; a < A; ++a) {
        const Tag tag = Tag::vehicle(a);
        for (int s = 0; s < L; ++s) {
            q.add_constant(1.0, tag);
            for (int i = 0; i < L; ++i) q.add_linear(vrp_var_index(a, i, s, n), -1.0, tag);
            for (int i = 0; i < L; ++i)
                for (int j = i + 1; j < L; ++j)
                    q.add_quadratic(vrp_var_index(a, i, s, n), vrp_var_index(a, j, s, n), 2.0, tag);
        }
    }

    // Customer visit: sum_{i=1}^{n} (1 - sum_{a,s} x_{a,i,s})^2, tag coupling.
    // The only terms joining different vehicles live here.
    const Tag coupling = Tag::coupling();
    for (int i = 1; i < L; ++i) {
        q.add_constant(1.0, coupling);
        std::vector<int> slots;
        slots.reserve(A * L);
        for (int a = 0; a < A; ++a)
            for (int s = 0; s < L; ++s) slots.push_back(vrp_var_index(a, i, s, n));
        for (int v : slots) q.add_linear(v, -1.0, coupling);
        for (std::size_t u = 0; u < slots.size(); ++u)
            for (std::size_t v = u + 1; v < slots.size(); ++v)
                q.add_quadratic(slots[u], slots[v], 2.0, coupling);
    }

    return q;
}

RouteSolution decode_vrp(const Assignment& x, const VrpInstance& inst) {
    const int n = inst.n();
    const int A = inst.A;
    const int L = n + 1;
    if (static_cast<int>(x.size()) != A * L * L)
        throw DimensionError("assignment length does not match A*(n+1)^2");

    RouteSolution sol;
    sol.step_locations.assign(A, std::vector<std::vector<int>>(L));
    std::vector<int> visit_count(L, 0);

    for (int a = 0; a < A; ++a) {
        for (int s = 0; s < L; ++s) {
            for (int i = 0; i < L; ++i) {
                if (x[vrp_var_index(a, i, s, n)]) {
                    sol.step_locations[a][s].push_back(i);
                    if (i >= 1) ++visit_count[i];
                }
            }
        }
    }

    for (int a = 0; a < A; ++a)
        for (int s = 0; s < L; ++s)
            if (sol.step_locations[a][s].size() != 1)
                sol.violated_constraints.push_back("onehot:a=" + std::to_string(a) +
                                                   ",s=" + std::to_string(s));
    for (int i = 1; i < L; ++i)
        if (visit_count[i] != 1)
            sol.violated_constraints.push_back("visit:i=" + std::to_string(i));

    sol.feasible = sol.violated_constraints.empty();
    return sol;
}

bool feasible_for_slice(const QuboModel& slice_model, const Assignment& x) {
    return std::abs(penalty_energy(slice_model, x)) < 1e-9;
}

} // namespace qslice
