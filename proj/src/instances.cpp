#include "qslice/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "qslice/rng.hpp"

namespace qslice {

namespace {

// Box-Muller on the raw generator stream; avoids the implementation-defined
// std::normal_distribution so instances replay across toolchains.
double draw_normal(std::mt19937_64& rng, double sigma) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return sigma * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace

VrpInstance generate_vrp(const GeneratorConfig& cfg) {
    if (cfg.n < 1 || cfg.A < 1 || cfg.sigma <= 0.0 || cfg.grid_half < 1)
        throw ValidationError("generator config needs n >= 1, A >= 1, sigma > 0");
    const long long capacity =
        static_cast<long long>(2 * cfg.grid_half + 1) * (2 * cfg.grid_half + 1) - 1;
    if (cfg.n > capacity) throw ValidationError("n exceeds the grid capacity");

    VrpInstance inst;
    inst.A = cfg.A;
    inst.coords.emplace_back(0, 0); // depot at the grid center

    auto rng = make_rng(cfg.seed);
    std::set<std::pair<int, int>> used{{0, 0}};
    for (int i = 0; i < cfg.n; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            const int x = std::clamp<long long>(std::llround(draw_normal(rng, cfg.sigma)),
                                                -cfg.grid_half, cfg.grid_half);
            const int y = std::clamp<long long>(std::llround(draw_normal(rng, cfg.sigma)),
                                                -cfg.grid_half, cfg.grid_half);
            if (used.insert({x, y}).second) {
                inst.coords.emplace_back(x, y);
                placed = true;
                break;
            }
        }
        if (!placed) throw ValidationError("could not place a distinct coordinate in 1000 draws");
    }
    return inst;
}

namespace {

Assignment encode_routes(const std::vector<std::vector<int>>& routes, const VrpInstance& inst) {
    const int n = inst.n();
    const int L = n + 1;
    Assignment x(inst.A * L * L, 0);
    for (int a = 0; a < inst.A; ++a)
        for (int s = 0; s < L; ++s) x[vrp_var_index(a, routes[a][s], s, n)] = 1;
    return x;
}

double plan_cost(const std::vector<std::vector<int>>& routes,
                 const std::vector<std::vector<double>>& w, double W, int n) {
    double cost = 0.0;
    for (const auto& route : routes)
        for (int s = 0; s < n; ++s) cost += w[route[s]][route[s + 1]] / W;
    return cost;
}

// Cheapest step embedding of an ordered customer list: wait at the depot,
// then travel the list without returning (every extra move costs >= 0).
double list_cost(const std::vector<int>& list, const std::vector<std::vector<double>>& w,
                 double W) {
    if (list.empty()) return 0.0;
    double cost = w[0][list[0]];
    for (std::size_t i = 0; i + 1 < list.size(); ++i) cost += w[list[i]][list[i + 1]];
    return cost / W;
}

std::vector<int> embed_list(const std::vector<int>& list, int n) {
    std::vector<int> route(n + 1, 0);
    const int start = n + 1 - static_cast<int>(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) route[start + i] = list[i];
    return route;
}

} // namespace

BaselineResult route_enum_optimal(const VrpInstance& inst) {
    const int n = inst.n();
    const int A = inst.A;
    if (n < 1) throw ValidationError("instance has no customers");
    if (n > 8) throw SizeCapError("route enumeration guarded at n <= 8");

    const int L = n + 1;
    double plans = 1.0;
    for (int c = 0; c < n; ++c) plans *= static_cast<double>(A * L - c);
    if (plans > 1e8) throw SizeCapError("route enumeration would exceed 1e8 plans");

    const auto w = inst.distance_matrix();
    const double W = inst.max_distance();

    std::vector<std::vector<int>> routes(A, std::vector<int>(L, 0));
    std::vector<std::vector<int>> best;
    double best_cost = 0.0;
    bool found = false;

    // Place customers 1..n into free (vehicle, step) slots; the depot
    // fills everything else.
    std::vector<std::vector<bool>> taken(A, std::vector<bool>(L, false));
    auto place = [&](auto&& self, int customer) -> void {
        if (customer > n) {
            const double cost = plan_cost(routes, w, W, n);
            if (!found || cost < best_cost) {
                best = routes;
                best_cost = cost;
                found = true;
            }
            return;
        }
        for (int a = 0; a < A; ++a) {
            for (int s = 0; s < L; ++s) {
                if (taken[a][s]) continue;
                taken[a][s] = true;
                routes[a][s] = customer;
                self(self, customer + 1);
                routes[a][s] = 0;
                taken[a][s] = false;
            }
        }
    };
    place(place, 1);

    BaselineResult out;
    out.method = BaselineMethod::RouteEnum;
    out.routes = best;
    out.cost = best_cost;
    out.encoded = encode_routes(best, inst);
    out.qubo_energy = build_vrp_qubo(inst).evaluate(out.encoded);
    return out;
}

BaselineResult heuristic_baseline(const VrpInstance& inst, std::uint64_t seed) {
    (void)seed; // construction is deterministic; the seed is part of the
                // interface for reproducibility bookkeeping
    const int n = inst.n();
    const int A = inst.A;
    if (n < 1) throw ValidationError("instance has no customers");

    const auto w = inst.distance_matrix();
    const double W = inst.max_distance();

    // Greedy assignment: repeatedly extend the (vehicle, customer) pair
    // with the smallest distance from the vehicle's current end (the depot
    // until it moves). Ties resolve to the lower vehicle then customer.
    std::vector<std::vector<int>> lists(A);
    std::vector<int> ends(A, 0);
    std::vector<bool> visited(n + 1, false);
    for (int placed = 0; placed < n; ++placed) {
        int best_a = -1, best_c = -1;
        double best_d = 0.0;
        for (int a = 0; a < A; ++a) {
            if (static_cast<int>(lists[a].size()) >= n + 1) continue;
            for (int c = 1; c <= n; ++c) {
                if (visited[c]) continue;
                const double d = w[ends[a]][c];
                if (best_a < 0 || d < best_d) {
                    best_a = a;
                    best_c = c;
                    best_d = d;
                }
            }
        }
        lists[best_a].push_back(best_c);
        ends[best_a] = best_c;
        visited[best_c] = true;
    }

    // 2-opt within each route: reverse any segment while it improves.
    for (int a = 0; a < A; ++a) {
        auto& list = lists[a];
        bool improved = true;
        while (improved && list.size() >= 2) {
            improved = false;
            for (std::size_t i = 0; i < list.size() && !improved; ++i) {
                for (std::size_t j = i + 1; j < list.size() && !improved; ++j) {
                    std::vector<int> candidate = list;
                    std::reverse(candidate.begin() + i, candidate.begin() + j + 1);
                    if (list_cost(candidate, w, W) + 1e-12 < list_cost(list, w, W)) {
                        list = candidate;
                        improved = true;
                    }
                }
            }
        }
    }

    BaselineResult out;
    out.method = BaselineMethod::NearestNeighbor2Opt;
    out.cost = 0.0;
    for (int a = 0; a < A; ++a) {
        out.routes.push_back(embed_list(lists[a], n));
        out.cost += list_cost(lists[a], w, W);
    }
    out.encoded = encode_routes(out.routes, inst);
    out.qubo_energy = build_vrp_qubo(inst).evaluate(out.encoded);
    return out;
}

double approximation_ratio(double found_energy, double optimal_energy) {
    if (!(optimal_energy > 0.0)) throw DomainError("optimal energy must be positive");
    if (!(found_energy > 0.0)) throw DomainError("found energy must be positive");
    if (found_energy < optimal_energy - 1e-9)
        throw DomainError("found energy is below the optimum");
    return optimal_energy / std::max(found_energy, optimal_energy);
}

} // namespace qslice
