#include "qslice/brute_force.hpp"

#include <thread>
#include <vector>

namespace qslice {

namespace {

// Lexicographic order on the bit vector (variable 0 first).
bool lex_less(std::uint64_t a, std::uint64_t b, int n) {
    for (int i = 0; i < n; ++i) {
        const unsigned ba = (a >> i) & 1u;
        const unsigned bb = (b >> i) & 1u;
        if (ba != bb) return ba < bb;
    }
    return false;
}

struct ChunkBest {
    double energy = 0.0;
    std::uint64_t mask = 0;
    long long count = 0;
    bool valid = false;
};

ChunkBest scan_range(const CompiledModel& m, std::uint64_t lo, std::uint64_t hi) {
    ChunkBest best;
    for (std::uint64_t z = lo; z < hi; ++z) {
        const double e = m.evaluate_mask(z);
        if (!best.valid || e < best.energy) {
            best = {e, z, 1, true};
        } else if (e == best.energy) {
            ++best.count;
            if (lex_less(z, best.mask, m.num_vars)) best.mask = z;
        }
    }
    return best;
}

} // namespace

BruteForceResult brute_force_min(const CompiledModel& m, int max_vars) {
    if (m.num_vars > max_vars) throw SizeCapError("too many variables for brute force");
    if (m.num_vars > 62) throw SizeCapError("brute force capped at 62 variables");

    const int n = m.num_vars;
    const std::uint64_t total = std::uint64_t(1) << n;

    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (n < 16) workers = 1;
    workers = std::min<unsigned>(workers, 8);

    std::vector<ChunkBest> parts(workers);
    if (workers == 1) {
        parts[0] = scan_range(m, 0, total);
    } else {
        std::vector<std::thread> threads;
        const std::uint64_t chunk = total / workers;
        for (unsigned t = 0; t < workers; ++t) {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = (t + 1 == workers) ? total : lo + chunk;
            threads.emplace_back([&m, lo, hi, t, &parts] { parts[t] = scan_range(m, lo, hi); });
        }
        for (auto& th : threads) th.join();
    }

    // Deterministic merge in chunk order; exact equality is meaningful here
    // because every assignment is evaluated by the same full summation.
    ChunkBest best;
    for (const ChunkBest& p : parts) {
        if (!p.valid) continue;
        if (!best.valid || p.energy < best.energy) {
            best = p;
        } else if (p.energy == best.energy) {
            best.count += p.count;
            if (lex_less(p.mask, best.mask, n)) best.mask = p.mask;
        }
    }

    BruteForceResult out;
    out.energy = best.energy;
    out.argmin = assignment_from_mask(best.mask, n);
    out.degeneracy = best.count;
    return out;
}

BruteForceResult brute_force_min(const QuboModel& m, int max_vars) {
    return brute_force_min(compile(m), max_vars);
}
BruteForceResult brute_force_min(const IsingModel& m, int max_vars) {
    return brute_force_min(compile(m), max_vars);
}
BruteForceResult brute_force_min(const AnyModel& m, int max_vars) {
    return brute_force_min(compile(m), max_vars);
}

} // namespace qslice
