#include "qslice/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qslice/rng.hpp"

namespace qslice {

namespace {

class Evaluator {
public:
    Evaluator(const ObjectiveFn& f, MinimizeResult& result, int max_evals)
        : f_(f), result_(result), max_evals_(max_evals) {}

    bool exhausted() const { return result_.evals >= max_evals_; }
    bool aborted() const { return result_.aborted; }

    double operator()(const std::vector<double>& x) {
        const double v = f_(std::span<const double>(x), result_.evals);
        result_.history.push_back({x, v});
        if (!std::isfinite(v)) {
            result_.aborted = true;
        } else if (result_.best_eval < 0 || v < result_.f_best) {
            result_.f_best = v;
            result_.x_best = x;
            result_.best_eval = result_.evals;
        }
        ++result_.evals;
        return v;
    }

private:
    const ObjectiveFn& f_;
    MinimizeResult& result_;
    int max_evals_;
};

MinimizeResult nelder_mead(const ObjectiveFn& f, std::vector<double> x0,
                           const MinimizeOptions& opt) {
    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    const int dim = static_cast<int>(x0.size());
    MinimizeResult result;
    Evaluator eval(f, result, opt.max_evals);

    std::vector<std::vector<double>> xs;
    std::vector<double> fs;
    xs.push_back(x0);
    fs.push_back(eval(x0));
    for (int i = 0; i < dim && !eval.exhausted() && !eval.aborted(); ++i) {
        std::vector<double> v = x0;
        v[i] += opt.init_step;
        xs.push_back(v);
        fs.push_back(eval(v));
    }
    if (dim == 0 || eval.aborted() || static_cast<int>(xs.size()) < dim + 1) {
        result.converged = (dim == 0) && !eval.aborted();
        return result;
    }

    std::vector<int> order(dim + 1);
    int steps = 0;
    while (!eval.exhausted() && !eval.aborted()) {
        for (int i = 0; i <= dim; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return fs[a] < fs[b]; });

        const double spread = fs[order[dim]] - fs[order[0]];
        if (spread < opt.tol) {
            result.converged = true;
            break;
        }

        // Incumbent refresh counters the drift a noisy objective causes.
        if (opt.reeval_interval > 0 && steps > 0 && steps % opt.reeval_interval == 0) {
            fs[order[0]] = eval(xs[order[0]]);
            if (eval.exhausted() || eval.aborted()) break;
        }
        ++steps;

        std::vector<double> centroid(dim, 0.0);
        for (int i = 0; i < dim; ++i)
            for (int d = 0; d < dim; ++d) centroid[d] += xs[order[i]][d];
        for (int d = 0; d < dim; ++d) centroid[d] /= dim;

        const int worst = order[dim];
        auto blend = [&](double t) {
            std::vector<double> x(dim);
            for (int d = 0; d < dim; ++d) x[d] = centroid[d] + t * (centroid[d] - xs[worst][d]);
            return x;
        };

        const auto xr = blend(kReflect);
        const double fr = eval(xr);
        if (eval.aborted() || eval.exhausted()) break;

        if (fr < fs[order[0]]) {
            const auto xe = blend(kExpand);
            const double fe = eval(xe);
            if (eval.aborted()) break;
            if (fe < fr) {
                xs[worst] = xe;
                fs[worst] = fe;
            } else {
                xs[worst] = xr;
                fs[worst] = fr;
            }
        } else if (fr < fs[order[dim - 1]]) {
            xs[worst] = xr;
            fs[worst] = fr;
        } else {
            const bool outside = fr < fs[worst];
            std::vector<double> xc(dim);
            const auto& toward = outside ? xr : xs[worst];
            for (int d = 0; d < dim; ++d)
                xc[d] = centroid[d] + kContract * (toward[d] - centroid[d]);
            const double fc = eval(xc);
            if (eval.aborted()) break;
            if (fc < std::min(fr, fs[worst])) {
                xs[worst] = xc;
                fs[worst] = fc;
            } else {
                for (int i = 1; i <= dim && !eval.exhausted() && !eval.aborted(); ++i) {
                    const int idx = order[i];
                    for (int d = 0; d < dim; ++d)
                        xs[idx][d] = xs[order[0]][d] + kShrink * (xs[idx][d] - xs[order[0]][d]);
                    fs[idx] = eval(xs[idx]);
                }
            }
        }
    }
    return result;
}

MinimizeResult spsa(const ObjectiveFn& f, std::vector<double> x0, const MinimizeOptions& opt) {
    // Standard Spall gain schedules.
    const double a = 0.2, c = 0.1, alpha = 0.602, gamma = 0.101;
    const double A = 0.1 * std::max(1, opt.max_evals / 2);

    const int dim = static_cast<int>(x0.size());
    MinimizeResult result;
    Evaluator eval(f, result, opt.max_evals);
    auto rng = make_rng(opt.seed);

    std::vector<double> x = x0;
    eval(x);
    int k = 0;
    while (!eval.exhausted() && !eval.aborted()) {
        const double ak = a / std::pow(k + 1 + A, alpha);
        const double ck = c / std::pow(k + 1, gamma);
        std::vector<double> delta(dim);
        for (int d = 0; d < dim; ++d) delta[d] = (rng() & 1u) ? 1.0 : -1.0;

        std::vector<double> xp = x, xm = x;
        for (int d = 0; d < dim; ++d) {
            xp[d] += ck * delta[d];
            xm[d] -= ck * delta[d];
        }
        const double fp = eval(xp);
        if (eval.exhausted() || eval.aborted()) break;
        const double fm = eval(xm);
        if (eval.aborted()) break;

        for (int d = 0; d < dim; ++d) x[d] -= ak * (fp - fm) / (2.0 * ck * delta[d]);
        ++k;
    }
    return result;
}

} // namespace

MinimizeResult minimize(const ObjectiveFn& f, std::vector<double> x0,
                        const MinimizeOptions& options) {
    if (options.max_evals < 1) throw ValidationError("max_evals must be >= 1");
    switch (options.kind) {
        case OptimizerKind::NelderMead: return nelder_mead(f, std::move(x0), options);
        case OptimizerKind::Spsa: return spsa(f, std::move(x0), options);
    }
    throw ValidationError("unknown optimizer kind");
}

std::vector<double> angles_mod_2pi(const std::vector<double>& angles) {
    std::vector<double> out(angles.size());
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        double a = std::fmod(angles[i], two_pi);
        if (a < 0.0) a += two_pi;
        out[i] = a;
    }
    return out;
}

} // namespace qslice
