#include "lamseries/lambda_core.hpp"

#include <cmath>
#include <stdexcept>

#include "lamseries/errors.hpp"

namespace lamseries {

double lambda_matrix_entry(const LambdaWeights& w, int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("lambda_matrix_entry: negative index");
    if (k > n) return 0.0;
    return w.gap(k) / w.value(n);
}

LazySequence lambda_transform(const LambdaWeights& w, const LazySequence& x) {
    auto rule = [w, x](int n) {
        double s = 0.0;
        for (int k = 0; k <= n; ++k) s += w.gap(k) * x.value(k);
        return s / w.value(n);
    };
    auto prefix = [w, x](int depth) {
        const auto xs = x.prefix(depth);
        const auto gaps = w.gaps_prefix(depth);
        const auto lambdas = w.values_prefix(depth);
        return kernels::weighted_mean_prefix(gaps, xs, lambdas);
    };
    return LazySequence(std::move(rule), std::move(prefix), "transform(" + x.label() + ")");
}

LazySequence inverse_lambda_transform(const LambdaWeights& w, const LazySequence& y) {
    auto rule = [w, y](int k) {
        w.require_gap(k);
        return (w.value(k) * y.value(k) - w.value(k - 1) * y.value(k - 1)) / w.gap(k);
    };
    auto prefix = [w, y](int depth) {
        const auto ys = y.prefix(depth);
        const auto vals = w.values_prefix(depth);
        const auto gaps = w.gaps_prefix(depth);
        std::vector<double> out(ys.size());
        double prev_val = 0.0, prev_y = 0.0;
        for (int k = 0; k <= depth; ++k) {
            const double g = gaps[static_cast<size_t>(k)];
            if (!(g >= 1e-12 * std::max(1.0, vals[static_cast<size_t>(k)])))
                throw GapTooSmall(k, g, 1e-12 * std::max(1.0, vals[static_cast<size_t>(k)]));
            out[static_cast<size_t>(k)] =
                (vals[static_cast<size_t>(k)] * ys[static_cast<size_t>(k)] -
                 prev_val * prev_y) /
                g;
            prev_val = vals[static_cast<size_t>(k)];
            prev_y = ys[static_cast<size_t>(k)];
        }
        return out;
    };
    return LazySequence(std::move(rule), std::move(prefix), "inverse(" + y.label() + ")");
}

LazySequence s_operator(const LambdaWeights& w, const LazySequence& x) {
    auto rule = [w, x](int n) {
        if (n <= 0) return 0.0;
        double s = 0.0;
        for (int k = 1; k <= n; ++k) s += w.value(k - 1) * (x.value(k) - x.value(k - 1));
        return s / w.value(n);
    };
    auto prefix = [w, x](int depth) {
        const auto xs = x.prefix(depth);
        const auto vals = w.values_prefix(depth);
        std::vector<double> out(xs.size());
        out[0] = 0.0;
        double s = 0.0;
        for (int n = 1; n <= depth; ++n) {
            s += vals[static_cast<size_t>(n - 1)] *
                 (xs[static_cast<size_t>(n)] - xs[static_cast<size_t>(n - 1)]);
            out[static_cast<size_t>(n)] = s / vals[static_cast<size_t>(n)];
        }
        return out;
    };
    return LazySequence(std::move(rule), std::move(prefix), "s(" + x.label() + ")");
}

NormEstimate bs_lambda_norm(const LambdaWeights& w, const LazySequence& x, int depth) {
    if (depth < 1) throw std::invalid_argument("bs_lambda_norm: depth must be >= 1");
    const auto transformed = lambda_transform(w, x).prefix(depth);
    const auto sums = kernels::inclusive_scan(transformed);
    const auto info = analysis::classify_running_max(sums, 1e-8);
    NormEstimate est;
    est.value = kernels::running_abs_max(sums).back();
    est.trend = info.trend;
    est.slope = info.slope;
    return est;
}

double bs_norm(std::span<const double> values) {
    const auto sums = kernels::inclusive_scan(values);
    return sums.empty() ? 0.0 : kernels::running_abs_max(sums).back();
}

double bs_norm(const LazySequence& s, int depth) {
    const auto vals = s.prefix(depth);
    return bs_norm(vals);
}

} // namespace lamseries
