#include "lamseries/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lamseries/kernels.hpp"

namespace lamseries {

std::string to_string(Conclusion c) {
    switch (c) {
    case Conclusion::holds: return "holds";
    case Conclusion::fails: return "fails";
    case Conclusion::inconclusive: return "inconclusive";
    }
    return "?";
}

Conclusion conclusion_and(Conclusion a, Conclusion b) {
    if (a == Conclusion::fails || b == Conclusion::fails) return Conclusion::fails;
    if (a == Conclusion::inconclusive || b == Conclusion::inconclusive)
        return Conclusion::inconclusive;
    return Conclusion::holds;
}

} // namespace lamseries

namespace lamseries::analysis {

namespace {

// Window fluctuation ratios at or above this read as "flat": no decay, the
// signature of harmonic-type drift. Chosen so that exponents within about
// 0.01 of the divergence boundary stay inconclusive.
constexpr double kFlatRatio = 0.995;
// Geometric decay factor required across consecutive dyadic windows.
constexpr double kDecayRatio = 0.75;
constexpr double kSlopeThreshold = 0.1;

struct Window {
    int lo, hi; // inclusive
};

// W_l = (d/2^{l+1}, d/2^l], l = 0 outermost.
Window dyadic_window(int depth, int level) {
    const int hi = depth >> level;
    const int lo = (depth >> (level + 1)) + 1;
    return {lo, hi};
}

double fluctuation(std::span<const double> v, Window w) {
    double mn = v[static_cast<size_t>(w.lo)], mx = mn;
    for (int i = w.lo + 1; i <= w.hi; ++i) {
        mn = std::min(mn, v[static_cast<size_t>(i)]);
        mx = std::max(mx, v[static_cast<size_t>(i)]);
    }
    return mx - mn;
}

double window_abs_max(std::span<const double> v, Window w) {
    double m = 0.0;
    for (int i = w.lo; i <= w.hi; ++i) m = std::max(m, std::fabs(v[static_cast<size_t>(i)]));
    return m;
}

double window_abs_min(std::span<const double> v, Window w) {
    double m = std::fabs(v[static_cast<size_t>(w.lo)]);
    for (int i = w.lo + 1; i <= w.hi; ++i) m = std::min(m, std::fabs(v[static_cast<size_t>(i)]));
    return m;
}

bool monotone_from(std::span<const double> v, int start) {
    bool up = true, down = true;
    for (size_t i = static_cast<size_t>(start) + 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1]) up = false;
        if (v[i] > v[i - 1]) down = false;
    }
    return up || down;
}

} // namespace

std::string to_string(Trend t) {
    switch (t) {
    case Trend::bounded_looking: return "bounded-looking";
    case Trend::growing: return "growing";
    case Trend::inconclusive: return "inconclusive";
    }
    return "?";
}

double loglog_slope(std::span<const double> running_max) {
    const int d = static_cast<int>(running_max.size()) - 1;
    const int start = std::max(2, d / 2);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int m = start; m <= d; ++m) {
        const double r = running_max[static_cast<size_t>(m)];
        if (!(r > 0.0)) continue;
        const double lx = std::log(static_cast<double>(m));
        const double ly = std::log(r);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return 0.0;
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (n * sxy - sx * sy) / denom;
}

TrendInfo classify_running_max(std::span<const double> values, double tol) {
    TrendInfo info;
    if (values.empty()) return info;
    const int d = static_cast<int>(values.size()) - 1;
    const auto rmax = kernels::running_abs_max(values);
    const double last = rmax.back();
    if (last == 0.0) {
        info.trend = Trend::bounded_looking;
        info.stabilized = true;
        return info;
    }
    if (d < 3) return info;
    info.slope = loglog_slope(rmax);
    const double at_three_quarters = rmax[static_cast<size_t>(d - d / 4)];
    info.stabilized = last - at_three_quarters <= tol * std::max(1.0, last);
    const double at_half = rmax[static_cast<size_t>(d / 2)];

    // Slow persistent growth: the max increases at most steps of the last
    // half and has gained more than 5 percent. Catches logarithmic drift the
    // slope test misses.
    int increases = 0;
    for (int m = d / 2 + 1; m <= d; ++m)
        if (rmax[static_cast<size_t>(m)] > rmax[static_cast<size_t>(m - 1)]) ++increases;
    info.slow_monotone_growth =
        at_half > 0.0 && last > 1.05 * at_half && increases * 2 >= d - d / 2;

    if (info.slope > kSlopeThreshold && last > at_half)
        info.trend = Trend::growing;
    else if (std::fabs(info.slope) <= kSlopeThreshold && info.stabilized)
        info.trend = Trend::bounded_looking;
    else
        info.trend = Trend::inconclusive;
    return info;
}

Verdict limit_exists(std::span<const double> values, double tol) {
    Verdict v;
    const int d = static_cast<int>(values.size()) - 1;
    v.depth = d;
    v.tolerance = tol;
    if (d < 15) {
        v.note = "too few samples for windowed evidence";
        return v;
    }
    const Window w0 = dyadic_window(d, 0), w1 = dyadic_window(d, 1), w2 = dyadic_window(d, 2);
    const double f0 = fluctuation(values, w0);
    const double f1 = fluctuation(values, w1);
    const double f2 = fluctuation(values, w2);
    v.evidence["fluct_w0"] = f0;
    v.evidence["fluct_w1"] = f1;
    v.evidence["fluct_w2"] = f2;

    if (f0 <= tol) {
        v.conclusion = Conclusion::holds;
        v.note = "window fluctuation within tolerance; finite-depth evidence";
        return v;
    }
    if (f0 <= kDecayRatio * f1 && f1 <= kDecayRatio * f2) {
        v.conclusion = Conclusion::holds;
        v.evidence["decay_ratio_01"] = f0 / f1;
        v.evidence["decay_ratio_12"] = f1 / f2;
        v.note = "geometric fluctuation decay across dyadic windows; finite-depth evidence";
        return v;
    }

    // Flat window fluctuations plus one-directional drift: harmonic-type
    // divergence.
    const double drift = values[static_cast<size_t>(d)] - values[static_cast<size_t>(w2.lo)];
    if (f1 > 0.0 && f2 > 0.0 && f0 >= kFlatRatio * f1 && f1 >= kFlatRatio * f2 &&
        monotone_from(values, w2.lo) && std::fabs(drift) > tol) {
        v.conclusion = Conclusion::fails;
        v.evidence["witness_index"] = d;
        v.evidence["drift"] = drift;
        v.evidence["flat_ratio_01"] = f0 / f1;
        v.note = "monotone drift with flat window fluctuations";
        return v;
    }

    const TrendInfo trend = classify_running_max(values, tol);
    v.evidence["slope"] = trend.slope;
    if (trend.trend == Trend::growing) {
        v.conclusion = Conclusion::fails;
        v.evidence["witness_index"] = d;
        v.evidence["running_max"] = kernels::running_abs_max(values).back();
        v.note = "running maximum grows";
        return v;
    }
    v.note = "fluctuations neither small nor decaying; no divergence trend";
    return v;
}

Verdict limit_is_zero(std::span<const double> values, double tol) {
    Verdict v;
    const int d = static_cast<int>(values.size()) - 1;
    v.depth = d;
    v.tolerance = tol;
    if (d < 15) {
        v.note = "too few samples for windowed evidence";
        return v;
    }
    const Window w0 = dyadic_window(d, 0), w1 = dyadic_window(d, 1), w2 = dyadic_window(d, 2);
    const double m0 = window_abs_max(values, w0);
    const double m1 = window_abs_max(values, w1);
    const double m2 = window_abs_max(values, w2);
    v.evidence["max_w0"] = m0;
    v.evidence["max_w1"] = m1;
    v.evidence["max_w2"] = m2;
    if (m0 <= tol) {
        v.conclusion = Conclusion::holds;
        v.note = "window maxima within tolerance; finite-depth evidence";
        return v;
    }
    if (m0 <= kDecayRatio * m1 && m1 <= kDecayRatio * m2) {
        v.conclusion = Conclusion::holds;
        v.evidence["decay_ratio_01"] = m0 / m1;
        v.evidence["decay_ratio_12"] = m1 / m2;
        v.note = "geometric decay of window maxima; finite-depth evidence";
        return v;
    }
    // Plateau bounded away from zero over the last half: values are not
    // heading to 0 at this depth.
    const double lo0 = window_abs_min(values, w0);
    const double lo1 = window_abs_min(values, w1);
    if (lo0 > tol && lo1 > tol && m1 > 0.0 && m2 > 0.0 && m0 >= 0.98 * m1 && m1 >= 0.98 * m2) {
        v.conclusion = Conclusion::fails;
        v.evidence["plateau_min"] = std::min(lo0, lo1);
        v.evidence["witness_index"] = d;
        v.note = "values plateau away from zero";
        return v;
    }
    v.note = "no decay certificate and no plateau";
    return v;
}

Verdict bounded(std::span<const double> values, double tol) {
    Verdict v;
    const int d = static_cast<int>(values.size()) - 1;
    v.depth = d;
    v.tolerance = tol;
    const TrendInfo info = classify_running_max(values, tol);
    v.evidence["slope"] = info.slope;
    v.evidence["stabilized"] = info.stabilized ? 1.0 : 0.0;
    const auto rmax = kernels::running_abs_max(values);
    v.evidence["running_max"] = rmax.empty() ? 0.0 : rmax.back();
    if (info.trend == Trend::growing || info.slow_monotone_growth) {
        v.conclusion = Conclusion::fails;
        v.evidence["witness_index"] = d;
        v.note = info.trend == Trend::growing ? "running maximum grows"
                                              : "slow persistent growth of the running maximum";
        return v;
    }
    if (info.trend == Trend::bounded_looking) {
        v.conclusion = Conclusion::holds;
        v.note = "running maximum stabilized; finite-depth evidence";
        return v;
    }
    v.note = "running maximum neither stabilized nor clearly growing";
    return v;
}

} // namespace lamseries::analysis
