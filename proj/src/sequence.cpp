#include "lamseries/sequence.hpp"

#include <cmath>
#include <memory>

namespace lamseries {

std::vector<double> PartialSumSeries::sums(int depth) const {
    const auto vals = base_.prefix(depth);
    std::vector<double> out(vals.size());
    double s = 0.0;
    for (size_t i = 0; i < vals.size(); ++i) {
        s += vals[i];
        out[i] = s;
    }
    return out;
}

namespace seq {

LazySequence theta() {
    return LazySequence([](int) { return 0.0; }, "theta");
}

LazySequence ones() {
    return LazySequence([](int) { return 1.0; }, "e");
}

LazySequence unit(int j) {
    return LazySequence([j](int k) { return k == j ? 1.0 : 0.0; },
                        "unit:" + std::to_string(j));
}

LazySequence harmonic() {
    return LazySequence([](int k) { return 1.0 / static_cast<double>(k + 1); }, "harmonic");
}

LazySequence alternating() {
    return LazySequence([](int k) { return k % 2 == 0 ? 1.0 : -1.0; }, "alternating");
}

LazySequence inverse_square() {
    return LazySequence(
        [](int k) {
            const double d = static_cast<double>(k + 1);
            return 1.0 / (d * d);
        },
        "invsquare");
}

LazySequence ramp() {
    return LazySequence([](int k) { return static_cast<double>(k); }, "ramp");
}

LazySequence from_list(std::vector<double> values, TailRule tail, std::string label) {
    auto data = std::make_shared<const std::vector<double>>(std::move(values));
    auto rule = [data, tail](int k) -> double {
        const auto& v = *data;
        const int m = static_cast<int>(v.size()) - 1;
        if (m < 0) return 0.0;
        if (k <= m) return v[static_cast<size_t>(k)];
        switch (tail) {
        case TailRule::zero: return 0.0;
        case TailRule::repeat: return v[static_cast<size_t>(m)];
        case TailRule::arithmetic: {
            const double d = m >= 1 ? v[static_cast<size_t>(m)] - v[static_cast<size_t>(m - 1)]
                                    : 0.0;
            return v[static_cast<size_t>(m)] + static_cast<double>(k - m) * d;
        }
        case TailRule::geometric: {
            if (m < 1 || v[static_cast<size_t>(m - 1)] == 0.0) return 0.0;
            const double r = v[static_cast<size_t>(m)] / v[static_cast<size_t>(m - 1)];
            return v[static_cast<size_t>(m)] * std::pow(r, k - m);
        }
        }
        return 0.0;
    };
    return LazySequence(std::move(rule), std::move(label));
}

} // namespace seq

} // namespace lamseries
