#include "lamseries/weights.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lamseries/errors.hpp"

namespace lamseries {

std::string to_string(TailRule rule) {
    switch (rule) {
    case TailRule::zero: return "zero";
    case TailRule::repeat: return "repeat";
    case TailRule::arithmetic: return "arithmetic";
    case TailRule::geometric: return "geometric";
    }
    return "?";
}

TailRule tail_rule_from_string(const std::string& s) {
    if (s == "zero") return TailRule::zero;
    if (s == "repeat") return TailRule::repeat;
    if (s == "arithmetic") return TailRule::arithmetic;
    if (s == "geometric") return TailRule::geometric;
    throw std::invalid_argument("unknown tail rule: " + s);
}

namespace {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join_numbers(const std::vector<double>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_number(v[i]);
    }
    return out;
}

} // namespace

LambdaWeights::LambdaWeights(Family family, double param, std::vector<double> data,
                             TailRule tail, std::string descriptor)
    : family_(family),
      param_(param),
      data_(std::make_shared<const std::vector<double>>(std::move(data))),
      tail_(tail),
      descriptor_(std::move(descriptor)) {}

LambdaWeights LambdaWeights::cesaro() {
    return LambdaWeights(Family::cesaro, 0.0, {}, TailRule::repeat, "cesaro");
}

LambdaWeights LambdaWeights::power(double alpha) {
    if (!(alpha > 0.0)) throw WeightError("power family requires alpha > 0");
    return LambdaWeights(Family::power, alpha, {}, TailRule::repeat,
                         "power:" + format_number(alpha));
}

LambdaWeights LambdaWeights::geometric(double ratio) {
    if (!(ratio > 1.0)) throw WeightError("geometric family requires ratio > 1");
    return LambdaWeights(Family::geometric, ratio, {}, TailRule::repeat,
                         "geometric:" + format_number(ratio));
}

LambdaWeights LambdaWeights::riesz(std::vector<double> steps, TailRule tail) {
    if (steps.empty()) throw WeightError("riesz family requires at least one step");
    for (double q : steps)
        if (!(q > 0.0)) throw WeightError("riesz steps must be positive");
    if (tail == TailRule::zero) throw WeightError("riesz tail must keep steps positive");
    std::string desc = "riesz:" + join_numbers(steps) + ":tail=" + to_string(tail);
    return LambdaWeights(Family::riesz, 0.0, std::move(steps), tail, std::move(desc));
}

LambdaWeights LambdaWeights::custom(std::vector<double> values, TailRule tail) {
    if (values.empty()) throw WeightError("custom weights require at least one value");
    if (!(values[0] > 0.0)) throw WeightError("custom weights must start positive");
    for (size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1]))
            throw WeightError("custom weights must be strictly increasing");
    if (tail != TailRule::arithmetic && tail != TailRule::geometric)
        throw WeightError("custom weights need an arithmetic or geometric tail");
    if (tail == TailRule::arithmetic && values.size() < 2)
        throw WeightError("arithmetic tail needs two values to fix the last gap");
    if (tail == TailRule::geometric) {
        if (values.size() < 2) throw WeightError("geometric tail needs two values");
        if (!(values.back() / values[values.size() - 2] > 1.0))
            throw WeightError("geometric tail ratio must exceed 1");
    }
    std::string desc = "custom:" + join_numbers(values) + ":tail=" + to_string(tail);
    return LambdaWeights(Family::custom, 0.0, std::move(values), tail, std::move(desc));
}

double LambdaWeights::list_value(int k) const {
    const auto& v = *data_;
    const int m = static_cast<int>(v.size()) - 1;
    if (k <= m) return v[static_cast<size_t>(k)];
    if (tail_ == TailRule::arithmetic) {
        const double g = v[m] - (m >= 1 ? v[m - 1] : 0.0);
        return v[m] + static_cast<double>(k - m) * g;
    }
    // geometric
    const double r = v[m] / v[m - 1];
    return v[m] * std::pow(r, k - m);
}

double LambdaWeights::list_step(int k) const {
    const auto& q = *data_;
    const int m = static_cast<int>(q.size()) - 1;
    if (k <= m) return q[static_cast<size_t>(k)];
    switch (tail_) {
    case TailRule::repeat: return q[m];
    case TailRule::arithmetic: {
        const double d = m >= 1 ? q[m] - q[m - 1] : 0.0;
        const double step = q[m] + static_cast<double>(k - m) * d;
        return step;
    }
    case TailRule::geometric: {
        const double r = m >= 1 ? q[m] / q[m - 1] : 1.0;
        return q[m] * std::pow(r, k - m);
    }
    case TailRule::zero: break;
    }
    return 0.0;
}

double LambdaWeights::value(int k) const {
    if (k < 0) return 0.0;
    switch (family_) {
    case Family::cesaro: return static_cast<double>(k + 1);
    case Family::power: return std::pow(static_cast<double>(k + 1), param_);
    case Family::geometric: return std::pow(param_, static_cast<double>(k + 1));
    case Family::custom: return list_value(k);
    case Family::riesz: {
        double sum = 0.0;
        for (int j = 0; j <= k; ++j) sum += list_step(j);
        return sum;
    }
    }
    return 0.0;
}

double LambdaWeights::gap(int k) const {
    if (k < 0) return 0.0;
    if (family_ == Family::riesz) return list_step(k);
    if (family_ == Family::cesaro) return 1.0;
    return value(k) - value(k - 1);
}

std::vector<double> LambdaWeights::values_prefix(int depth) const {
    std::vector<double> out(static_cast<size_t>(depth) + 1);
    if (family_ == Family::riesz) {
        double sum = 0.0;
        for (int k = 0; k <= depth; ++k) {
            sum += list_step(k);
            out[static_cast<size_t>(k)] = sum;
        }
    } else {
        for (int k = 0; k <= depth; ++k) out[static_cast<size_t>(k)] = value(k);
    }
    return out;
}

std::vector<double> LambdaWeights::gaps_prefix(int depth) const {
    std::vector<double> out(static_cast<size_t>(depth) + 1);
    if (family_ == Family::riesz) {
        for (int k = 0; k <= depth; ++k) out[static_cast<size_t>(k)] = list_step(k);
    } else if (family_ == Family::cesaro) {
        for (int k = 0; k <= depth; ++k) out[static_cast<size_t>(k)] = 1.0;
    } else {
        double prev = 0.0;
        for (int k = 0; k <= depth; ++k) {
            const double v = value(k);
            out[static_cast<size_t>(k)] = v - prev;
            prev = v;
        }
    }
    return out;
}

double LambdaWeights::gap_floor(int k) const {
    return 1e-12 * std::max(1.0, value(k));
}

void LambdaWeights::require_gap(int k) const {
    const double g = gap(k);
    const double floor = gap_floor(k);
    if (!(g >= floor)) throw GapTooSmall(k, g, floor);
}

void LambdaWeights::validate(int depth) const {
    const auto vals = values_prefix(depth);
    double prev = 0.0;
    for (int k = 0; k <= depth; ++k) {
        const double v = vals[static_cast<size_t>(k)];
        if (!std::isfinite(v))
            throw WeightError("weight overflow: lambda_" + std::to_string(k) +
                              " is not finite for " + descriptor_);
        if (!(v > prev))
            throw WeightError("weights not strictly increasing at index " + std::to_string(k) +
                              " for " + descriptor_);
        prev = v;
    }
}

} // namespace lamseries
