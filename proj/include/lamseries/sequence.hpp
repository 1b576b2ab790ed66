#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lamseries/weights.hpp"

namespace lamseries {

/// An index-to-scalar rule for a sequence x in w. Pure and deterministic:
/// value(k) must give bit-identical results on repeated evaluation, and
/// value(k) == 0 for k < 0.
///
/// A sequence may carry a bulk evaluator producing values 0..depth in one
/// pass; it must agree with pointwise evaluation bit-for-bit. Derived
/// sequences (transforms) use it to keep materialization O(depth).
class LazySequence {
public:
    using Rule = std::function<double(int)>;
    using PrefixRule = std::function<std::vector<double>(int)>;

    LazySequence() : rule_([](int) { return 0.0; }) {}
    explicit LazySequence(Rule rule, std::string label = {})
        : rule_(std::move(rule)), label_(std::move(label)) {}
    LazySequence(Rule rule, PrefixRule prefix, std::string label = {})
        : rule_(std::move(rule)), prefix_(std::move(prefix)), label_(std::move(label)) {}

    double value(int k) const { return k < 0 ? 0.0 : rule_(k); }

    /// Values 0..depth.
    std::vector<double> prefix(int depth) const {
        if (prefix_) return prefix_(depth);
        std::vector<double> out(static_cast<size_t>(depth) + 1);
        for (int k = 0; k <= depth; ++k) out[static_cast<size_t>(k)] = rule_(k);
        return out;
    }

    const std::string& label() const { return label_; }

private:
    Rule rule_;
    PrefixRule prefix_;
    std::string label_;
};

/// Partial sums sum(m) = x_0 + ... + x_m of a base sequence.
class PartialSumSeries {
public:
    explicit PartialSumSeries(LazySequence base) : base_(std::move(base)) {}

    const LazySequence& base() const { return base_; }

    double sum(int m) const {
        if (m < 0) return 0.0;
        double s = 0.0;
        for (int n = 0; n <= m; ++n) s += base_.value(n);
        return s;
    }

    /// sums 0..depth in one pass.
    std::vector<double> sums(int depth) const;

private:
    LazySequence base_;
};

namespace seq {

LazySequence theta();          // 0, 0, 0, ...
LazySequence ones();           // 1, 1, 1, ...
LazySequence unit(int j);      // e^(j)
LazySequence harmonic();       // 1/(k+1)
LazySequence alternating();    // (-1)^k
LazySequence inverse_square(); // 1/(k+1)^2
LazySequence ramp();           // 0, 1, 2, ...
LazySequence from_list(std::vector<double> values, TailRule tail, std::string label = {});

} // namespace seq

} // namespace lamseries
