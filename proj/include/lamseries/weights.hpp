#pragma once

#include <memory>
#include <string>
#include <vector>

namespace lamseries {

/// How a finite list of values continues past its last element.
enum class TailRule {
    zero,       // 0, 0, 0, ...
    repeat,     // last, last, ...
    arithmetic, // continue with the last difference
    geometric,  // continue with the last ratio
};

std::string to_string(TailRule rule);
TailRule tail_rule_from_string(const std::string& s);

/// A strictly increasing, positive, divergent weight sequence and its gaps.
///
/// Conventions: value(-1) == 0, so gap(0) == value(0). Builtin families use
/// closed forms; riesz keeps its step sequence q so that gap(k) == q_k holds
/// exactly, not as a recomputed difference.
class LambdaWeights {
public:
    static LambdaWeights cesaro();                 // value(k) = k+1
    static LambdaWeights power(double alpha);      // value(k) = (k+1)^alpha, alpha > 0
    static LambdaWeights geometric(double ratio);  // value(k) = ratio^(k+1), ratio > 1
    static LambdaWeights riesz(std::vector<double> steps, TailRule tail);
    static LambdaWeights custom(std::vector<double> values, TailRule tail);

    double value(int k) const; // lambda_k; 0 for k < 0
    double gap(int k) const;   // lambda_k - lambda_{k-1}; 0 for k < 0

    /// values 0..depth in one O(depth) pass.
    std::vector<double> values_prefix(int depth) const;
    /// gaps 0..depth in one O(depth) pass.
    std::vector<double> gaps_prefix(int depth) const;

    /// Conditioning floor below which divisions by gap(k) are refused.
    double gap_floor(int k) const;
    /// Throws GapTooSmall if gap(k) < gap_floor(k).
    void require_gap(int k) const;

    /// Checks strict increase, positivity and finiteness up to `depth`.
    /// Throws WeightError on the first violation (e.g. overflow of a
    /// geometric family at large depth).
    void validate(int depth) const;

    /// Canonical descriptor, e.g. "cesaro", "power:2", "riesz:1,2:tail=repeat".
    const std::string& descriptor() const { return descriptor_; }

private:
    enum class Family { cesaro, power, geometric, riesz, custom };

    LambdaWeights(Family family, double param, std::vector<double> data, TailRule tail,
                  std::string descriptor);

    double list_value(int k) const; // riesz/custom lookup with tail continuation
    double list_step(int k) const;  // riesz step q_k with tail continuation

    Family family_;
    double param_ = 0.0;
    std::shared_ptr<const std::vector<double>> data_; // q for riesz, values for custom
    TailRule tail_ = TailRule::repeat;
    std::string descriptor_;
};

} // namespace lamseries
