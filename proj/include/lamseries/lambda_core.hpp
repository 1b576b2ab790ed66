#pragma once

#include <span>

#include "lamseries/analysis.hpp"
#include "lamseries/kernels.hpp"
#include "lamseries/sequence.hpp"
#include "lamseries/weights.hpp"

namespace lamseries {

/// Entry (n,k) of the weighted-mean triangle: gap(k)/lambda(n) for k <= n,
/// zero above the diagonal. Rows sum to one.
double lambda_matrix_entry(const LambdaWeights& w, int n, int k);

/// y_n = (1/lambda_n) * sum_{k<=n} gap(k) x_k. The returned sequence carries
/// a prefix evaluator with O(depth) total cost; pointwise evaluation uses the
/// same accumulation order, so both agree bit for bit.
LazySequence lambda_transform(const LambdaWeights& w, const LazySequence& x);

/// x_k = (lambda_k y_k - lambda_{k-1} y_{k-1}) / gap(k). Throws GapTooSmall
/// when a gap falls below the conditioning floor. Inverts lambda_transform
/// exactly in exact arithmetic.
LazySequence inverse_lambda_transform(const LambdaWeights& w, const LazySequence& y);

/// S_0 = 0, S_n = (1/lambda_n) * sum_{k=1..n} lambda_{k-1} (x_k - x_{k-1});
/// equals x_n - (lambda transform of x)_n identically.
LazySequence s_operator(const LambdaWeights& w, const LazySequence& x);

struct NormEstimate {
    double value = 0.0;
    analysis::Trend trend = analysis::Trend::inconclusive;
    double slope = 0.0;
};

/// Truncated bs-norm in the lambda domain: max over m <= depth of
/// |sum_{n<=m} (lambda transform of x)_n|, with a growth classification of
/// the running maximum.
NormEstimate bs_lambda_norm(const LambdaWeights& w, const LazySequence& x, int depth);

/// Plain truncated bs-norm: max over m <= depth of |sum_{n<=m} s_n|.
double bs_norm(const LazySequence& s, int depth);
double bs_norm(std::span<const double> values);

} // namespace lamseries
