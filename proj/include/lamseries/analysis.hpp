#pragma once

#include <span>

#include "lamseries/verdict.hpp"

namespace lamseries::analysis {

/// Growth classification of a running maximum.
enum class Trend { bounded_looking, growing, inconclusive };

std::string to_string(Trend t);

struct TrendInfo {
    Trend trend = Trend::inconclusive;
    double slope = 0.0;   // log-log fit of the running max over the last half
    bool stabilized = false;
    bool slow_monotone_growth = false;
};

/// Least-squares slope of ln(max) against ln(index) over the last half of the
/// samples (positive values only).
double loglog_slope(std::span<const double> running_max);

/// Classifies the running maximum of |values|: slope > 0.1 with an actual
/// increase reads as growing; |slope| <= 0.1 with the max unchanged over the
/// last quarter reads as bounded-looking; anything else is inconclusive.
TrendInfo classify_running_max(std::span<const double> values, double tol);

/// Does lim values exist, judged from samples values[0..d]? Evidence comes
/// from three dyadic windows W_l = (d/2^{l+1}, d/2^l]: a strict fluctuation
/// pass or geometric fluctuation decay certifies holds; monotone drift with
/// flat window fluctuations, or a growing running maximum, certifies fails.
Verdict limit_exists(std::span<const double> values, double tol);

/// Is lim values = 0? Decay of window maxima certifies holds; a plateau
/// bounded away from zero certifies fails.
Verdict limit_is_zero(std::span<const double> values, double tol);

/// Is sup |values| finite-looking? Wraps classify_running_max into a verdict;
/// slow but persistent monotone growth also reads as fails.
Verdict bounded(std::span<const double> values, double tol);

} // namespace lamseries::analysis
