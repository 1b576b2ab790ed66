#pragma once

#include <functional>
#include <span>
#include <vector>

namespace lamseries::kernels {

/// Execution policy for the data-parallel kernels. `serial` is the reference
/// path kept for testing; `parallel` uses OpenMP when compiled in. Both paths
/// produce bit-identical results: parallel loops only ever write disjoint
/// elements or reduce in a fixed block order.
enum class Exec { serial, parallel };

/// out[i] = f(i) for i in [0, count).
std::vector<double> map_index(int count, const std::function<double(int)>& f,
                              Exec exec = Exec::parallel);

/// Inclusive prefix sums (serial scan).
std::vector<double> inclusive_scan(std::span<const double> v);

/// out[i] = max_{j<=i} |v[j]|.
std::vector<double> running_abs_max(std::span<const double> v);

/// Sum of |v[i]| with a fixed-block two-stage reduction, deterministic for
/// any thread count.
double sum_abs(std::span<const double> v, Exec exec = Exec::parallel);

/// Weighted-mean materialization: y[n] = (sum_{k<=n} gaps[k]*x[k]) / lambdas[n].
/// All spans must have equal length.
std::vector<double> weighted_mean_prefix(std::span<const double> gaps,
                                         std::span<const double> x,
                                         std::span<const double> lambdas);

/// Row-major grid D[n*cols + k] = f(n, k).
std::vector<double> materialize_grid(int rows, int cols,
                                     const std::function<double(int, int)>& f,
                                     Exec exec = Exec::parallel);

/// out[n] = sum_{k=0}^{upper(n)} |entry(n,k) - entry(n,k+offset)|, offset in {-1,+1}.
/// Entries outside [0, upper(n)] evaluate through `entry` as given (callers
/// encode the zero pattern there); the sum itself runs one index past upper(n)
/// so the trailing difference against the zero tail is included.
std::vector<double> row_abs_diff_sums(int rows, const std::function<double(int, int)>& entry,
                                      const std::function<int(int)>& upper, int offset,
                                      Exec exec = Exec::parallel);

/// Exact supremum over nonempty subsets N, K of {0..dim-1} of
/// |sum_{n in N} sum_{k in K} D[n*dim+k]|. Enumerates N and maximizes over K
/// in closed form (positive/negative parts).
double subset_double_sup(std::span<const double> grid, int dim, Exec exec = Exec::parallel);

/// Brute-force reference for subset_double_sup: enumerates both subsets.
/// Cost 4^dim; testing and benchmarking only.
double subset_double_sup_exhaustive(std::span<const double> grid, int dim);

/// sup over nonempty K subset of {0..dim-1} of sum_{n<rows} |sum_{k in K} D[n*dim+k]|^p.
double lp_subset_sup(std::span<const double> grid, int rows, int dim, double p,
                     Exec exec = Exec::parallel);

/// Number of OpenMP threads the parallel path would use (1 when built
/// without OpenMP).
int max_threads();

} // namespace lamseries::kernels
