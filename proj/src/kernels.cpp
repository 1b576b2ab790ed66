#include "lamseries/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lamseries::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<double> map_index(int count, const std::function<double(int)>& f, Exec exec) {
    std::vector<double> out(static_cast<size_t>(count));
    if (exec == Exec::serial) {
        for (int i = 0; i < count; ++i) out[static_cast<size_t>(i)] = f(i);
        return out;
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < count; ++i) out[static_cast<size_t>(i)] = f(i);
    return out;
}

std::vector<double> inclusive_scan(std::span<const double> v) {
    std::vector<double> out(v.size());
    double s = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        s += v[i];
        out[i] = s;
    }
    return out;
}

std::vector<double> running_abs_max(std::span<const double> v) {
    std::vector<double> out(v.size());
    double m = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        m = std::max(m, std::fabs(v[i]));
        out[i] = m;
    }
    return out;
}

double sum_abs(std::span<const double> v, Exec exec) {
    // Fixed block size keeps the reduction order independent of the thread
    // count, so serial and parallel results are bit-identical.
    constexpr size_t block = 1024;
    const size_t nblocks = (v.size() + block - 1) / block;
    std::vector<double> partial(nblocks, 0.0);
    const auto body = [&](size_t b) {
        const size_t lo = b * block;
        const size_t hi = std::min(v.size(), lo + block);
        double s = 0.0;
        for (size_t i = lo; i < hi; ++i) s += std::fabs(v[i]);
        partial[b] = s;
    };
    if (exec == Exec::serial) {
        for (size_t b = 0; b < nblocks; ++b) body(b);
    } else {
#pragma omp parallel for schedule(static)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b)
            body(static_cast<size_t>(b));
    }
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

std::vector<double> weighted_mean_prefix(std::span<const double> gaps,
                                         std::span<const double> x,
                                         std::span<const double> lambdas) {
    if (gaps.size() != x.size() || x.size() != lambdas.size())
        throw std::invalid_argument("weighted_mean_prefix: span size mismatch");
    std::vector<double> out(x.size());
    double s = 0.0;
    for (size_t n = 0; n < x.size(); ++n) {
        s += gaps[n] * x[n];
        out[n] = s / lambdas[n];
    }
    return out;
}

std::vector<double> materialize_grid(int rows, int cols,
                                     const std::function<double(int, int)>& f, Exec exec) {
    std::vector<double> out(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    const auto row_body = [&](int n) {
        double* dst = out.data() + static_cast<size_t>(n) * static_cast<size_t>(cols);
        for (int k = 0; k < cols; ++k) dst[k] = f(n, k);
    };
    if (exec == Exec::serial) {
        for (int n = 0; n < rows; ++n) row_body(n);
        return out;
    }
#pragma omp parallel for schedule(static)
    for (int n = 0; n < rows; ++n) row_body(n);
    return out;
}

std::vector<double> row_abs_diff_sums(int rows, const std::function<double(int, int)>& entry,
                                      const std::function<int(int)>& upper, int offset,
                                      Exec exec) {
    std::vector<double> out(static_cast<size_t>(rows));
    const auto row_body = [&](int n) {
        const int hi = upper(n) + 1; // include the step down to the zero tail
        double s = 0.0;
        for (int k = 0; k <= hi; ++k) s += std::fabs(entry(n, k) - entry(n, k + offset));
        out[static_cast<size_t>(n)] = s;
    };
    if (exec == Exec::serial) {
        for (int n = 0; n < rows; ++n) row_body(n);
        return out;
    }
#pragma omp parallel for schedule(dynamic, 16)
    for (int n = 0; n < rows; ++n) row_body(n);
    return out;
}

namespace {

// For a fixed N-mask, the best K takes either every k with positive column
// sum or every k with negative column sum; both candidates are evaluated in
// ascending k, matching the exhaustive reference's summation order.
double best_over_k(const std::vector<double>& colsum) {
    double pos = 0.0, neg = 0.0;
    for (double s : colsum) {
        if (s > 0.0) pos += s;
        if (s < 0.0) neg += s;
    }
    return std::max(pos, -neg);
}

double subset_sup_for_mask(std::span<const double> grid, int dim, std::uint32_t nmask) {
    std::vector<double> colsum(static_cast<size_t>(dim), 0.0);
    for (int k = 0; k < dim; ++k) {
        double s = 0.0;
        for (int n = 0; n < dim; ++n)
            if (nmask & (1u << n)) s += grid[static_cast<size_t>(n) * dim + k];
        colsum[static_cast<size_t>(k)] = s;
    }
    return best_over_k(colsum);
}

} // namespace

double subset_double_sup(std::span<const double> grid, int dim, Exec exec) {
    if (dim <= 0) return 0.0;
    if (dim > 25) throw std::invalid_argument("subset_double_sup: dim too large");
    const std::uint32_t nmasks = 1u << dim;
    double best = 0.0;
    if (exec == Exec::serial) {
        for (std::uint32_t m = 1; m < nmasks; ++m)
            best = std::max(best, subset_sup_for_mask(grid, dim, m));
        return best;
    }
#pragma omp parallel for schedule(dynamic, 256) reduction(max : best)
    for (std::int64_t m = 1; m < static_cast<std::int64_t>(nmasks); ++m)
        best = std::max(best, subset_sup_for_mask(grid, dim, static_cast<std::uint32_t>(m)));
    return best;
}

double subset_double_sup_exhaustive(std::span<const double> grid, int dim) {
    if (dim <= 0) return 0.0;
    if (dim > 14) throw std::invalid_argument("subset_double_sup_exhaustive: dim too large");
    const std::uint32_t masks = 1u << dim;
    double best = 0.0;
    for (std::uint32_t nm = 1; nm < masks; ++nm) {
        // column sums for this N, then every K explicitly
        std::vector<double> colsum(static_cast<size_t>(dim), 0.0);
        for (int k = 0; k < dim; ++k) {
            double s = 0.0;
            for (int n = 0; n < dim; ++n)
                if (nm & (1u << n)) s += grid[static_cast<size_t>(n) * dim + k];
            colsum[static_cast<size_t>(k)] = s;
        }
        for (std::uint32_t km = 1; km < masks; ++km) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k)
                if (km & (1u << k)) s += colsum[static_cast<size_t>(k)];
            best = std::max(best, std::fabs(s));
        }
    }
    return best;
}

double lp_subset_sup(std::span<const double> grid, int rows, int dim, double p, Exec exec) {
    if (dim <= 0 || rows <= 0) return 0.0;
    if (dim > 25) throw std::invalid_argument("lp_subset_sup: dim too large");
    const std::uint32_t masks = 1u << dim;
    const auto value_for_mask = [&](std::uint32_t km) {
        double total = 0.0;
        for (int n = 0; n < rows; ++n) {
            const double* row = grid.data() + static_cast<size_t>(n) * dim;
            double s = 0.0;
            for (int k = 0; k < dim; ++k)
                if (km & (1u << k)) s += row[k];
            total += std::pow(std::fabs(s), p);
        }
        return total;
    };
    double best = 0.0;
    if (exec == Exec::serial) {
        for (std::uint32_t km = 1; km < masks; ++km)
            best = std::max(best, value_for_mask(km));
        return best;
    }
#pragma omp parallel for schedule(dynamic, 64) reduction(max : best)
    for (std::int64_t km = 1; km < static_cast<std::int64_t>(masks); ++km)
        best = std::max(best, value_for_mask(static_cast<std::uint32_t>(km)));
    return best;
}

} // namespace lamseries::kernels
