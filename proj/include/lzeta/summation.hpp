#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lzeta {

enum class PrecisionMode { standard, extended };

void set_precision_mode(PrecisionMode mode);
PrecisionMode precision_mode();

void set_worker_count(int n); // 0 = library default (all logical cores)
int worker_count();

// Neumaier-compensated accumulator.
struct Kahan {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

// Double-word accumulator (error-free two-sum at every step).
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;
    void add(double x) {
        double s = hi + x;
        double bb = s - hi;
        double err = (hi - (s - bb)) + (x - bb);
        hi = s;
        lo += err;
        // renormalize
        double t = hi + lo;
        lo = lo - (t - hi);
        hi = t;
    }
    double value() const { return hi + lo; }
};

namespace detail {

inline int resolved_threads() {
#ifdef _OPENMP
    int w = worker_count();
    return w > 0 ? w : omp_get_max_threads();
#else
    return 1;
#endif
}

constexpr std::int64_t kBlock = 2048;

template <class Acc, class F>
double blocked_reduce(std::int64_t n, F&& f) {
    if (n <= 0) return 0.0;
    const std::int64_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(static_cast<std::size_t>(nblocks));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(detail::resolved_threads())
#endif
    for (std::int64_t b = 0; b < nblocks; ++b) {
        Acc acc;
        const std::int64_t lo = b * kBlock;
        const std::int64_t hi = std::min(n, lo + kBlock);
        for (std::int64_t i = lo; i < hi; ++i) acc.add(f(i));
        partial[static_cast<std::size_t>(b)] = acc.value();
    }
    // Serial in-order combine: the result is independent of the thread count.
    Acc total;
    for (double p : partial) total.add(p);
    return total.value();
}

template <class Acc, class F>
double blocked_reduce_serial(std::int64_t n, F&& f) {
    if (n <= 0) return 0.0;
    const std::int64_t nblocks = (n + kBlock - 1) / kBlock;
    Acc total;
    for (std::int64_t b = 0; b < nblocks; ++b) {
        Acc acc;
        const std::int64_t lo = b * kBlock;
        const std::int64_t hi = std::min(n, lo + kBlock);
        for (std::int64_t i = lo; i < hi; ++i) acc.add(f(i));
        total.add(acc.value());
    }
    return total.value();
}

} // namespace detail

// Deterministic compensated sum of f(0..n-1). OpenMP-parallel over fixed-size
// blocks; block partials are combined serially in index order, so the result
// does not depend on the number of threads.
template <class F>
double block_sum(std::int64_t n, F&& f) {
    if (precision_mode() == PrecisionMode::extended)
        return detail::blocked_reduce<DoubleDouble>(n, std::forward<F>(f));
    return detail::blocked_reduce<Kahan>(n, std::forward<F>(f));
}

// Serial reference path for the same reduction; kept for tests and benchmarks.
template <class F>
double block_sum_serial(std::int64_t n, F&& f) {
    if (precision_mode() == PrecisionMode::extended)
        return detail::blocked_reduce_serial<DoubleDouble>(n, std::forward<F>(f));
    return detail::blocked_reduce_serial<Kahan>(n, std::forward<F>(f));
}

// Complex variant; evaluates f once per index.
template <class F>
std::complex<double> block_sum_complex(std::int64_t n, F&& f) {
    if (n <= 0) return {0.0, 0.0};
    const std::int64_t nblocks = (n + detail::kBlock - 1) / detail::kBlock;
    std::vector<std::complex<double>> partial(static_cast<std::size_t>(nblocks));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(detail::resolved_threads())
#endif
    for (std::int64_t b = 0; b < nblocks; ++b) {
        Kahan re, im;
        const std::int64_t lo = b * detail::kBlock;
        const std::int64_t hi = std::min(n, lo + detail::kBlock);
        for (std::int64_t i = lo; i < hi; ++i) {
            std::complex<double> v = f(i);
            re.add(v.real());
            im.add(v.imag());
        }
        partial[static_cast<std::size_t>(b)] = {re.value(), im.value()};
    }
    Kahan re, im;
    for (auto& p : partial) {
        re.add(p.real());
        im.add(p.imag());
    }
    return {re.value(), im.value()};
}

} // namespace lzeta
