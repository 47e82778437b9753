#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "lzeta/summation.hpp"

using namespace lzeta;

TEST_CASE("kahan accumulator survives an ill-conditioned series") {
    // 1 + 1e-16 added 1e6 times: naive double addition loses every small term.
    Kahan acc;
    acc.add(1.0);
    for (int i = 0; i < 1'000'000; ++i) acc.add(1e-16);
    CHECK(acc.value() == doctest::Approx(1.0 + 1e-10).epsilon(1e-12));

    double naive = 1.0;
    for (int i = 0; i < 1'000'000; ++i) naive += 1e-16;
    CHECK(naive == 1.0); // the failure mode the accumulator exists for
}

TEST_CASE("double-double accumulator recovers the basel sum") {
    DoubleDouble acc;
    const int N = 200000;
    for (int n = N; n >= 1; --n) acc.add(1.0 / (static_cast<double>(n) * n));
    // tail of sum 1/n^2 past N is 1/N - 1/(2N^2) + O(N^-3)
    const double tail = 1.0 / N - 0.5 / (static_cast<double>(N) * N);
    CHECK(acc.value() + tail ==
          doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-14));
}

TEST_CASE("block_sum matches the serial reference bit for bit") {
    auto f = [](std::int64_t i) {
        const double x = static_cast<double>(i + 1);
        return std::sin(x) / (x * std::sqrt(x));
    };
    for (std::int64_t n : {0L, 1L, 1000L, 2048L, 2049L, 300000L}) {
        CAPTURE(n);
        CHECK(block_sum(n, f) == block_sum_serial(n, f));
    }
}

TEST_CASE("block_sum is independent of the worker count") {
    auto f = [](std::int64_t i) { return std::cos(0.01 * static_cast<double>(i)); };
    set_worker_count(1);
    const double one = block_sum(500000, f);
    set_worker_count(4);
    const double four = block_sum(500000, f);
    set_worker_count(0);
    const double all = block_sum(500000, f);
    CHECK(one == four);
    CHECK(one == all);
}

TEST_CASE("extended precision mode tightens the reduction") {
    // alternating series with huge cancellation
    auto f = [](std::int64_t i) {
        const double x = static_cast<double>(i / 2 + 1);
        return (i % 2 == 0 ? 1.0 : -1.0) * x;
    };
    set_precision_mode(PrecisionMode::extended);
    CHECK(block_sum(2'000'000, f) == 0.0);
    set_precision_mode(PrecisionMode::standard);
    CHECK(block_sum(2'000'000, f) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("complex block sum agrees with two real reductions") {
    auto f = [](std::int64_t i) {
        const double x = 0.001 * static_cast<double>(i + 1);
        return std::complex<double>(std::cos(x), std::sin(x)) / x;
    };
    const auto z = block_sum_complex(100000, f);
    const double re = block_sum(100000, [&](std::int64_t i) { return f(i).real(); });
    const double im = block_sum(100000, [&](std::int64_t i) { return f(i).imag(); });
    CHECK(z.real() == doctest::Approx(re).epsilon(1e-15));
    CHECK(z.imag() == doctest::Approx(im).epsilon(1e-15));
}
