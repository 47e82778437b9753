// Timing comparison between the OpenMP blocked reductions and their serial
// reference paths. Each kernel is run on both paths; the values must agree
// bit-for-bit because the block partials are combined in index order.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "lzeta/identity.hpp"
#include "lzeta/lfunc.hpp"
#include "lzeta/summation.hpp"
#include "lzeta/zeta.hpp"

using clock_type = std::chrono::steady_clock;

static double time_ms(const std::function<double()>& f, double* out) {
    const auto t0 = clock_type::now();
    *out = f();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

static void row(const char* name, const std::function<double()>& par,
                const std::function<double()>& ser) {
    double vp = 0.0, vs = 0.0;
    const double tp = time_ms(par, &vp);
    const double ts = time_ms(ser, &vs);
    std::printf("%-28s parallel %9.2f ms   serial %9.2f ms   speedup %5.2fx   %s\n", name, tp,
                ts, ts / tp, vp == vs ? "bit-equal" : "VALUES DIFFER");
}

int main() {
    using namespace lzeta;
    std::printf("workers: %d\n", detail::resolved_threads());

    // Plain compensated reduction on a long smooth series.
    const std::int64_t N = 50'000'000;
    auto term = [](std::int64_t i) {
        const double x = static_cast<double>(i + 1);
        return std::cos(0.1 * x) / (x * x);
    };
    row("blocked reduction 5e7", [&] { return block_sum(N, term); },
        [&] { return block_sum_serial(N, term); });

    // Vertical-line quadrature of the main integrand on a fine grid.
    auto inst = make_sk_instance(10);
    auto pair = transform_pair(1.0);
    ContourSpec fine{11.5, 45.0, 0.005};
    auto quad = [&](auto&& sum) {
        const std::int64_t M = static_cast<std::int64_t>(fine.height / fine.step);
        const std::complex<double> base(fine.abscissa, 0.0);
        const double l4a = std::log(4.0 * M_PI * pair.alpha);
        double s = sum(M, [&](std::int64_t j) {
            const std::complex<double> w = base + std::complex<double>(0.0, (j + 1) * fine.step);
            const std::complex<double> f =
                gamma_D_product(inst, w) * std::exp(-w * l4a) / zeta(2.0 * w - 14.0);
            return f.real();
        });
        return fine.step / (2.0 * M_PI) * 2.0 * s;
    };
    row("line quadrature 9000 nodes",
        [&] { return quad([](std::int64_t n, auto f) { return block_sum(n, f); }); },
        [&] { return quad([](std::int64_t n, auto f) { return block_sum_serial(n, f); }); });

    // Hardy Z scan of the kind the zero finder runs before bisection.
    auto scan = [&](auto&& sum) {
        return sum(40'000, [](std::int64_t j) { return std::abs(hardy_z(10.0 + j * 0.005)); });
    };
    row("Hardy Z scan 4e4 points",
        [&] { return scan([](std::int64_t n, auto f) { return block_sum(n, f); }); },
        [&] { return scan([](std::int64_t n, auto f) { return block_sum_serial(n, f); }); });

    return 0;
}
