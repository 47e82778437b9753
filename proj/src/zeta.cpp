#include "lzeta/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "lzeta/specfun.hpp"
#include "lzeta/summation.hpp"

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lzeta {

namespace {

constexpr double kPi = 3.14159265358979323846;

// B_{2j} for j = 1..16
constexpr double kBernoulli2j[17] = {
    0.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0};

constexpr int kEmOrder = 16;

using cd = std::complex<double>;

cd pow_int(double n, cd s) { return std::exp(-s * std::log(n)); } // n^{-s}

// Euler-Maclaurin core; fills *deriv with zeta'(s) when non-null.
cd zeta_em(cd s, cd* deriv) {
    if (std::abs(s - 1.0) < 1e-12) throw Error(errc::pole, "zeta: pole at s = 1");
    const double at = std::abs(s.imag());
    const int N = std::max(16, static_cast<int>(std::ceil(0.55 * at)) + 12);
    const double lnN = std::log(static_cast<double>(N));

    cd sum(0.0, 0.0), dsum(0.0, 0.0);
    for (int n = 1; n < N; ++n) {
        double ln = std::log(static_cast<double>(n));
        cd v = std::exp(-s * ln);
        sum += v;
        if (deriv) dsum += -ln * v;
    }

    cd NmS = std::exp(-s * lnN); // N^{-s}
    cd t1 = NmS * static_cast<double>(N) / (s - 1.0);
    sum += t1;
    if (deriv) dsum += -lnN * t1 - t1 / (s - 1.0);

    cd t2 = 0.5 * NmS;
    sum += t2;
    if (deriv) dsum += -lnN * t2;

    // sum_j B_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1}
    cd poch = s;            // (s)_{2j-1}
    cd dpoch(1.0, 0.0);     // d/ds (s)_{2j-1}
    double fact = 2.0;      // (2j)!
    double Npow = static_cast<double>(N); // N^{-2j+1} accumulator
    for (int j = 1; j <= kEmOrder; ++j) {
        Npow /= static_cast<double>(N) * static_cast<double>(N); // N^{1-2j}
        double coef = kBernoulli2j[j] / fact * Npow;
        cd tj = coef * poch * NmS;
        sum += tj;
        if (deriv) dsum += coef * NmS * (dpoch - poch * lnN);
        // advance to order j+1: multiply by (s+2j-1)(s+2j), fact *= (2j+1)(2j+2)
        cd f1 = s + static_cast<double>(2 * j - 1);
        cd f2 = s + static_cast<double>(2 * j);
        dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
        poch *= f1 * f2;
        fact *= static_cast<double>(2 * j + 1) * static_cast<double>(2 * j + 2);
    }

    if (deriv) *deriv = dsum;
    return sum;
}

} // namespace

cd zeta(cd s) { return zeta_em(s, nullptr); }

cd zeta_derivative(cd s) {
    cd d;
    zeta_em(s, &d);
    return d;
}

double riemann_siegel_theta(double t) {
    return log_gamma(cd(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

double hardy_z(double t) {
    cd rot = std::exp(cd(0.0, riemann_siegel_theta(t)));
    return (rot * zeta(cd(0.5, t))).real();
}

namespace {

// Accumulated argument variation of zeta along the straight segment a -> b,
// refined until each step turns by less than ~1 radian.
double arg_variation(cd a, cd b, cd fa, cd fb, int depth) {
    double d = std::arg(fb / fa);
    if (std::abs(d) < 1.0 || depth > 40) return d;
    cd m = 0.5 * (a + b);
    cd fm = zeta(m);
    return arg_variation(a, m, fa, fm, depth + 1) + arg_variation(m, b, fm, fb, depth + 1);
}

double arg_variation_path(cd a, cd b, int coarse) {
    double total = 0.0;
    cd prev = a;
    cd fprev = zeta(a);
    for (int i = 1; i <= coarse; ++i) {
        cd cur = a + (b - a) * (static_cast<double>(i) / coarse);
        cd fcur = zeta(cur);
        total += arg_variation(prev, cur, fprev, fcur, 0);
        prev = cur;
        fprev = fcur;
    }
    return total;
}

} // namespace

int zero_count_below(double T) {
    if (!(T > 2.0)) return 0;
    // N(T) = theta(T)/pi + 1 + S(T), S(T) = (1/pi) * arg zeta tracked from 3
    // up to 3 + iT and across to 1/2 + iT (arg zeta(3) = 0).
    double s_arg = arg_variation_path(cd(3.0, 0.0), cd(3.0, T), std::max(8, static_cast<int>(T)));
    s_arg += arg_variation_path(cd(3.0, T), cd(0.5, T), 24);
    double n = riemann_siegel_theta(T) / kPi + 1.0 + s_arg / kPi;
    return static_cast<int>(std::lround(n));
}

namespace {

// Riemann-von Mangoldt inverse: T with N(T) approximately n.
double approx_height_of_zero(int n) {
    double T = std::max(12.0, 2.0 * kPi * n / std::log(std::max(3.0, static_cast<double>(n))));
    for (int it = 0; it < 60; ++it) {
        double f = T / (2.0 * kPi) * std::log(T / (2.0 * kPi * std::exp(1.0))) + 0.875 - n;
        double df = std::log(T / (2.0 * kPi)) / (2.0 * kPi);
        T -= f / df;
    }
    return T;
}

struct SignChange {
    double lo, hi, zlo, zhi;
};

std::vector<SignChange> scan_sign_changes(double t0, double t1, double step) {
    const std::int64_t m = static_cast<std::int64_t>(std::ceil((t1 - t0) / step)) + 1;
    std::vector<double> zv(static_cast<std::size_t>(m));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(detail::resolved_threads())
#endif
    for (std::int64_t i = 0; i < m; ++i) zv[static_cast<std::size_t>(i)] = hardy_z(t0 + i * step);
    std::vector<SignChange> out;
    for (std::int64_t i = 0; i + 1 < m; ++i) {
        double za = zv[static_cast<std::size_t>(i)];
        double zb = zv[static_cast<std::size_t>(i + 1)];
        if (za == 0.0) za = hardy_z(t0 + i * step + 1e-7);
        if ((za < 0.0) != (zb < 0.0))
            out.push_back({t0 + i * step, t0 + (i + 1) * step, za, zb});
    }
    return out;
}

// Shrinks [lo, hi] until hi - lo <= tol, keeping the sign change inside; the
// final bracket doubles as the certificate.
double bisect_zero(double& lo, double& hi, double zlo, double tol) {
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double zm = hardy_z(mid);
        if ((zm < 0.0) == (zlo < 0.0)) {
            lo = mid;
            zlo = zm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<ZetaZero> find_zeros(int count, double tol) {
    if (count < 0) throw Error(errc::config, "find_zeros: count must be >= 0");
    if (count == 0) return {};
    double step = 0.125;
    for (int attempt = 0; attempt < 3; ++attempt, step *= 0.5) {
        double t_hi = approx_height_of_zero(count + 2) + 4.0;
        std::vector<SignChange> changes = scan_sign_changes(4.0, t_hi, step);
        while (static_cast<int>(changes.size()) < count + 1) {
            double t_lo = t_hi;
            t_hi += 30.0;
            auto more = scan_sign_changes(t_lo, t_hi, step);
            changes.insert(changes.end(), more.begin(), more.end());
        }
        std::vector<ZetaZero> zeros(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(detail::resolved_threads())
#endif
        for (int i = 0; i < count; ++i) {
            SignChange c = changes[static_cast<std::size_t>(i)];
            double g = bisect_zero(c.lo, c.hi, c.zlo, tol);
            zeros[static_cast<std::size_t>(i)] = {i + 1, g, tol, c.lo, c.hi};
        }
        // Certify completeness: the census below a point separating zero
        // `count` from the next sign change must equal `count`.
        double t_cert = 0.5 * (zeros.back().gamma + changes[static_cast<std::size_t>(count)].lo);
        if (zero_count_below(t_cert) == count) return zeros;
    }
    throw Error(errc::missed_zero, "find_zeros: sign-change census disagrees with N(T)");
}

std::vector<Bracket> bracket_zeros(const std::vector<ZetaZero>& zeros, double a0) {
    if (!(a0 > 0.0)) throw Error(errc::config, "bracket_zeros: A0 must be positive");
    std::vector<Bracket> out;
    auto threshold = [&](double g) { return std::exp(-a0 * g / std::log(g)); };
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        if (!out.empty()) {
            const ZetaZero& prev = zeros[i - 1];
            const ZetaZero& cur = zeros[i];
            if (cur.gamma - prev.gamma < threshold(prev.gamma) + threshold(cur.gamma)) {
                out.back().members.push_back(cur.index);
                continue;
            }
        }
        out.push_back({{zeros[i].index}, a0});
    }
    return out;
}

CoefficientSeries mobius_sieve(std::int64_t N) {
    if (N < 1) throw Error(errc::config, "mobius_sieve: N must be >= 1");
    std::vector<std::int64_t> primes;
    std::vector<std::int8_t> mu(static_cast<std::size_t>(N + 1), 0);
    std::vector<bool> composite(static_cast<std::size_t>(N + 1), false);
    mu[1] = 1;
    for (std::int64_t i = 2; i <= N; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            mu[static_cast<std::size_t>(i)] = -1;
        }
        for (std::int64_t p : primes) {
            if (i * p > N) break;
            composite[static_cast<std::size_t>(i * p)] = true;
            if (i % p == 0) {
                mu[static_cast<std::size_t>(i * p)] = 0;
                break;
            }
            mu[static_cast<std::size_t>(i * p)] = -mu[static_cast<std::size_t>(i)];
        }
    }
    CoefficientSeries cs;
    cs.growth_exponent = 0.0;
    cs.values.resize(static_cast<std::size_t>(N));
    for (std::int64_t n = 1; n <= N; ++n)
        cs.values[static_cast<std::size_t>(n - 1)] = static_cast<double>(mu[static_cast<std::size_t>(n)]);
    return cs;
}

RieszSum riesz_sum(double x, std::int64_t N) {
    if (!(x > 0.0)) throw Error(errc::config, "riesz_sum: x must be positive");
    CoefficientSeries mu = mobius_sieve(N);
    double value = block_sum(N, [&](std::int64_t i) {
        double n = static_cast<double>(i + 1);
        double m = mu.values[static_cast<std::size_t>(i)];
        if (m == 0.0) return 0.0;
        return m / n * std::exp(-x / (n * n));
    });
    double tail_proxy = std::exp(-x / (static_cast<double>(N) * N)) / static_cast<double>(N);
    bool warn = tail_proxy > 1e-12 * std::abs(value);
    return {value, warn};
}

std::string zeros_to_json(const std::vector<ZetaZero>& zeros) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& z : zeros)
        j.push_back({{"index", z.index}, {"gamma", z.gamma}, {"tol", z.tol}});
    return j.dump();
}

} // namespace lzeta
