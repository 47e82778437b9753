#include "lzeta/lfunc.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "lzeta/errors.hpp"
#include "lzeta/specfun.hpp"
#include "lzeta/zeta.hpp"

namespace lzeta {

using cd = std::complex<double>;

namespace exact {

// Coefficients of the eigenform pipeline reach ~n^{8.5} with interior
// convolution partial sums near n^{11.5}; int128 holds that comfortably up
// to N = 2048 (peak partial sum ~3e37 vs 1.7e38 capacity) but not much
// further, so the derived sequences are capped there.
constexpr std::int64_t kExactCap = 2048;

static void check_cap(std::int64_t N) {
    if (N < 1) throw Error(errc::config, "coefficient count must be positive");
    if (N > kExactCap)
        throw Error(errc::insufficient_coeffs,
                    "exact eigenform pipeline is limited to n <= 2048");
}

std::vector<int128> delta_tau_exact(std::int64_t N) {
    if (N < 1) throw Error(errc::config, "coefficient count must be positive");
    // eta(q)^24 / q: start from the pentagonal-number expansion of
    // prod (1-q^m) and raise it to the 24th power by repeated sparse
    // multiplication.
    const std::int64_t M = N; // need q^0..q^{N-1} of P(q)^24
    std::vector<std::pair<std::int64_t, int>> pent;
    for (std::int64_t m = 1;; ++m) {
        std::int64_t g1 = m * (3 * m - 1) / 2;
        std::int64_t g2 = m * (3 * m + 1) / 2;
        if (g1 >= M && g2 >= M) break;
        int sgn = (m % 2 == 1) ? -1 : 1;
        if (g1 < M) pent.emplace_back(g1, sgn);
        if (g2 < M) pent.emplace_back(g2, sgn);
    }
    std::vector<int128> D(M, 0);
    D[0] = 1;
    std::vector<int128> next(M);
    for (int pw = 0; pw < 24; ++pw) {
        std::copy(D.begin(), D.end(), next.begin());
        for (auto [g, s] : pent)
            for (std::int64_t i = 0; i + g < M; ++i)
                next[i + g] += s * D[i];
        D.swap(next);
    }
    std::vector<int128> tau(static_cast<size_t>(N) + 1, 0);
    for (std::int64_t n = 1; n <= N; ++n) tau[n] = D[n - 1];
    return tau;
}

static std::vector<int128> sigma_pow(std::int64_t N, int e) {
    std::vector<int128> s(static_cast<size_t>(N) + 1, 0);
    for (std::int64_t d = 1; d <= N; ++d) {
        int128 dp = 1;
        for (int i = 0; i < e; ++i) dp *= d;
        for (std::int64_t n = d; n <= N; n += d) s[n] += dp;
    }
    return s;
}

std::vector<int128> eigenform18_exact(std::int64_t N) {
    check_cap(N);
    // E6 * Delta: E6 = 1 - 504 sum sigma_5(m) q^m.
    auto tau = delta_tau_exact(N);
    auto s5 = sigma_pow(N, 5);
    std::vector<int128> a(static_cast<size_t>(N) + 1, 0);
    for (std::int64_t n = 1; n <= N; ++n) {
        int128 acc = tau[n];
        for (std::int64_t m = 1; m < n; ++m) acc -= 504 * s5[m] * tau[n - m];
        a[n] = acc;
    }
    return a;
}

std::vector<int128> dirichlet_mul(const std::vector<int128>& A, const std::vector<int128>& B) {
    std::int64_t N = static_cast<std::int64_t>(A.size()) - 1;
    if (B.size() != A.size()) throw Error(errc::config, "length mismatch in Dirichlet product");
    std::vector<int128> C(A.size(), 0);
    for (std::int64_t i = 1; i <= N; ++i) {
        if (A[i] == 0) continue;
        for (std::int64_t j = 1; i * j <= N; ++j) C[i * j] += A[i] * B[j];
    }
    return C;
}

static std::vector<int128> power_series_coeffs(std::int64_t N, int e) {
    // n -> n^e as Dirichlet coefficients of zeta(s - e)
    std::vector<int128> v(static_cast<size_t>(N) + 1, 0);
    for (std::int64_t n = 1; n <= N; ++n) {
        int128 p = 1;
        for (int i = 0; i < e; ++i) p *= n;
        v[n] = p;
    }
    return v;
}

static std::vector<int128> square_supported(std::int64_t N, int e, bool with_mu) {
    // coefficients of sum_{d} (mu(d)) d^e / (d^2)^s
    CoefficientSeries mu;
    if (with_mu) mu = mobius_sieve(static_cast<std::int64_t>(std::sqrt(double(N))) + 2);
    std::vector<int128> v(static_cast<size_t>(N) + 1, 0);
    for (std::int64_t d = 1; d * d <= N; ++d) {
        int128 p = 1;
        for (int i = 0; i < e; ++i) p *= d;
        if (with_mu) p *= static_cast<int128>(mu.at(d));
        v[d * d] = p;
    }
    return v;
}

std::vector<int128> sk_coeffs_exact(int k, std::int64_t N) {
    check_cap(N);
    if (k != 10) throw Error(errc::unsupported_weight, "only k = 10 is implemented");
    // D(s)/zeta(2s-2k+4) = zeta(s-k+1) zeta(s-k+2) L(f,s) / zeta(2s-2k+4)
    auto c = dirichlet_mul(power_series_coeffs(N, k - 1), power_series_coeffs(N, k - 2));
    c = dirichlet_mul(c, eigenform18_exact(N));
    c = dirichlet_mul(c, square_supported(N, 2 * k - 4, true));
    return c;
}

std::vector<int128> a_series_exact(int k, std::int64_t N) {
    // a = c * [d^{2k-4} at d^2] * [mu(e) e^{2k-1} at e^2]
    auto a = dirichlet_mul(sk_coeffs_exact(k, N), square_supported(N, 2 * k - 4, false));
    a = dirichlet_mul(a, square_supported(N, 2 * k - 1, true));
    return a;
}

} // namespace exact

static CoefficientSeries to_series(const std::vector<int128>& v, double growth) {
    CoefficientSeries s;
    s.growth_exponent = growth;
    s.values.reserve(v.size() - 1);
    for (size_t n = 1; n < v.size(); ++n) s.values.push_back(static_cast<double>(v[n]));
    return s;
}

CoefficientSeries delta_tau(std::int64_t N) {
    return to_series(exact::delta_tau_exact(N), 5.5 + 0.2);
}

// ---- eigenform + functional-equation sign ------------------------------

static cd lambda_smoothed(const EigenformSpec& f, cd s, int sign_override) {
    // Lambda(f,s) = sum a(n) [ (2 pi n)^{-s} G(s, 2 pi n)
    //                          + eps (2 pi n)^{s-w} G(w-s, 2 pi n) ]
    // with G the upper incomplete gamma and w the weight.
    const double w = f.weight;
    const int eps = sign_override ? sign_override : f.sign;
    if (s.real() < 0.5 || w - s.real() < 0.5)
        throw Error(errc::config, "smoothed L evaluation needs 1/2 < Re(s) < weight - 1/2");
    const double l2pi = std::log(2.0 * M_PI);
    cd acc = 0.0;
    double peak = 0.0;
    const std::int64_t nmax = static_cast<std::int64_t>(f.coefficients.values.size());
    for (std::int64_t n = 1; n <= nmax; ++n) {
        const double x = 2.0 * M_PI * static_cast<double>(n);
        const double ln = l2pi + std::log(static_cast<double>(n));
        cd t = std::exp(-s * ln) * upper_gamma(s, x) +
               static_cast<double>(eps) * std::exp((s - w) * ln) * upper_gamma(w - s, x);
        cd term = f.coefficients.at(n) * t;
        acc += term;
        const double m = std::abs(term);
        peak = std::max(peak, m);
        // <= so the exact-zero case (odd sign at the central point) terminates
        if (n > 8 && m <= 1e-19 * std::max(peak, std::abs(acc))) return acc;
    }
    throw Error(errc::insufficient_coeffs, "smoothed L series did not converge within stored coefficients");
}

static int determine_sign(EigenformSpec& f) {
    // Compare a plain partial sum of Lambda at a point of absolute
    // convergence against the two smoothed halves; the sign is whichever
    // +-1 reconciles them.
    const double s0 = 13.0;
    const std::int64_t N = static_cast<std::int64_t>(f.coefficients.values.size());
    double naive = 0.0;
    for (std::int64_t n = N; n >= 1; --n)
        naive += f.coefficients.at(n) * std::pow(static_cast<double>(n), -s0);
    naive *= std::exp(std::lgamma(s0) - s0 * std::log(2.0 * M_PI));

    double A = 0.0, B = 0.0;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(N, 80); ++n) {
        const double x = 2.0 * M_PI * static_cast<double>(n);
        const double a = f.coefficients.at(n);
        A += a * std::exp(-s0 * std::log(x)) * upper_gamma(cd(s0, 0), x).real();
        B += a * std::exp((s0 - f.weight) * std::log(x)) *
             upper_gamma(cd(f.weight - s0, 0), x).real();
    }
    const double r = (naive - A) / B;
    const double eps = std::round(r);
    if (std::abs(eps) != 1.0 || std::abs(r - eps) > 0.05)
        throw Error(errc::nonconvergence, "functional-equation sign did not resolve to +-1");
    return static_cast<int>(eps);
}

EigenformSpec eigenform_2km2(int k, std::int64_t N) {
    if (k != 10) throw Error(errc::unsupported_weight, "only k = 10 is implemented");
    EigenformSpec f;
    f.weight = 2 * k - 2;
    f.coefficients = to_series(exact::eigenform18_exact(N), (f.weight - 1) / 2.0 + 0.2);
    f.sign = 0;
    f.sign = determine_sign(f);
    return f;
}

SKInstance make_sk_instance(int k, double C, std::int64_t ncoeff) {
    if (k < 10 || k % 2 != 0) throw Error(errc::unsupported_weight, "weight must be even and >= 10");
    if (!(C > 0.0) || !std::isfinite(C)) throw Error(errc::config, "normalization must be positive and finite");
    SKInstance inst;
    inst.k = k;
    inst.normalization = C;
    inst.f = eigenform_2km2(k, std::max<std::int64_t>(ncoeff, 400));
    const double res = residue_at_k(inst);
    // (k-1)! / (4^k pi^{k+2}) * Res_{s=k} D
    inst.petersson_scalar =
        std::exp(std::lgamma(static_cast<double>(k)) -
                 k * std::log(4.0) - (k + 2) * std::log(M_PI)) * res;
    return inst;
}

CoefficientSeries sk_petersson_coeffs(const SKInstance& inst, std::int64_t N) {
    if (N > static_cast<std::int64_t>(inst.f.coefficients.values.size()))
        throw Error(errc::insufficient_coeffs, "instance does not hold enough eigenform coefficients");
    auto s = to_series(exact::sk_coeffs_exact(inst.k, N), inst.k - 1 + 0.2);
    for (double& v : s.values) v *= inst.normalization;
    return s;
}

CoefficientSeries a_series(const SKInstance& inst, std::int64_t N) {
    if (N > static_cast<std::int64_t>(inst.f.coefficients.values.size()))
        throw Error(errc::insufficient_coeffs, "instance does not hold enough eigenform coefficients");
    auto s = to_series(exact::a_series_exact(inst.k, N), inst.k - 0.5 + 0.2);
    for (double& v : s.values) v *= inst.normalization;
    return s;
}

cd lambda_completed(const EigenformSpec& f, cd s) { return lambda_smoothed(f, s, 0); }

cd gamma_L_product(const EigenformSpec& f, cd s) {
    return std::exp(s * std::log(2.0 * M_PI)) * lambda_smoothed(f, s, 0);
}

cd eval_Lf(const EigenformSpec& f, cd s) {
    return std::exp(s * std::log(2.0 * M_PI) - log_gamma(s)) * lambda_smoothed(f, s, 0);
}

cd eval_D(const SKInstance& inst, cd s) {
    if (std::abs(s - cd(inst.k, 0)) < 1e-9) throw Error(errc::pole, "D has a simple pole at s = k");
    return inst.normalization * zeta(s - (inst.k - 1.0)) * zeta(s - (inst.k - 2.0)) *
           eval_Lf(inst.f, s);
}

cd gamma_D_product(const SKInstance& inst, cd s) {
    if (std::abs(s - cd(inst.k, 0)) < 1e-9) throw Error(errc::pole, "D has a simple pole at s = k");
    return inst.normalization * zeta(s - (inst.k - 1.0)) * zeta(s - (inst.k - 2.0)) *
           gamma_L_product(inst.f, s);
}

double residue_at_k(const SKInstance& inst) {
    const double z2 = M_PI * M_PI / 6.0;
    return inst.normalization * z2 * eval_Lf(inst.f, cd(inst.k, 0)).real();
}

void write_coeffs_csv(std::ostream& os, const SKInstance& inst, std::int64_t N) {
    auto tau = exact::delta_tau_exact(N);
    auto c = sk_petersson_coeffs(inst, N);
    auto a = a_series(inst, N);
    os << "n,tau,c_n,a_n\n";
    char buf[160];
    for (std::int64_t n = 1; n <= N; ++n) {
        std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g,%.17g\n",
                      static_cast<long long>(n), static_cast<double>(tau[n]),
                      c.at(n), a.at(n));
        os << buf;
    }
}

std::string instance_to_json(const SKInstance& inst) {
    nlohmann::json j;
    j["k"] = inst.k;
    j["weight"] = inst.f.weight;
    j["C"] = inst.normalization;
    j["sign"] = inst.f.sign;
    j["N"] = inst.f.coefficients.values.size();
    return j.dump(2);
}

} // namespace lzeta
