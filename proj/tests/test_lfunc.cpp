#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include <json.hpp>

#include "lzeta/errors.hpp"
#include "lzeta/lfunc.hpp"
#include "lzeta/specfun.hpp"
#include "lzeta/zeta.hpp"

using namespace lzeta;
using cplx = std::complex<double>;

static double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

TEST_CASE("ramanujan tau: known values and multiplicativity") {
    auto tau = delta_tau(100);
    const double known[] = {1,     -24,   252,   -1472,  4830,  -6048,
                            -16744, 84480, -113643, -115920};
    for (int n = 1; n <= 10; ++n) CHECK(tau.at(n) == known[n - 1]);
    // tau(mn) = tau(m) tau(n) for coprime m, n
    CHECK(tau.at(6) == tau.at(2) * tau.at(3));
    CHECK(tau.at(77) == tau.at(7) * tau.at(11));
    // Hecke at p^2: tau(p^2) = tau(p)^2 - p^11
    CHECK(tau.at(4) == tau.at(2) * tau.at(2) - 2048.0);
    CHECK(tau.at(9) == tau.at(3) * tau.at(3) - 177147.0);
}

TEST_CASE("weight-18 eigenform coefficients satisfy hecke relations") {
    auto f = eigenform_2km2(10, 200);
    CHECK(f.weight == 18);
    CHECK(f.coefficients.at(1) == 1.0);
    CHECK(f.coefficients.at(2) == -528.0);
    auto a = [&](std::int64_t n) { return f.coefficients.at(n); };
    CHECK(a(6) == a(2) * a(3));
    CHECK(a(15) == a(3) * a(5));
    // a(p^2) = a(p)^2 - p^17
    CHECK(a(4) == a(2) * a(2) - std::pow(2.0, 17.0));
    CHECK(a(9) == a(3) * a(3) - std::pow(3.0, 17.0));
    CHECK(f.sign == -1);
}

TEST_CASE("unsupported weights are rejected") {
    CHECK_THROWS_AS(eigenform_2km2(11, 50), Error);
    CHECK_THROWS_AS(make_sk_instance(8), Error);
}

TEST_CASE("exact integer pipelines roundtrip under dirichlet convolution") {
    using exact::dirichlet_mul;
    const std::int64_t N = 100;
    auto tau = exact::delta_tau_exact(N);
    auto af = exact::eigenform18_exact(N);
    auto c = exact::sk_coeffs_exact(10, N);
    auto a = exact::a_series_exact(10, N);

    // mobius inverse identity: (mu * 1) = e
    auto muv = mobius_sieve(N);
    std::vector<int128> mu(N + 1), one(N + 1, 1);
    one[0] = 0;
    for (std::int64_t n = 1; n <= N; ++n) mu[n] = static_cast<int128>(muv.at(n));
    mu[0] = 0;
    auto e = dirichlet_mul(mu, one);
    CHECK(e[1] == 1);
    for (std::int64_t n = 2; n <= N; ++n) CHECK(e[n] == 0);

    // a = c * [d^{2k-4} on squares] * [mu(e) e^{2k-1} on squares]; invert the
    // square-supported factors to get c back from a
    std::vector<int128> sq_d(N + 1, 0), sq_mu_inv(N + 1, 0);
    for (std::int64_t d = 1; d * d <= N; ++d) {
        int128 dp = 1;
        for (int i = 0; i < 16; ++i) dp *= d; // d^{2k-4}, k=10
        sq_d[d * d] = dp;
        int128 ep = 1;
        for (int i = 0; i < 19; ++i) ep *= d; // e^{2k-1}
        sq_mu_inv[d * d] = mu[d] * ep;
    }
    // inverses: mu-twisted for sq_d, plain divisor sum for sq_mu_inv
    std::vector<int128> inv_d(N + 1, 0), inv_mu(N + 1, 0);
    for (std::int64_t d = 1; d * d <= N; ++d) {
        int128 dp = 1;
        for (int i = 0; i < 16; ++i) dp *= d;
        inv_d[d * d] = mu[d] * dp;
        int128 ep = 1;
        for (int i = 0; i < 19; ++i) ep *= d;
        inv_mu[d * d] = ep;
    }
    auto back = dirichlet_mul(dirichlet_mul(a, inv_d), inv_mu);
    for (std::int64_t n = 1; n <= N; ++n) {
        CAPTURE(n);
        CHECK(back[n] == c[n]);
    }
}

TEST_CASE("floating coefficient series mirror the exact ones") {
    auto inst = make_sk_instance(10, 1.0, 256);
    auto c = sk_petersson_coeffs(inst, 100);
    auto a = a_series(inst, 100);
    auto ce = exact::sk_coeffs_exact(10, 100);
    auto ae = exact::a_series_exact(10, 100);
    for (std::int64_t n = 1; n <= 100; ++n) {
        CAPTURE(n);
        CHECK(c.at(n) == static_cast<double>(ce[n]));
        CHECK(a.at(n) == static_cast<double>(ae[n]));
    }
    CHECK(c.at(2) == 240.0);
    CHECK(c.at(3) == 21960.0);
    CHECK(c.at(4) == 135424.0);
}

TEST_CASE("coefficient growth matches the ramanujan-petersson envelope") {
    auto inst = make_sk_instance(10, 1.0, 2000);
    auto c = sk_petersson_coeffs(inst, 2000);
    const double slope = c.fitted_slope();
    CHECK(slope > 8.0); // k - 1 = 9 up to log factors
    CHECK(slope < 9.6);
    auto tau = delta_tau(2000);
    CHECK(tau.fitted_slope() > 5.0); // (w-1)/2 = 5.5
    CHECK(tau.fitted_slope() < 6.0);
}

TEST_CASE("L(f, s) against the plain dirichlet series far right") {
    auto f = eigenform_2km2(10, 2000);
    const cplx s(13.0, 0.0);
    cplx direct = 0.0;
    for (std::int64_t n = 2000; n >= 1; --n)
        direct += f.coefficients.at(n) * std::exp(-s * std::log(static_cast<double>(n)));
    CHECK(rel(eval_Lf(f, s), direct) < 1e-9);
    const cplx s2(12.5, 2.0);
    cplx direct2 = 0.0;
    for (std::int64_t n = 2000; n >= 1; --n)
        direct2 += f.coefficients.at(n) * std::exp(-s2 * std::log(static_cast<double>(n)));
    CHECK(rel(eval_Lf(f, s2), direct2) < 1e-8);
}

TEST_CASE("completed L satisfies its functional equation with sign -1") {
    auto f = eigenform_2km2(10, 2000);
    for (cplx s : {cplx(9.0, 2.0), cplx(11.5, 5.0), cplx(7.0, -3.0)}) {
        CAPTURE(s.real());
        CAPTURE(s.imag());
        const cplx lhs = lambda_completed(f, s);
        const cplx rhs = -lambda_completed(f, 18.0 - s);
        CHECK(std::abs(lhs - rhs) < 1e-8 * std::abs(lhs));
    }
    // central point: odd sign forces a zero
    CHECK(std::abs(lambda_completed(f, 9.0)) < 1e-20);
}

TEST_CASE("gamma_L_product avoids the tiny-gamma division") {
    auto f = eigenform_2km2(10, 2000);
    const cplx s(13.0, 4.0);
    CHECK(rel(gamma_L_product(f, s),
              std::exp(s * std::log(2.0 * M_PI)) * lambda_completed(f, s)) < 1e-12);
}

TEST_CASE("D(s) residue at s = k and the petersson normalization") {
    auto inst = make_sk_instance(10);
    const double res = residue_at_k(inst);
    // residue = C zeta(2) L(f, k)
    CHECK(res == doctest::Approx(M_PI * M_PI / 6.0 * eval_Lf(inst.f, 10.0).real())
                     .epsilon(1e-10));
    for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
        CAPTURE(eps);
        const cplx s(10.0 + eps, 0.0);
        CHECK(((s - 10.0) * eval_D(inst, s)).real() ==
              doctest::Approx(res).epsilon(20.0 * eps));
    }
    // petersson_scalar = (k-1)! / (4^k pi^{k+2}) * residue
    const double pref = std::exp(std::lgamma(10.0) - 10.0 * std::log(4.0) -
                                 12.0 * std::log(M_PI));
    CHECK(inst.petersson_scalar == doctest::Approx(pref * res).epsilon(1e-13));
    // scale covariance of the model
    auto twice = make_sk_instance(10, 2.0);
    CHECK(twice.petersson_scalar == doctest::Approx(2.0 * inst.petersson_scalar).epsilon(1e-14));
}

TEST_CASE("gamma_D_product is consistent with eval_D at moderate height") {
    auto inst = make_sk_instance(10);
    for (cplx s : {cplx(11.0, 3.0), cplx(12.5, -6.0), cplx(10.25, 10.0)}) {
        CAPTURE(s.real());
        CAPTURE(s.imag());
        CHECK(rel(gamma_D_product(inst, s), gamma(s) * eval_D(inst, s)) < 1e-9);
    }
}

TEST_CASE("CSV and JSON exports") {
    auto inst = make_sk_instance(10, 1.0, 64);
    std::ostringstream os;
    write_coeffs_csv(os, inst, 5);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "n,tau,c_n,a_n");
    std::getline(is, line);
    CHECK(line == "1,1,1,1");
    std::getline(is, line);
    CHECK(line == "2,-24,240,240");

    auto j = nlohmann::json::parse(instance_to_json(inst));
    CHECK(j["k"] == 10);
    CHECK(j["weight"] == 18);
    CHECK(j["C"] == 1.0);
    CHECK(j["sign"] == -1);
}
