#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "lzeta/errors.hpp"
#include "lzeta/specfun.hpp"

using namespace lzeta;
using cplx = std::complex<double>;

static double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

TEST_CASE("log_gamma on classical exact points") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-15);
    CHECK(std::abs(log_gamma(2.0)) < 1e-15);
    CHECK(log_gamma(0.5).real() == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-15));
    CHECK(log_gamma(10.0).real() == doctest::Approx(std::log(362880.0)).epsilon(1e-15));
}

TEST_CASE("log_gamma against 30-digit reference values") {
    CHECK(rel(log_gamma(cplx(3.5, 2.5)),
              cplx(0.26074613321963192058, 2.9967340228295380367)) < 1e-13);
    CHECK(rel(log_gamma(cplx(0.25, -1.5)),
              cplx(-1.534822507512049175, 1.277469867236724975)) < 1e-13);
}

TEST_CASE("gamma satisfies reflection and duplication") {
    // independent functional-equation oracles, no external constants
    for (cplx s : {cplx(0.3, 0.7), cplx(0.8, -2.0), cplx(0.5, 5.0)}) {
        CAPTURE(s.real());
        CAPTURE(s.imag());
        const cplx refl = gamma(s) * gamma(1.0 - s);
        CHECK(rel(refl, M_PI / std::sin(M_PI * s)) < 1e-12);
        const cplx dup = gamma(s) * gamma(s + 0.5);
        const cplx rhs = std::exp((1.0 - 2.0 * s) * std::log(2.0)) * std::sqrt(M_PI) *
                         gamma(2.0 * s);
        CHECK(rel(dup, rhs) < 1e-12);
    }
}

TEST_CASE("upper incomplete gamma: elementary closed forms and reference") {
    // Gamma(1, x) = e^-x, Gamma(2, x) = (1+x) e^-x
    CHECK(upper_gamma(1.0, 2.3).real() == doctest::Approx(std::exp(-2.3)).epsilon(1e-14));
    CHECK(upper_gamma(2.0, 0.7).real() ==
          doctest::Approx(1.7 * std::exp(-0.7)).epsilon(1e-14));
    CHECK(upper_gamma(0.5, 0.25).real() ==
          doctest::Approx(0.84989183807993112979).epsilon(1e-13));
    CHECK(rel(upper_gamma(cplx(2.5, 1.0), 3.0),
              cplx(0.04993279997232017084, 0.39028553869847739165)) < 1e-12);
    // recurrence Gamma(s+1,x) = s Gamma(s,x) + x^s e^-x
    const cplx s(1.75, 0.5);
    const double x = 1.2;
    const cplx lhs = upper_gamma(s + 1.0, x);
    const cplx rhs = s * upper_gamma(s, x) + std::exp(s * std::log(x) - x);
    CHECK(rel(lhs, rhs) < 1e-13);
}

TEST_CASE("whittaker W elementary cases") {
    // W_{0,1/2}(z) = e^{-z/2}; W_{mu+1/2,mu}(z) = e^{-z/2} z^{mu+1/2}
    CHECK(whittaker_w({0.0, 0.5, 3.0}).value ==
          doctest::Approx(std::exp(-1.5)).epsilon(1e-13));
    CHECK(whittaker_w({1.0, 0.5, 2.5}).value ==
          doctest::Approx(2.5 * std::exp(-1.25)).epsilon(1e-13));
}

TEST_CASE("whittaker W against 30-digit reference values") {
    CHECK(whittaker_w({5.0, 4.0, 10.0}).value ==
          doctest::Approx(307.79487660884259333).epsilon(1e-12));
    CHECK(whittaker_w({6.0, 4.0, 10.0}).value ==
          doctest::Approx(-483.29847481051887497).epsilon(1e-12));
    CHECK(whittaker_w({1.5, 0.25, 2.0}).value ==
          doctest::Approx(0.54600798560251283678).epsilon(1e-12));
}

TEST_CASE("whittaker W satisfies its differential equation") {
    // W'' = (1/4 - kappa/z + (mu^2 - 1/4)/z^2) W, five-point central stencil
    const double kappa = 6.0, mu = 4.0, h = 1e-3;
    for (double z : {7.0, 12.0, 30.0}) {
        CAPTURE(z);
        auto w = [&](double x) { return whittaker_w({kappa, mu, x}).value; };
        const double d2 = (-w(z + 2 * h) + 16 * w(z + h) - 30 * w(z) + 16 * w(z - h) -
                           w(z - 2 * h)) /
                          (12 * h * h);
        const double ode = (0.25 - kappa / z + (mu * mu - 0.25) / (z * z)) * w(z);
        CHECK(d2 == doctest::Approx(ode).epsilon(1e-7));
    }
}

TEST_CASE("scaled whittaker W tends to 1 and survives underflow range") {
    CHECK(whittaker_w_scaled({5.0, 4.0, 600.0}) == doctest::Approx(1.0).epsilon(0.05));
    CHECK(whittaker_w_scaled({6.0, 4.0, 2000.0}) == doctest::Approx(1.0).epsilon(0.02));
    // plain W underflows around z ~ 1500 for kappa=5 but the scaled value stays finite
    auto big = whittaker_w({5.0, 4.0, 1600.0});
    CHECK(big.underflow);
    CHECK(whittaker_w_scaled({5.0, 4.0, 1600.0}) > 0.9);
}

TEST_CASE("confluent U special values") {
    // U(a, a+1, z) = z^-a
    CHECK(detail::hyper_u(0.5, 1.5, 4.0) == doctest::Approx(0.5).epsilon(1e-13));
    // U(0, b, z) = 1
    CHECK(detail::hyper_u(0.0, 3.0, 2.7) == doctest::Approx(1.0).epsilon(1e-14));
    // Kummer recurrence: U(a-1,b,z) = (z + 2a - b) U(a,b,z) - a(1+a-b) U(a+1,b,z)
    const double a = 1.25, b = 0.5, z = 6.0;
    const double lhs = detail::hyper_u(a - 1.0, b, z);
    const double rhs = (z + 2 * a - b) * detail::hyper_u(a, b, z) -
                       a * (1 + a - b) * detail::hyper_u(a + 1.0, b, z);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
}

TEST_CASE("meijer G special case against reference and its line integral") {
    CHECK(meijer_g_2012({0.25, 4.75, -3.25}, 10.0) ==
          doctest::Approx(0.0036589562719842498558).epsilon(1e-12));
    // the k=10 instance case: indices (k-1/2; k-2, 0) at z = 4 pi
    CHECK(meijer_g_2012({-9.5, 0.0, -8.0}, 4.0 * M_PI) ==
          doctest::Approx(1.2671429637798696862e-05).epsilon(1e-12));
    // independent route: binary128 trapezoid over the defining contour
    const double byline = detail::ik_line_quadrature_q(10, 1, 1.0, 10.5, 60.0, 0.05);
    CHECK(byline == doctest::Approx(1.2671429637798696862e-05).epsilon(1e-14));
}

TEST_CASE("pole separation guard on the meijer indices") {
    // a1 pole chain overlapping the b poles is rejected
    CHECK_THROWS_AS(meijer_g_2012({5.0, 5.0, 0.0}, 2.0), Error);
}

TEST_CASE("binary128 line quadrature matches the closed form deep in the tail") {
    // z = 16 pi: the integral is ~1e-20 while the nodes are ~1e-12; binary64
    // node evaluation cannot see the answer at all.
    const double z = 16.0 * M_PI;
    const double closed = z * std::sqrt(z) * std::exp(-z) * whittaker_w_scaled({6.0, 4.0, z});
    const double quad = detail::ik_line_quadrature_q(10, 2, 2.0, 10.5, 80.0, 0.05);
    CHECK(quad == doctest::Approx(closed).epsilon(1e-12));
    CHECK(quad == doctest::Approx(3.8414355951517686853e-20).epsilon(1e-12));
}
