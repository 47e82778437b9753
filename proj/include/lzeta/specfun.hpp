#pragma once

#include <complex>
#include <cstdint>

#include "lzeta/errors.hpp"

namespace lzeta {

using cplx = std::complex<double>;

/// Principal-branch log Gamma, valid on C minus the non-positive integers.
/// Lanczos for Re(s) >= 0.5, otherwise lifted by the recurrence
/// logGamma(s) = logGamma(s+m) - sum log(s+j).
cplx log_gamma(cplx s);

/// Gamma(s) = exp(log_gamma(s)); negative real axis handled by reflection.
cplx gamma(cplx s);

/// Upper incomplete Gamma(s, x) for complex s with Re(s) > 0 and real x > 0.
/// Series through the lower incomplete function when x is small against |s|,
/// Legendre continued fraction otherwise.
cplx upper_gamma(cplx s, double x);

// Whittaker W_{kappa,mu}(z) on the positive real axis.
struct WhittakerParams {
    double kappa;
    double mu;
    double z; // > 0
};

struct WhittakerValue {
    double value;   // W_{kappa,mu}(z); 0 when underflowed
    bool underflow; // e^{-z/2} z^kappa below the double range
};

WhittakerValue whittaker_w(const WhittakerParams& p);

/// W_{kappa,mu}(z) * e^{z/2} * z^{-kappa}; tends to 1 as z -> infinity and
/// stays representable where W itself underflows.
double whittaker_w_scaled(const WhittakerParams& p);

// Meijer G^{2,0}_{1,2} with upper index a1 and lower indices b1, b2,
// evaluated through its Whittaker closed form.
struct MeijerIndices {
    double a1;
    double b1;
    double b2;
};

double meijer_g_2012(const MeijerIndices& idx, double z);

namespace detail {
/// Confluent hypergeometric U(a, b, z), real parameters, z > 0. Exposed for
/// the unit tests; a may be non-positive (handled by the three-term
/// recurrence in a).
double hyper_u(double a, double b, double z);

/// Trapezoid sum of Gamma(w) Gamma(w-k+2) / Gamma(w-k+1/2) * z^{-w} / (2 pi)
/// over the vertical line Re(w) = abscissa, with every node evaluated in
/// binary128. Needed because for z beyond ~4 pi the integral is e^{-z} small
/// while the nodes are O(z^{-abscissa}); binary64 node rounding then dominates
/// the result. Optionally reports the last node's magnitude (truncation
/// check) and the largest node magnitude (noise-floor estimate).
double ik_line_quadrature_q(int k, std::int64_t n, double beta, double abscissa, double height,
                            double step, double* tail_node = nullptr,
                            double* peak_node = nullptr);
} // namespace detail

} // namespace lzeta
