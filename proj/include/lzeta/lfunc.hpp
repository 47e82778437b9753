#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lzeta/series.hpp"

namespace lzeta {

using int128 = __int128;

/// Ramanujan tau(1..N), exact integers from the 24th power of the
/// pentagonal-number series.
CoefficientSeries delta_tau(std::int64_t N);

// Normalized Hecke eigenform of even weight with integer coefficients.
struct EigenformSpec {
    int weight;                    // 2k-2
    CoefficientSeries coefficients; // a_f(1..N), a_f(1)=1
    int sign;                      // functional-equation sign, +1 or -1
};

/// Weight-(2k-2) eigenform backing the degree-2 instance. Only k=10 is wired
/// up (dim S_18 = 1, the form is E6 * Delta); other weights raise
/// errc::unsupported_weight. The sign is determined numerically.
EigenformSpec eigenform_2km2(int k, std::int64_t N);

// Concrete instance: weight-k degree-2 cusp-form pair modelled through the
// weight-(2k-2) eigenform, with one free overall scale C.
struct SKInstance {
    int k;
    EigenformSpec f;
    double normalization = 1.0; // C
    double petersson_scalar = 0.0;
};

/// Builds the instance and derives petersson_scalar from the residue of D at
/// s = k (see residue_at_k).
SKInstance make_sk_instance(int k, double C = 1.0, std::int64_t ncoeff = 2000);

/// c_n with sum c_n n^-s = D(s)/zeta(2s-2k+4),
/// D(s) = C zeta(s-k+1) zeta(s-k+2) L(f,s).
CoefficientSeries sk_petersson_coeffs(const SKInstance& inst, std::int64_t N);

/// a(n) with sum a(n) n^-s = D(s)/zeta(2s+1-2k), i.e.
/// a(n) = sum_{d^2 e^2 m = n} d^{2k-4} mu(e) e^{2k-1} c_m.
CoefficientSeries a_series(const SKInstance& inst, std::int64_t N);

/// L(f,s) by the incomplete-gamma-smoothed split of the completed function.
/// Relative accuracy degrades like e^{pi |Im s| / 2} * eps; good to ~1e-8 for
/// |Im s| up to roughly 25 in binary64. For residue-type sums use
/// gamma_L_product, whose absolute error stays bounded at any height.
std::complex<double> eval_Lf(const EigenformSpec& f, std::complex<double> s);

/// Gamma(s) L(f,s) = (2 pi)^s Lambda(f,s); no division by the tiny Gamma.
std::complex<double> gamma_L_product(const EigenformSpec& f, std::complex<double> s);

/// Completed Lambda(f,s) = (2 pi)^{-s} Gamma(s) L(f,s) via the smoothed sum.
std::complex<double> lambda_completed(const EigenformSpec& f, std::complex<double> s);

/// D(s) = C zeta(s-k+1) zeta(s-k+2) L(f,s); poles at s=k (and the removable
/// point s=k-1 is not special-cased).
std::complex<double> eval_D(const SKInstance& inst, std::complex<double> s);

/// Gamma(s) D(s), assembled through gamma_L_product.
std::complex<double> gamma_D_product(const SKInstance& inst, std::complex<double> s);

/// Res_{s=k} D(s) = C zeta(2) L(f,k).
double residue_at_k(const SKInstance& inst);

/// CSV export with columns n,tau,c_n,a_n.
void write_coeffs_csv(std::ostream& os, const SKInstance& inst, std::int64_t N);

/// JSON instance description: {k, weight, C, sign, N}.
std::string instance_to_json(const SKInstance& inst);

namespace exact {
// Integer pipelines backing the public series; exposed for the exact
// convolution tests. N is capped (int128 overflow headroom) at 2048 for the
// eigenform-derived sequences.
std::vector<int128> delta_tau_exact(std::int64_t N);
std::vector<int128> eigenform18_exact(std::int64_t N);
std::vector<int128> sk_coeffs_exact(int k, std::int64_t N);   // C = 1
std::vector<int128> a_series_exact(int k, std::int64_t N);    // C = 1
std::vector<int128> dirichlet_mul(const std::vector<int128>& A, const std::vector<int128>& B);
} // namespace exact

} // namespace lzeta
