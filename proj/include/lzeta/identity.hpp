#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lzeta/lfunc.hpp"
#include "lzeta/series.hpp"
#include "lzeta/zeta.hpp"

namespace lzeta {

// alpha * beta = 1 exactly; beta is stored as 1/alpha.
struct TransformPair {
    double alpha;
    double beta;
};

/// Validates alpha (rejected below 1e-4, where the tail bounds blow up).
TransformPair transform_pair(double alpha);

// Vertical line Re = abscissa, truncated at |Im| = height, trapezoid step.
struct ContourSpec {
    double abscissa;
    double height;
    double step;
};

ContourSpec default_c_line(int k);   // right of the pole at s = k
ContourSpec default_c1_line(int k);  // in (k-3, k-2), left of the zero poles
ContourSpec default_d1_line(int k);  // in (k, k+1), reflected variable

/// Sum_{n<=N} c_n exp(-4 pi n alpha). The tail past N, estimated from the
/// growth envelope K n^theta, must sit below 1e-12 of the partial sum.
double lambert_lhs(const CoefficientSeries& c, const TransformPair& pair, std::int64_t N);

/// (1/2 pi i) Int_{(c)} Gamma(s) D(s) (4 pi alpha)^{-s} / zeta(2s-2k+4) ds,
/// trapezoid in Im(s); requires abscissa > k.
double mellin_quadrature_lhs(const SKInstance& inst, const TransformPair& pair,
                             const ContourSpec& spec);

/// Same integrand on the shifted line with abscissa in (k-3, k-2); by the
/// residue theorem this equals lhs - R_k - zero_sum, and after reflection it
/// is the Whittaker series V_k.
double c1_line_quadrature(const SKInstance& inst, const TransformPair& pair,
                          const ContourSpec& spec);

/// V_k as the reflected d1-line integral
/// (beta^{2k-2}/pi^{3/2}) (1/2 pi i) Int Gamma(w) Gamma(w-k+2) D(w)
///   (4 pi beta)^{-w} / (Gamma(w-k+1/2) zeta(2w+1-2k)) dw.
double vk_quadrature(const SKInstance& inst, const TransformPair& pair,
                     const ContourSpec& spec);

/// V_k series: (beta^{2k-2}/pi^{3/2}) sum a(n) (4 pi n beta)^{(1-k)/2}
///   W_{k/2,k/2-1}(4 pi n beta) e^{-2 pi n beta}.
double whittaker_series_Vk(const SKInstance& inst, const TransformPair& pair, std::int64_t N);

struct IkComparison {
    double quadrature;
    double closed_form;
};

/// I_k(n, beta) two ways: the d1-line integral of
/// Gamma(w) Gamma(w-k+2) (4 pi n beta)^{-w} / Gamma(w-k+1/2) against the
/// closed form (4 pi n beta)^{(1-k)/2} W_{k/2,k/2-1}(4 pi n beta) e^{-2 pi n beta}.
IkComparison ik_closed_vs_quadrature(std::int64_t n, double beta, int k, const ContourSpec& spec);

/// 0 when petersson_scalar vanishes, else 90 petersson_scalar / (pi^2 alpha^k).
double residue_Rk(const SKInstance& inst, const TransformPair& pair);

struct ZeroSumPartial {
    int bracket;
    double cum;
};

struct ZeroSumResult {
    std::vector<ZeroSumPartial> partials; // cumulative, bracket order
    double value = 0.0;                   // final cumulative value
    double imag_residue = 0.0;            // max |Im| over cumulative sums
    bool asymmetry_warning = false;
};

/// Residues at s = rho/2 + k - 2 over bracketed zeros, conjugates paired
/// inside each step: Gamma(s) D(s) (4 pi alpha)^{-s} / (2 zeta'(rho)).
/// The factor 2 is the chain rule from zeta(2s-2k+4).
ZeroSumResult zero_sum(const SKInstance& inst, const TransformPair& pair,
                       const std::vector<ZetaZero>& zeros,
                       const std::vector<Bracket>& brackets);

struct TruncationInfo {
    std::int64_t n_terms;
    int zero_count;
    double quad_T;
    double quad_step;
};

struct IdentityReport {
    double lhs;
    double v_k;
    double r_k;
    ZeroSumResult zeros;
    double residual;
    TruncationInfo truncations;
};

/// Full identity check: lhs vs V_k + R_k + zero_sum. n_terms = 0 picks the
/// smallest power-of-two term count (from 64) whose tail bounds pass.
IdentityReport verify_main_identity(const SKInstance& inst, const TransformPair& pair,
                                   int zero_count, std::int64_t n_terms = 0);

std::string report_to_json(const IdentityReport& rep);

/// (alpha, alpha^k * lhs) for each alpha; the scaled values approach
/// 90 petersson_scalar / pi^2 as alpha -> 0+.
std::vector<std::pair<double, double>>
asymptotic_sweep(const SKInstance& inst, const std::vector<double>& alphas);

struct HLReport {
    double lhs;
    double rhs;
    std::vector<ZeroSumPartial> partials;
    double imag_residue = 0.0;
};

/// Hardy-Littlewood: sqrt(a) sum mu(n)/n e^{-pi (a/n)^2} - (a <-> b)
/// against -(sqrt(pi)/2 sqrt(b)) sum_rho Gamma((1-rho)/2)/zeta'(rho) (b/sqrt(pi))^rho.
HLReport hl_identity(const TransformPair& pair, int zero_count, std::int64_t n_terms);

/// y^12 sum_{n<=N} tau(n)^2 e^{-4 pi n y}.
double zagier_c0(double y, std::int64_t N);

} // namespace lzeta
