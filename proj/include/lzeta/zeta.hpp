#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lzeta/errors.hpp"
#include "lzeta/series.hpp"

namespace lzeta {

/// Riemann zeta by Euler-Maclaurin; term count adapts to |Im(s)|.
/// Reliable for Re(s) >= -6 and |Im(s)| <= 500.
std::complex<double> zeta(std::complex<double> s);

/// Term-wise differentiated Euler-Maclaurin zeta'(s), same domain.
std::complex<double> zeta_derivative(std::complex<double> s);

/// Riemann-Siegel theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
double riemann_siegel_theta(double t);

/// Hardy Z(t) = e^{i theta(t)} zeta(1/2 + it); real on the real axis.
double hardy_z(double t);

// Nontrivial-zero ordinate on the critical line with its sign-change
// certificate [lo, hi]: Z(lo) and Z(hi) have opposite signs.
struct ZetaZero {
    int index;    // 1-based
    double gamma; // ordinate
    double tol;
    double cert_lo;
    double cert_hi;
};

/// First `count` ordinates, refined by bisection of Z to `tol`. The census
/// below the last ordinate is cross-checked against the argument-principle
/// count N(T); a mismatch raises errc::missed_zero.
std::vector<ZetaZero> find_zeros(int count, double tol = 1e-9);

/// Argument-principle zero count N(T) (zeros with 0 < Im(rho) < T).
int zero_count_below(double T);

struct Bracket {
    std::vector<int> members; // zero indices, ascending
    double a0;
};

/// Hardy-Littlewood bracketing: consecutive zeros share a bracket when their
/// gap is below exp(-a0*g1/log g1) + exp(-a0*g2/log g2); closed transitively.
std::vector<Bracket> bracket_zeros(const std::vector<ZetaZero>& zeros, double a0);

/// Moebius mu(1..N) by linear sieve, packaged as a CoefficientSeries.
CoefficientSeries mobius_sieve(std::int64_t N);

struct RieszSum {
    double value;
    bool truncation_warning; // stated tail proxy above 1e-12 of the partial sum
};

/// sum_{n<=N} mu(n)/n * exp(-x/n^2).
RieszSum riesz_sum(double x, std::int64_t N);

/// JSON export: [{"index":1,"gamma":14.134725142,"tol":1e-9}, ...]
std::string zeros_to_json(const std::vector<ZetaZero>& zeros);

} // namespace lzeta
