// Binary128 evaluation path for the gamma-ratio vertical-line integral.
//
// On the (k, k+1) line the integrand sits at z^{-d} scale while the integral
// itself is e^{-z} small; for z beyond ~4 pi the gap exceeds what binary64
// node values can resolve, so the nodes here are computed in __float128 with
// a Stirling log-gamma (argument lifted until |w| is large enough that the
// divergent tail of the series bottoms out below 1e-33).

#include <quadmath.h>

#include <cmath>
#include <cstdint>

#include "lzeta/errors.hpp"
#include "lzeta/specfun.hpp"

namespace lzeta::detail {

namespace {

using q = __float128;
using cq = __complex128;

const q kPi = strtoflt128("3.141592653589793238462643383279502884197", nullptr);
const q kHalfLog2Pi = strtoflt128("0.9189385332046727417803297364056176398614", nullptr);

// B_{2n} / (2n (2n-1)), n = 1..16
const q kStirling[] = {
    strtoflt128("0.08333333333333333333333333333333333333333", nullptr),
    strtoflt128("-0.002777777777777777777777777777777777777778", nullptr),
    strtoflt128("0.0007936507936507936507936507936507936507937", nullptr),
    strtoflt128("-0.0005952380952380952380952380952380952380952", nullptr),
    strtoflt128("0.0008417508417508417508417508417508417508418", nullptr),
    strtoflt128("-0.001917526917526917526917526917526917526918", nullptr),
    strtoflt128("0.00641025641025641025641025641025641025641", nullptr),
    strtoflt128("-0.02955065359477124183006535947712418300654", nullptr),
    strtoflt128("0.1796443723688305731649384900158893966944", nullptr),
    strtoflt128("-1.392432216905901116427432216905901116427", nullptr),
    strtoflt128("13.40286404416839199447895100069013112491", nullptr),
    strtoflt128("-156.8482846260020173063651324520889738281", nullptr),
    strtoflt128("2193.103333333333333333333333333333333333", nullptr),
    strtoflt128("-36108.77125372498935717326521924223073648", nullptr),
    strtoflt128("691472.2688513130671083952507756734675533", nullptr),
    strtoflt128("-15238221.53940741619228336495888678051866", nullptr),
};

cq make_cq(q re, q im) {
    cq z;
    __real__ z = re;
    __imag__ z = im;
    return z;
}

q abs2(cq z) { return __real__ z * __real__ z + __imag__ z * __imag__ z; }

// Stirling series with recurrence lift to |w| >= 28 (Re(w) > 0 assumed; every
// caller here sits right of the imaginary axis).
cq lgamma_stirling(cq w) {
    cq shift = make_cq(0, 0);
    while (abs2(w) < static_cast<q>(784)) {
        shift = shift + clogq(w);
        w = w + make_cq(1, 0);
    }
    const cq lw = clogq(w);
    cq acc = (w - make_cq(static_cast<q>(0.5), 0)) * lw - w + make_cq(kHalfLog2Pi, 0);
    const cq w2 = w * w;
    cq p = w; // w^{2n-1}
    for (const q b : kStirling) {
        acc = acc + make_cq(b, 0) / p;
        p = p * w2;
    }
    return acc - shift;
}

} // namespace

double ik_line_quadrature_q(int k, std::int64_t n, double beta, double abscissa, double height,
                            double step, double* tail_node, double* peak_node) {
    // z = 4 pi n beta formed in binary128: a double-rounded z perturbs every
    // node by ~|w| * 1e-16 relative, which is exactly the floor being avoided.
    const q lz = logq(static_cast<q>(4) * kPi * static_cast<q>(n) * static_cast<q>(beta));
    const std::int64_t M = static_cast<std::int64_t>(std::llround(height / step));
    const q hq = static_cast<q>(step);
    // The grid must be uniform in exact arithmetic: rounding j*step per node
    // in binary64 perturbs the abscissas quasi-randomly at ~1e-16*t, which the
    // oscillating integrand turns into an error near eps64 * (largest node).
    auto node = [&](std::int64_t j) -> cq {
        const cq w = make_cq(static_cast<q>(abscissa), static_cast<q>(j) * hq);
        const cq g = lgamma_stirling(w) + lgamma_stirling(w - make_cq(k - 2, 0)) -
                     lgamma_stirling(w - make_cq(static_cast<q>(k) - static_cast<q>(0.5), 0)) - w * lz;
        return cexpq(g);
    };
    q sum = 0;
    q peak = 0;
    for (std::int64_t j = M; j >= 1; --j) { // ascending magnitude: small terms first
        const cq f = node(j);
        sum = sum + __real__ f;
        peak = fmaxq(peak, cabsq(f));
    }
    const cq f0 = node(0);
    peak = fmaxq(peak, cabsq(f0));
    const q value = (static_cast<q>(step) / (static_cast<q>(2) * static_cast<q>(M_PI))) *
                    (__real__ f0 + static_cast<q>(2) * sum);
    if (tail_node) *tail_node = static_cast<double>(cabsq(node(M)));
    if (peak_node) *peak_node = static_cast<double>(peak);
    return static_cast<double>(value);
}

} // namespace lzeta::detail
