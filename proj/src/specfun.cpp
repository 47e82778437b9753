#include "lzeta/specfun.hpp"

#include <cmath>
#include <limits>

namespace lzeta {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogSqrt2Pi = 0.91893853320467274178; // log(sqrt(2*pi))

// Lanczos, g = 607/128, 15 coefficients (Godfrey set), ~1e-15 relative
// for Re(z) >= 0.5.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

bool is_nonpositive_integer(cplx s, double tol = 1e-13) {
    if (std::abs(s.imag()) > tol) return false;
    double r = s.real();
    if (r > 0.5) return false;
    return std::abs(r - std::round(r)) <= tol * std::max(1.0, std::abs(r));
}

cplx log_gamma_lanczos(cplx z) {
    // valid for Re(z) >= 0.5
    cplx a(kLanczos[0], 0.0);
    for (int k = 1; k < 15; ++k) a += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
    cplx t = z + (kLanczosG - 0.5);
    return kLogSqrt2Pi + (z - 0.5) * std::log(t) - t + std::log(a);
}

} // namespace

cplx log_gamma(cplx s) {
    if (is_nonpositive_integer(s))
        throw Error(errc::pole, "log_gamma: pole at non-positive integer");
    if (s.real() >= 0.5) return log_gamma_lanczos(s);
    int m = static_cast<int>(std::ceil(0.5 - s.real())) + 1;
    cplx shift(0.0, 0.0);
    for (int j = 0; j < m; ++j) shift += std::log(s + static_cast<double>(j));
    return log_gamma_lanczos(s + static_cast<double>(m)) - shift;
}

cplx gamma(cplx s) {
    if (is_nonpositive_integer(s))
        throw Error(errc::pole, "gamma: pole at non-positive integer");
    if (s.imag() == 0.0) {
        double x = s.real();
        if (x > 0.0 && x < 170.0) return {std::tgamma(x), 0.0};
        if (x < 0.0) {
            // reflection keeps the value real with the right sign
            double r = kPi / (std::sin(kPi * x) * std::tgamma(1.0 - x));
            return {r, 0.0};
        }
    }
    return std::exp(log_gamma(s));
}

namespace {

cplx upper_gamma_series(cplx s, double x) {
    // Gamma(s,x) = Gamma(s) - gamma(s,x),
    // gamma(s,x) = x^s e^-x * sum_m x^m / (s (s+1) ... (s+m))
    cplx term = 1.0 / s;
    cplx sum = term;
    for (int m = 1; m < 10000; ++m) {
        term *= x / (s + static_cast<double>(m));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    cplx lower = std::exp(s * std::log(x) - x) * sum;
    return std::exp(log_gamma(s)) - lower;
}

cplx upper_gamma_cf(cplx s, double x) {
    // Legendre continued fraction, modified Lentz.
    const double tiny = 1e-290;
    cplx b = x + 1.0 - s;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i < 10000; ++i) {
        cplx an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        cplx del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(s * std::log(x) - x) * h;
}

} // namespace

cplx upper_gamma(cplx s, double x) {
    if (!(x > 0.0)) throw Error(errc::config, "upper_gamma: x must be positive");
    if (x > std::abs(s) + 2.0) return upper_gamma_cf(s, x);
    return upper_gamma_series(s, x);
}

namespace detail {

namespace {

// integral_0^inf e^{-z t} t^{a-1} (1+t)^{b-a-1} dt via exp-sinh
// double-exponential quadrature; a > 0, z > 0.
double laplace_kernel_integral(double a, double b, double z) {
    const double h = 0.03125;
    const double p = b - a - 1.0;
    auto node = [&](double u) -> double {
        double su = 0.5 * kPi * std::sinh(u);
        if (su > 690.0) return 0.0; // e^{-z t} has annihilated the tail
        double t = std::exp(su);
        // full log-magnitude including the weight (pi/2) cosh(u) * t
        double expo = -z * t + a * su + p * std::log1p(t) +
                      std::log(0.5 * kPi * std::cosh(u));
        if (expo < -745.0) return 0.0;
        return std::exp(expo);
    };
    double acc = node(0.0);
    for (int dir : {+1, -1}) {
        int idle = 0;
        for (int j = 1; j < 4000; ++j) {
            double v = node(dir * j * h);
            acc += v;
            if (v < 1e-18 * acc) {
                if (++idle >= 3) break;
            } else {
                idle = 0;
            }
        }
    }
    return acc * h;
}

double hyper_u_positive_a(double a, double b, double z) {
    double lg = std::lgamma(a);
    return laplace_kernel_integral(a, b, z) * std::exp(-lg);
}

} // namespace

double hyper_u(double a, double b, double z) {
    if (!(z > 0.0)) throw Error(errc::config, "hyper_u: z must be positive");
    if (a > 0.0) return hyper_u_positive_a(a, b, z);
    // lift a into (0,1] and walk the three-term recurrence back down
    int m = static_cast<int>(std::floor(-a)) + 1;
    double a0 = a + m;
    double u1 = hyper_u_positive_a(a0, b, z);      // U(a0)
    double u2 = hyper_u_positive_a(a0 + 1.0, b, z); // U(a0+1)
    for (int j = 0; j < m; ++j) {
        double aa = a0 - 1.0 - j; // target of this step
        double u0 = (2.0 * aa + 2.0 + z - b) * u1 - (aa + 1.0) * (aa + 2.0 - b) * u2;
        u2 = u1;
        u1 = u0;
    }
    return u1;
}

} // namespace detail

double whittaker_w_scaled(const WhittakerParams& p) {
    if (!(p.z > 0.0)) throw Error(errc::config, "whittaker_w: z must be positive");
    double mu = std::abs(p.mu); // W is even in mu
    double a = mu - p.kappa + 0.5;
    double b = 1.0 + 2.0 * mu;
    double u = detail::hyper_u(a, b, p.z);
    // W = e^{-z/2} z^{mu+1/2} U  =>  scaled = z^{mu+1/2-kappa} U
    return std::exp((mu + 0.5 - p.kappa) * std::log(p.z)) * u;
}

WhittakerValue whittaker_w(const WhittakerParams& p) {
    double scaled = whittaker_w_scaled(p);
    double logpref = -0.5 * p.z + p.kappa * std::log(p.z);
    if (logpref < -708.0) return {0.0, true};
    return {std::exp(logpref) * scaled, false};
}

double meijer_g_2012(const MeijerIndices& idx, double z) {
    if (!(z > 0.0)) throw Error(errc::config, "meijer_g_2012: z must be positive");
    for (double d : {idx.a1 - idx.b1, idx.a1 - idx.b2}) {
        if (d > 0.5 && std::abs(d - std::round(d)) < 1e-12)
            throw Error(errc::invalid_index,
                        "meijer_g_2012: a1 - b_j is a positive integer (pole separation fails)");
    }
    double kappa = 0.5 * (idx.b1 + idx.b2 + 1.0) - idx.a1;
    double mu = 0.5 * (idx.b1 - idx.b2);
    double scaled = whittaker_w_scaled({kappa, mu, z});
    // G = z^{(b1+b2-1)/2} e^{-z/2} W; assemble the prefactor in log space
    double expo = (0.5 * (idx.b1 + idx.b2 - 1.0) + kappa) * std::log(z) - z;
    if (expo < -745.0) return 0.0;
    return std::exp(expo) * scaled;
}

} // namespace lzeta
