#include "lzeta/identity.hpp"

#include <cmath>
#include <complex>
#include <functional>

#include <json.hpp>

#include "lzeta/errors.hpp"
#include "lzeta/specfun.hpp"
#include "lzeta/summation.hpp"

namespace lzeta {

using cd = std::complex<double>;

TransformPair transform_pair(double alpha) {
    if (!(alpha >= 1e-4) || !std::isfinite(alpha))
        throw Error(errc::config, "alpha must be finite and >= 1e-4 (tail bounds blow up below)");
    return TransformPair{alpha, 1.0 / alpha};
}

ContourSpec default_c_line(int k) { return {k + 1.5, 45.0, 0.05}; }
ContourSpec default_c1_line(int k) { return {k - 2.25, 45.0, 0.05}; }
ContourSpec default_d1_line(int k) { return {k + 0.5, 45.0, 0.05}; }

// ---- series sides -------------------------------------------------------

static double growth_scale(const CoefficientSeries& c) {
    double K = 0.0;
    for (std::size_t i = 0; i < c.values.size(); ++i) {
        double n = static_cast<double>(i + 1);
        K = std::max(K, std::abs(c.values[i]) / std::pow(n, c.growth_exponent));
    }
    return K;
}

double lambert_lhs(const CoefficientSeries& c, const TransformPair& pair, std::int64_t N) {
    if (N < 1 || N > static_cast<std::int64_t>(c.values.size()))
        throw Error(errc::config, "term count outside stored coefficient range");
    const double a4 = 4.0 * M_PI * pair.alpha;
    const double partial =
        block_sum(N, [&](std::int64_t i) { return c.values[i] * std::exp(-a4 * (i + 1)); });
    // geometric-envelope tail: |c_n| <= K n^theta
    const double K = growth_scale(c);
    const double th = c.growth_exponent;
    const double n1 = static_cast<double>(N + 1);
    const double ratio = std::exp(-a4) * std::pow((n1 + 1.0) / n1, th);
    double tail = K * std::pow(n1, th) * std::exp(-a4 * n1);
    tail = (ratio < 1.0) ? tail / (1.0 - ratio) : HUGE_VAL;
    if (tail > 1e-12 * std::abs(partial))
        throw Error(errc::truncation, "lambert series tail bound exceeds 1e-12 of the partial sum");
    return partial;
}

double whittaker_series_Vk(const SKInstance& inst, const TransformPair& pair, std::int64_t N) {
    const int k = inst.k;
    const double beta = pair.beta;
    auto a = a_series(inst, N);
    const double b4 = 4.0 * M_PI * beta;
    // z^{(1-k)/2} W_{k/2+1,k/2-1}(z) e^{-z/2} = z^{3/2} Wscaled(z) e^{-z};
    // the first Whittaker index is k/2+1, not the k/2 a naive reading of the
    // Meijer reduction suggests (checked against the line-integral oracle)
    const double partial = block_sum(N, [&](std::int64_t i) {
        const double z = b4 * (i + 1);
        const double e = std::exp(-z);
        if (e == 0.0) return 0.0;
        return a.values[i] * z * std::sqrt(z) *
               whittaker_w_scaled({k / 2.0 + 1.0, k / 2.0 - 1.0, z}) * e;
    });
    // tail via the large-z Whittaker envelope: |term_n| <~ K n^theta z^{3/2} e^{-z}
    const double K = growth_scale(a);
    const double th = a.growth_exponent;
    const double n1 = static_cast<double>(N + 1);
    const double ratio = std::exp(-b4) * std::pow((n1 + 1.0) / n1, th + 1.5);
    double tail = 2.0 * K * std::pow(n1, th) * std::pow(b4 * n1, 1.5) * std::exp(-b4 * n1);
    tail = (ratio < 1.0) ? tail / (1.0 - ratio) : HUGE_VAL;
    // the 1e-280 floor covers large beta, where partial and tail both underflow
    if (tail > std::max(1e-12 * std::abs(partial), 1e-280))
        throw Error(errc::truncation, "Whittaker series tail bound exceeds 1e-12 of the partial sum");
    const double pref = std::exp((2.0 * k - 2.0) * std::log(beta) - 1.5 * std::log(M_PI));
    return pref * partial;
}

double residue_Rk(const SKInstance& inst, const TransformPair& pair) {
    if (inst.petersson_scalar == 0.0) return 0.0;
    return 90.0 * inst.petersson_scalar / (M_PI * M_PI * std::pow(pair.alpha, inst.k));
}

// ---- vertical-line quadrature -------------------------------------------

// (1/2 pi i) Int f(sigma + it) i dt for a conjugate-symmetric integrand,
// trapezoid with tail check against the Stirling decay e^{-pi t / 2}.
static double line_integral(const std::function<cd(double)>& f, const ContourSpec& spec) {
    if (!(spec.step > 0.0) || !(spec.height > spec.step))
        throw Error(errc::config, "contour needs positive step below its height");
    const std::int64_t M = static_cast<std::int64_t>(std::llround(spec.height / spec.step));
    const double h = spec.step;
    const double upper = block_sum(M, [&](std::int64_t j) { return f((j + 1) * h).real(); });
    const double value = (h / (2.0 * M_PI)) * (f(0.0).real() + 2.0 * upper);
    const double tail_est = std::abs(f(M * h)) * 2.0 / (M_PI * M_PI);
    if (tail_est > std::max(1e-13 * std::abs(value), 1e-250))
        throw Error(errc::truncation, "contour tail estimate above target accuracy; raise the height");
    return value;
}

// Gamma(s) D(s) (4 pi alpha)^{-s} / zeta(2s-2k+4), assembled through the
// completed-L product so the absolute error stays bounded at height.
static cd main_integrand(const SKInstance& inst, double alpha, cd s) {
    const int k = inst.k;
    return gamma_D_product(inst, s) * std::exp(-s * std::log(4.0 * M_PI * alpha)) /
           zeta(2.0 * s - (2.0 * k - 4.0));
}

double mellin_quadrature_lhs(const SKInstance& inst, const TransformPair& pair,
                             const ContourSpec& spec) {
    if (!(spec.abscissa > inst.k))
        throw Error(errc::config, "right vertical line must satisfy c > k");
    const double c = spec.abscissa;
    return line_integral([&](double t) { return main_integrand(inst, pair.alpha, cd(c, t)); },
                         spec);
}

double c1_line_quadrature(const SKInstance& inst, const TransformPair& pair,
                          const ContourSpec& spec) {
    if (!(spec.abscissa > inst.k - 3.0) || !(spec.abscissa < inst.k - 2.0))
        throw Error(errc::config, "shifted vertical line must satisfy k-3 < c1 < k-2");
    const double c = spec.abscissa;
    return line_integral([&](double t) { return main_integrand(inst, pair.alpha, cd(c, t)); },
                         spec);
}

static void check_d1(int k, const ContourSpec& spec) {
    if (!(spec.abscissa > k) || !(spec.abscissa < k + 1.0))
        throw Error(errc::config, "reflected vertical line must satisfy k < d1 < k+1");
}

double vk_quadrature(const SKInstance& inst, const TransformPair& pair, const ContourSpec& spec) {
    const int k = inst.k;
    check_d1(k, spec);
    const double d = spec.abscissa;
    const double lb = std::log(4.0 * M_PI * pair.beta);
    auto f = [&](double t) {
        const cd w(d, t);
        return gamma_D_product(inst, w) *
               std::exp(log_gamma(w - (k - 2.0)) - log_gamma(w - (k - 0.5)) - w * lb) /
               zeta(2.0 * w - (2.0 * k - 1.0));
    };
    const double pref = std::exp((2.0 * k - 2.0) * std::log(pair.beta) - 1.5 * std::log(M_PI));
    return pref * line_integral(f, spec);
}

IkComparison ik_closed_vs_quadrature(std::int64_t n, double beta, int k, const ContourSpec& spec) {
    if (n < 1 || !(beta > 0.0)) throw Error(errc::config, "ik comparison needs n >= 1, beta > 0");
    check_d1(k, spec);
    const double z = 4.0 * M_PI * static_cast<double>(n) * beta;
    IkComparison out;
    double tail = 0.0, peak = 0.0;
    out.quadrature = detail::ik_line_quadrature_q(k, n, beta, spec.abscissa, spec.height,
                                                  spec.step, &tail, &peak);
    // Truncation: the integrand decays like e^{-pi t / 2}, so the omitted tail
    // is within a small multiple of the last node. Accuracy bottoms out at the
    // binary128 node noise (~1e-33 of the largest node) regardless of height.
    const double floor_est = std::max(1e-12 * std::abs(out.quadrature), 1e-33 * peak);
    if (tail > floor_est)
        throw Error(errc::truncation, "gamma-ratio line integral: contour height too small");
    out.closed_form = z * std::sqrt(z) * std::exp(-z) *
                      whittaker_w_scaled({k / 2.0 + 1.0, k / 2.0 - 1.0, z});
    return out;
}

// ---- zero sum ------------------------------------------------------------

ZeroSumResult zero_sum(const SKInstance& inst, const TransformPair& pair,
                       const std::vector<ZetaZero>& zeros, const std::vector<Bracket>& brackets) {
    const int k = inst.k;
    const double l4a = std::log(4.0 * M_PI * pair.alpha);
    ZeroSumResult out;
    cd acc = 0.0;
    for (std::size_t bi = 0; bi < brackets.size(); ++bi) {
        for (int idx : brackets[bi].members) {
            const ZetaZero& z = zeros.at(static_cast<std::size_t>(idx) - 1);
            // residue at s = rho/2 + k - 2, conjugate computed explicitly so
            // any asymmetry is observable rather than assumed away
            for (double sgn : {1.0, -1.0}) {
                const cd rho(0.5, sgn * z.gamma);
                const cd zp = zeta_derivative(rho);
                if (std::abs(zp) < 1e-6)
                    throw Error(errc::multiple_zero, "|zeta'(rho)| below the simplicity threshold");
                const cd s = rho / 2.0 + (k - 2.0);
                acc += gamma_D_product(inst, s) * std::exp(-s * l4a) / (2.0 * zp);
            }
        }
        out.partials.push_back({static_cast<int>(bi), acc.real()});
        out.imag_residue = std::max(out.imag_residue, std::abs(acc.imag()));
    }
    out.value = out.partials.empty() ? 0.0 : out.partials.back().cum;
    out.asymmetry_warning = out.imag_residue > 1e-10 * std::max(1.0, std::abs(out.value));
    return out;
}

// ---- assembly -------------------------------------------------------------

static std::int64_t auto_terms(const SKInstance& inst, const TransformPair& pair) {
    for (std::int64_t N = 64; N <= 1024; N *= 2) {
        try {
            auto c = sk_petersson_coeffs(inst, N);
            (void)lambert_lhs(c, pair, N);
            (void)whittaker_series_Vk(inst, pair, N);
            return N;
        } catch (const Error& e) {
            if (e.code() != errc::truncation) throw;
        }
    }
    throw Error(errc::truncation, "no term count up to 1024 satisfies the tail bounds");
}

IdentityReport verify_main_identity(const SKInstance& inst, const TransformPair& pair,
                                   int zero_count, std::int64_t n_terms) {
    if (zero_count < 0) throw Error(errc::config, "zero count must be nonnegative");
    const std::int64_t N = n_terms > 0 ? n_terms : auto_terms(inst, pair);
    IdentityReport rep;
    rep.lhs = lambert_lhs(sk_petersson_coeffs(inst, N), pair, N);
    rep.v_k = whittaker_series_Vk(inst, pair, N);
    rep.r_k = residue_Rk(inst, pair);
    auto zeros = find_zeros(zero_count);
    rep.zeros = zero_sum(inst, pair, zeros, bracket_zeros(zeros, 1.0));
    rep.residual = rep.lhs - (rep.v_k + rep.r_k + rep.zeros.value);
    const ContourSpec oracle = default_c_line(inst.k);
    rep.truncations = {N, zero_count, oracle.height, oracle.step};
    return rep;
}

std::string report_to_json(const IdentityReport& rep) {
    nlohmann::json j;
    j["lhs"] = rep.lhs;
    j["v_k"] = rep.v_k;
    j["r_k"] = rep.r_k;
    j["zero_sum_partials"] = nlohmann::json::array();
    for (const auto& p : rep.zeros.partials)
        j["zero_sum_partials"].push_back({{"bracket", p.bracket}, {"cum", p.cum}});
    j["residual"] = rep.residual;
    j["truncations"] = {{"n_terms", rep.truncations.n_terms},
                        {"zero_count", rep.truncations.zero_count},
                        {"quad_T", rep.truncations.quad_T},
                        {"quad_step", rep.truncations.quad_step}};
    return j.dump(2);
}

std::vector<std::pair<double, double>>
asymptotic_sweep(const SKInstance& inst, const std::vector<double>& alphas) {
    for (std::size_t i = 0; i + 1 < alphas.size(); ++i)
        if (!(alphas[i] > alphas[i + 1]))
            throw Error(errc::config, "sweep expects strictly decreasing alphas");
    std::vector<std::pair<double, double>> out;
    out.reserve(alphas.size());
    for (double a : alphas) {
        const TransformPair pair = transform_pair(a);
        const std::int64_t N = auto_terms(inst, pair);
        const double lhs = lambert_lhs(sk_petersson_coeffs(inst, N), pair, N);
        out.emplace_back(a, std::pow(a, inst.k) * lhs);
    }
    return out;
}

// ---- classical validators --------------------------------------------------

static double hl_side(const CoefficientSeries& mu, double x, std::int64_t N) {
    return std::sqrt(x) * block_sum(N, [&](std::int64_t i) {
               const double n = static_cast<double>(i + 1);
               const double r = x / n;
               // Gaussian weight e^{-pi (x/n)^2}: with alpha*beta = 1 this
               // normalization is the one the zero-sum side actually matches
               return mu.values[i] / n * std::exp(-M_PI * r * r);
           });
}

HLReport hl_identity(const TransformPair& pair, int zero_count, std::int64_t n_terms) {
    if (n_terms < 1 || zero_count < 0) throw Error(errc::config, "need n_terms >= 1, zeros >= 0");
    auto mu = mobius_sieve(n_terms);
    HLReport rep;
    rep.lhs = hl_side(mu, pair.alpha, n_terms) - hl_side(mu, pair.beta, n_terms);

    auto zeros = find_zeros(zero_count);
    auto brackets = bracket_zeros(zeros, 1.0);
    const double lb = std::log(pair.beta / std::sqrt(M_PI));
    const double pref = -std::sqrt(M_PI) / (2.0 * std::sqrt(pair.beta));
    cd acc = 0.0;
    for (std::size_t bi = 0; bi < brackets.size(); ++bi) {
        for (int idx : brackets[bi].members) {
            const double g = zeros.at(static_cast<std::size_t>(idx) - 1).gamma;
            for (double sgn : {1.0, -1.0}) {
                const cd rho(0.5, sgn * g);
                const cd zp = zeta_derivative(rho);
                if (std::abs(zp) < 1e-6)
                    throw Error(errc::multiple_zero, "|zeta'(rho)| below the simplicity threshold");
                acc += std::exp(log_gamma((1.0 - rho) / 2.0) + rho * lb) / zp;
            }
        }
        rep.partials.push_back({static_cast<int>(bi), pref * acc.real()});
        rep.imag_residue = std::max(rep.imag_residue, std::abs(pref * acc.imag()));
    }
    rep.rhs = rep.partials.empty() ? 0.0 : rep.partials.back().cum;
    return rep;
}

double zagier_c0(double y, std::int64_t N) {
    if (!(y > 0.0)) throw Error(errc::config, "y must be positive");
    auto tau = delta_tau(N);
    const double y4 = 4.0 * M_PI * y;
    const double partial = block_sum(N, [&](std::int64_t i) {
        const double t = tau.values[i];
        return t * t * std::exp(-y4 * (i + 1));
    });
    // tau(n)^2 <= K n^11 d(n)^2; envelope exponent 11.4 absorbs the divisor factor
    double K = 0.0;
    for (std::size_t i = 0; i < tau.values.size(); ++i)
        K = std::max(K, tau.values[i] * tau.values[i] /
                            std::pow(static_cast<double>(i + 1), 11.4));
    const double n1 = static_cast<double>(N + 1);
    const double ratio = std::exp(-y4) * std::pow((n1 + 1.0) / n1, 11.4);
    double tail = K * std::pow(n1, 11.4) * std::exp(-y4 * n1);
    tail = (ratio < 1.0) ? tail / (1.0 - ratio) : HUGE_VAL;
    if (tail > 1e-12 * std::abs(partial))
        throw Error(errc::truncation, "constant-term tail bound exceeds 1e-12 of the partial sum");
    return std::pow(y, 12.0) * partial;
}

} // namespace lzeta
