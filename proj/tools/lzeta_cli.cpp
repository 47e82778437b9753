// Command-line front end. All arithmetic lives in the library; this file only
// parses flags, dispatches, and formats output.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-tolerance
// failure, 4 internal oracle mismatch.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lzeta/identity.hpp"
#include "lzeta/lfunc.hpp"
#include "lzeta/specfun.hpp"
#include "lzeta/summation.hpp"
#include "lzeta/version.hpp"
#include "lzeta/zeta.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitOracle = 4;

struct RunConfig {
    std::string command;
    int k = 10;
    double alpha = 1.0;
    int zero_count = 50;
    std::int64_t n_terms = 0; // 0 = auto
    std::string precision = "standard";
    std::string out;    // empty = stdout
    std::string format = "json";
    int threads = 0;    // 0 = library default
    double y = 0.01;    // c0 smoothing parameter
    std::vector<double> alphas{0.1, 0.03, 0.01};
};

json config_json(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["k"] = cfg.k;
    j["alpha"] = cfg.alpha;
    j["zeros"] = cfg.zero_count;
    j["terms"] = cfg.n_terms;
    j["precision"] = cfg.precision;
    j["format"] = cfg.format;
    j["threads"] = cfg.threads;
    if (cfg.command == "c0") j["y"] = cfg.y;
    if (cfg.command == "asymptotic") j["alphas"] = cfg.alphas;
    return j;
}

// Number formatting shared by every emitter: shortest round-trip decimal, so
// reruns with the same config are byte-identical.
std::string num(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

void emit(const RunConfig& cfg, const std::string& body) {
    if (cfg.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw lzeta::Error(lzeta::errc::config, "cannot open output path: " + cfg.out);
    f << body;
}

std::string wrap_json(const RunConfig& cfg, json result) {
    json j;
    j["version"] = lzeta::kVersion;
    j["config"] = config_json(cfg);
    j["result"] = std::move(result);
    return j.dump(2) + "\n";
}

std::string csv_preamble(const RunConfig& cfg) {
    std::ostringstream os;
    os << "# version=" << lzeta::kVersion << "\n# config=" << config_json(cfg).dump() << "\n";
    return os.str();
}

// The d1 contour used for the I_k grid: taller than the identity-check default so
// the tail clears 1e-12 of the e^{-4 pi n beta}-small values.
lzeta::ContourSpec ik_contour(int k) { return {k + 0.5, 80.0, 0.05}; }

int run_zeros(const RunConfig& cfg) {
    auto zeros = lzeta::find_zeros(cfg.zero_count);
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << csv_preamble(cfg) << "index,gamma,tol\n";
        for (const auto& z : zeros)
            os << z.index << ',' << num(z.gamma) << ',' << num(z.tol) << '\n';
        emit(cfg, os.str());
    } else {
        json arr = json::array();
        for (const auto& z : zeros)
            arr.push_back({{"index", z.index}, {"gamma", z.gamma}, {"tol", z.tol}});
        emit(cfg, wrap_json(cfg, std::move(arr)));
    }
    return kExitOk;
}

int run_coeffs(const RunConfig& cfg) {
    const std::int64_t N = cfg.n_terms > 0 ? cfg.n_terms : 128;
    auto inst = lzeta::make_sk_instance(cfg.k, 1.0, std::max<std::int64_t>(N, 64));
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << csv_preamble(cfg);
        lzeta::write_coeffs_csv(os, inst, N);
        emit(cfg, os.str());
    } else {
        json j = json::parse(lzeta::instance_to_json(inst));
        j["n"] = N;
        emit(cfg, wrap_json(cfg, std::move(j)));
    }
    return kExitOk;
}

int run_verify(const RunConfig& cfg) {
    auto inst = lzeta::make_sk_instance(cfg.k);
    auto pair = lzeta::transform_pair(cfg.alpha);
    auto rep = lzeta::verify_main_identity(inst, pair, cfg.zero_count, cfg.n_terms);
    json j = json::parse(lzeta::report_to_json(rep));
    emit(cfg, wrap_json(cfg, std::move(j)));
    return std::abs(rep.residual) <= 1e-4 * std::abs(rep.lhs) ? kExitOk : kExitTolerance;
}

int run_asymptotic(const RunConfig& cfg) {
    auto inst = lzeta::make_sk_instance(cfg.k);
    auto rows = lzeta::asymptotic_sweep(inst, cfg.alphas);
    const double limit = 90.0 * inst.petersson_scalar / (M_PI * M_PI);
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << csv_preamble(cfg) << "alpha,scaled_lhs\n";
        for (const auto& [a, v] : rows) os << num(a) << ',' << num(v) << '\n';
        emit(cfg, os.str());
    } else {
        json arr = json::array();
        for (const auto& [a, v] : rows) arr.push_back({{"alpha", a}, {"scaled_lhs", v}});
        emit(cfg, wrap_json(cfg, json{{"limit", limit}, {"sweep", std::move(arr)}}));
    }
    return kExitOk;
}

int run_hl(const RunConfig& cfg) {
    auto pair = lzeta::transform_pair(cfg.alpha);
    const std::int64_t N = cfg.n_terms > 0 ? cfg.n_terms : 200000;
    auto rep = lzeta::hl_identity(pair, cfg.zero_count, N);
    json parts = json::array();
    for (const auto& p : rep.partials) parts.push_back({{"bracket", p.bracket}, {"cum", p.cum}});
    emit(cfg, wrap_json(cfg, json{{"lhs", rep.lhs},
                                  {"rhs", rep.rhs},
                                  {"partials", std::move(parts)},
                                  {"imag_residue", rep.imag_residue}}));
    return kExitOk;
}

int run_c0(const RunConfig& cfg) {
    const std::int64_t N = cfg.n_terms > 0 ? cfg.n_terms : 2000;
    const double v = lzeta::zagier_c0(cfg.y, N);
    emit(cfg, wrap_json(cfg, json{{"y", cfg.y}, {"c0", v}, {"terms", N}}));
    return kExitOk;
}

// Mutual-oracle battery: each block computes one quantity along two
// independent routes and reports the separation.
int run_oracles(const RunConfig& cfg) {
    auto inst = lzeta::make_sk_instance(cfg.k);
    auto pair = lzeta::transform_pair(cfg.alpha);
    json checks = json::array();
    bool mismatch = false;
    auto record = [&](const std::string& name, double a, double b, double tol) {
        const double scale = std::max(std::abs(a), std::abs(b));
        const double rel = scale > 0.0 ? std::abs(a - b) / scale : 0.0;
        const bool ok = rel <= tol;
        mismatch = mismatch || !ok;
        checks.push_back({{"check", name}, {"first", a}, {"second", b},
                          {"rel", rel}, {"tol", tol}, {"pass", ok}});
    };

    auto c = lzeta::sk_petersson_coeffs(inst, 256);
    record("lambert_vs_mellin", lzeta::lambert_lhs(c, pair, 256),
           lzeta::mellin_quadrature_lhs(inst, pair, lzeta::default_c_line(cfg.k)), 1e-8);
    auto ik = lzeta::ik_closed_vs_quadrature(1, pair.beta, cfg.k, ik_contour(cfg.k));
    record("ik_closed_vs_quadrature", ik.quadrature, ik.closed_form, 1e-9);
    record("vk_series_vs_quadrature", lzeta::whittaker_series_Vk(inst, pair, 256),
           lzeta::vk_quadrature(inst, pair, lzeta::default_d1_line(cfg.k)), 1e-8);

    // Functional equation of the completed series at a sample point.
    const std::complex<double> s{cfg.k + 1.25, 3.0};
    auto dstar = [&](std::complex<double> w) {
        return std::exp(-2.0 * w * std::log(2.0 * M_PI) +
                        lzeta::log_gamma(w - (cfg.k - 2.0))) *
               lzeta::gamma_D_product(inst, w);
    };
    const auto fe_lhs = dstar(s);
    const auto fe_rhs = dstar(2.0 * cfg.k - 2.0 - s);
    record("functional_equation", std::abs(fe_lhs), std::abs(fe_rhs), 1e-6);

    emit(cfg, wrap_json(cfg, json{{"checks", std::move(checks)}}));
    return mismatch ? kExitOracle : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Lambert-series / zeta-zero identity toolkit"};
    app.set_version_flag("--version", lzeta::kVersion);
    app.require_subcommand(1);

    // Worker count: flag beats LZETA_THREADS beats logical cores.
    if (const char* env = std::getenv("LZETA_THREADS")) cfg.threads = std::atoi(env);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "instance weight (only 10 is wired up)");
        sub->add_option("--threads", cfg.threads, "worker count (0 = all logical cores)");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--precision", cfg.precision, "standard or extended accumulation")
            ->check(CLI::IsMember({"standard", "extended"}));
    };

    auto* zeros = app.add_subcommand("zeros", "critical-line zeros with certificates");
    zeros->add_option("--count", cfg.zero_count, "number of zeros")->check(CLI::PositiveNumber);
    add_common(zeros);

    auto* coeffs = app.add_subcommand("coeffs", "coefficient table n,tau,c_n,a_n");
    coeffs->add_option("--terms", cfg.n_terms, "table length")->check(CLI::PositiveNumber);
    add_common(coeffs);

    auto* verify = app.add_subcommand("verify", "full identity check at one alpha");
    verify->add_option("--alpha", cfg.alpha, "scale parameter")->check(CLI::PositiveNumber);
    verify->add_option("--zeros", cfg.zero_count, "zeros in the residue sum")
        ->check(CLI::PositiveNumber);
    verify->add_option("--terms", cfg.n_terms, "series length (0 = auto)");
    add_common(verify);

    auto* asym = app.add_subcommand("asymptotic", "alpha -> 0 sweep of alpha^k * LHS");
    asym->add_option("--alphas", cfg.alphas, "sweep points (descending)");
    add_common(asym);

    auto* hl = app.add_subcommand("hl", "Hardy-Littlewood Mobius/zero-sum identity");
    hl->add_option("--alpha", cfg.alpha, "scale parameter")->check(CLI::PositiveNumber);
    hl->add_option("--zeros", cfg.zero_count, "zeros on the right-hand side")
        ->check(CLI::PositiveNumber);
    hl->add_option("--terms", cfg.n_terms, "Mobius series length");
    add_common(hl);

    auto* c0 = app.add_subcommand("c0", "tau^2 Lambert constant-term check");
    c0->add_option("--y", cfg.y, "smoothing parameter")->check(CLI::PositiveNumber);
    c0->add_option("--terms", cfg.n_terms, "series length");
    add_common(c0);

    auto* oracles = app.add_subcommand("oracles", "mutual-oracle consistency battery");
    oracles->add_option("--alpha", cfg.alpha, "scale parameter")->check(CLI::PositiveNumber);
    add_common(oracles);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int r = app.exit(e);
        return r == 0 ? kExitOk : kExitConfig;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.format == "csv" && cfg.command != "zeros" && cfg.command != "coeffs" &&
        cfg.command != "asymptotic") {
        std::cerr << "error: csv output is defined for zeros, coeffs, and asymptotic only\n";
        return kExitConfig;
    }

    lzeta::set_worker_count(cfg.threads);
    lzeta::set_precision_mode(cfg.precision == "extended" ? lzeta::PrecisionMode::extended
                                                          : lzeta::PrecisionMode::standard);

    try {
        if (cfg.command == "zeros") return run_zeros(cfg);
        if (cfg.command == "coeffs") return run_coeffs(cfg);
        if (cfg.command == "verify") return run_verify(cfg);
        if (cfg.command == "asymptotic") return run_asymptotic(cfg);
        if (cfg.command == "hl") return run_hl(cfg);
        if (cfg.command == "c0") return run_c0(cfg);
        if (cfg.command == "oracles") return run_oracles(cfg);
        std::cerr << "error: unknown command\n";
        return kExitConfig;
    } catch (const lzeta::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case lzeta::errc::config:
        case lzeta::errc::unsupported_weight:
        case lzeta::errc::invalid_index:
            return kExitConfig;
        case lzeta::errc::oracle_mismatch:
            return kExitOracle;
        default:
            return kExitTolerance;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTolerance;
    }
}
