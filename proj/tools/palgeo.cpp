// palgeo: shape functionals and inequality checks for planar convex bodies.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "palgeo/errors.hpp"
#include "palgeo/report_io.hpp"
#include "palgeo/shapes.hpp"
#include "palgeo/verify.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::size_t theta_samples = palgeo::OptimizerConfig{}.theta_samples;
    double tol = palgeo::OptimizerConfig{}.tau_opt;
    std::string out;
    unsigned threads = 1;

    palgeo::OptimizerConfig optimizer() const {
        palgeo::OptimizerConfig cfg;
        cfg.theta_samples = theta_samples;
        cfg.tau_opt = tol;
        return cfg;
    }
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--theta-samples", f.theta_samples, "Rotation strata of the asymmetry search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", f.tol, "Optimizer convergence tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--out", f.out, "Directory for JSON/CSV artifacts (stdout summary if omitted)");
    cmd->add_option("--threads", f.threads, "Worker threads (PALGEO_THREADS overrides)")->check(CLI::PositiveNumber);
}

unsigned resolve_threads(unsigned flag) {
    if (const char* env = std::getenv("PALGEO_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw palgeo::DomainError("PALGEO_THREADS must be a positive integer");
    }
    return flag;
}

void emit(const CommonFlags& f, const std::string& name, const std::string& text, bool to_stdout) {
    if (!f.out.empty()) {
        fs::create_directories(f.out);
        std::ofstream file(fs::path(f.out) / name);
        if (!file) throw palgeo::Error("cannot write " + (fs::path(f.out) / name).string());
        file << text;
    }
    if (to_stdout) std::cout << text;
}

std::vector<double> parse_eps(const std::string& text) {
    std::vector<double> eps;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) throw palgeo::DomainError("invalid --eps entry '" + item + "'");
        eps.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return eps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantitative Pal inequality toolkit for planar convex polygons"};
    app.require_subcommand(1);

    CommonFlags analyze_flags, verify_flags, sharp_flags, scan_flags;
    std::string shape;
    auto* analyze = app.add_subcommand("analyze", "Compute every functional and check of one shape");
    analyze->add_option("--shape", shape, "Polygon JSON file or spec (ngon:256, iso:0.05, rect:1:3, ...)")
        ->required();
    add_common(analyze, analyze_flags);

    std::string corpus_name = "random";
    std::optional<std::size_t> n;
    std::uint64_t seed = 7;
    bool closed_form = false;
    auto* verify = app.add_subcommand("verify", "Check all inequalities over a generated corpus");
    verify->add_option("--corpus", corpus_name, "random|ngon|rectangles|triangles|family|named|all");
    verify->add_option("--n", n, "Number of bodies")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Corpus seed");
    verify->add_flag("--closed-form-only", closed_form, "Skip rows that need asymmetry optimization");
    add_common(verify, verify_flags);

    std::string eps_text = "0.1,0.05,0.02,0.01,0.005";
    auto* sharp = app.add_subcommand("sharpness", "Rates along the isosceles family K_eps");
    sharp->add_option("--eps", eps_text, "Comma-separated decreasing eps values in (0, 0.2]");
    add_common(sharp, sharp_flags);

    std::string scan_corpus = "random";
    std::optional<std::size_t> scan_n;
    std::uint64_t scan_seed = 7;
    auto* scan = app.add_subcommand("scan", "Empirical infima of the constant ratios");
    scan->add_option("--corpus", scan_corpus, "random|ngon|rectangles|triangles|family|named|all");
    scan->add_option("--n", scan_n, "Number of bodies")->check(CLI::PositiveNumber);
    scan->add_option("--seed", scan_seed, "Corpus seed");
    add_common(scan, scan_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*analyze) {
            const palgeo::ConvexPolygon k = palgeo::make_shape(palgeo::parse_shape_spec(shape));
            const palgeo::CheckReport report = palgeo::check_all(k, analyze_flags.optimizer(),
                                                                 palgeo::CheckScope::Full, "shape");
            emit(analyze_flags, "analysis.json", palgeo::analysis_json(report), true);
            if (!analyze_flags.out.empty()) {
                std::ofstream csv(fs::path(analyze_flags.out) / "checks.csv");
                palgeo::write_checks_csv(csv, {report});
            }
            return report.passed() ? kExitPass : kExitCheckFailure;
        }
        if (*verify) {
            const palgeo::Corpus c = palgeo::parse_corpus(corpus_name);
            const std::size_t count = n.value_or(palgeo::default_corpus_size(c));
            palgeo::VerifyOptions opts;
            opts.threads = resolve_threads(verify_flags.threads);
            opts.scope = closed_form ? palgeo::CheckScope::ClosedForm : palgeo::CheckScope::Full;
            if (!verify_flags.out.empty()) opts.reproducer_dir = fs::path(verify_flags.out) / "reproducers";
            const auto result = palgeo::corpus_verify(c, count, seed, verify_flags.optimizer(), opts);
            emit(verify_flags, "summary.json", palgeo::corpus_summary_json(corpus_name, seed, count, result), true);
            if (!verify_flags.out.empty()) {
                std::ofstream csv(fs::path(verify_flags.out) / "checks.csv");
                palgeo::write_checks_csv(csv, result.reports);
            }
            return result.failures() == 0 ? kExitPass : kExitCheckFailure;
        }
        if (*sharp) {
            const auto report = palgeo::sharpness_study(parse_eps(eps_text), sharp_flags.optimizer(),
                                                        resolve_threads(sharp_flags.threads));
            emit(sharp_flags, "sharpness.json", palgeo::sharpness_json(report), true);
            if (!sharp_flags.out.empty()) {
                std::ofstream csv(fs::path(sharp_flags.out) / "sharpness.csv");
                palgeo::write_sharpness_csv(csv, report);
            }
            const bool ok = report.epsilons.size() < 2 ||
                            (std::abs(report.exponent_eta - 1.0) <= 0.05 && std::abs(report.exponent_alpha - 1.0) <= 0.05 &&
                             std::abs(report.exponent_fraenkel - 1.0) <= 0.05);
            return ok ? kExitPass : kExitCheckFailure;
        }
        if (*scan) {
            const palgeo::Corpus c = palgeo::parse_corpus(scan_corpus);
            const std::size_t count = scan_n.value_or(palgeo::default_corpus_size(c));
            const auto summary = palgeo::constant_scan(c, count, scan_seed, scan_flags.optimizer(),
                                                       resolve_threads(scan_flags.threads));
            emit(scan_flags, "scan.json", palgeo::scan_json(scan_corpus, scan_seed, count, summary), true);
            return summary.passed() ? kExitPass : kExitCheckFailure;
        }
    } catch (const palgeo::Error& e) {
        std::cerr << "palgeo: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "palgeo: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
