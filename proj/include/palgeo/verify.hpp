#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "palgeo/asymmetry.hpp"
#include "palgeo/deficit.hpp"
#include "palgeo/shapes.hpp"

namespace palgeo {

namespace constants {
inline const double c1 = 1.0 / std::sqrt(5.0);
inline const double c2 = 1.0 / (25.0 * std::sqrt(5.0));
inline const double c3 = 1.0 / (25.0 * (3.0 * std::sqrt(3.0) + 2.0) * std::sqrt(5.0));
inline const double c4 = 1.0 / 25.0;
inline const double equivalence_upper = 3.0 * std::sqrt(3.0) + 2.0;
inline const double equivalence_lower = 1.0 / (25.0 * std::sqrt(5.0));
}  // namespace constants

/// Constants of the large/small inradius split in the proof of the
/// quantitative inradius-width inequality, for 0 < delta <= 1/2.
double b1(double delta);
double b2(double delta);
/// min{2 delta, 1/b1(delta), 1/b2(delta)}.
double c4_of(double delta);
/// min{1/(25 sqrt 5), phi(51/150)}.
double c2_assembly();

inline constexpr double kClosedFormTolerance = 1e-9;  // relative
inline constexpr double kAsymmetryTolerance = 1e-6;

/// One inequality lhs >= rhs. pass <=> slack >= -tolerance, slack = lhs - rhs.
struct CheckRow {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    bool skipped = false;
    std::string reason;
};

/// Quantities a report's rows were computed from.
struct BodyMetrics {
    DeficitProfile profile;
    std::optional<AsymmetryResult> alpha;
    std::optional<AsymmetryResult> fraenkel;
    std::optional<double> beta;
    std::optional<double> asymmetry_upper_bound;
    std::optional<double> refined_eta_bound;
    std::optional<double> triangle_bound;       // closed-form bound on d_H(T_K, E)
    std::optional<double> body_triangle_bound;  // closed-form bound on d_H(K, T_K)
};

struct CheckReport {
    std::string body_id;
    std::vector<CheckRow> checks;
    double tolerance_used = kClosedFormTolerance;
    BodyMetrics metrics;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
    const CheckRow* find(const std::string& name) const;
};

enum class CheckScope {
    ClosedForm,  // rows that need no asymmetry optimization
    Full,
};

/// Every inequality on one body. Rows never throw: a row whose inputs cannot
/// be computed is marked skipped with the reason.
CheckReport check_all(const ConvexPolygon& k, const OptimizerConfig& cfg = {}, CheckScope scope = CheckScope::Full,
                      std::string body_id = "body");

struct VerifyOptions {
    unsigned threads = 1;
    CheckScope scope = CheckScope::Full;
    /// Failing bodies are written here as polygon JSON when set.
    std::optional<std::filesystem::path> reproducer_dir;
};

struct CorpusResult {
    std::vector<CheckReport> reports;  // in corpus order
    std::size_t failures() const;
    std::vector<std::string> failing_bodies() const;
};

CorpusResult corpus_verify(const std::vector<NamedShape>& bodies, const OptimizerConfig& cfg = {},
                           const VerifyOptions& opts = {});
CorpusResult corpus_verify(Corpus corpus, std::size_t n, std::uint64_t seed, const OptimizerConfig& cfg = {},
                           const VerifyOptions& opts = {});

struct SharpnessReport {
    std::vector<double> epsilons;
    std::vector<double> deficits;
    std::vector<double> etas;
    std::vector<double> alphas;
    std::vector<double> fraenkels;
    std::vector<double> ratios_eta;       // deficit / eta
    std::vector<double> ratios_alpha;     // deficit / alpha
    std::vector<double> ratios_fraenkel;  // deficit / fraenkel
    /// Least-squares slopes of log eta, log alpha, log fraenkel against
    /// log deficit.
    double exponent_eta = 0.0;
    double exponent_alpha = 0.0;
    double exponent_fraenkel = 0.0;
    /// deficit / eta extrapolated linearly in eps to eps = 0.
    double limit_eta_ratio = 0.0;
};

/// Runs the isosceles family K_eps over a strictly decreasing list of
/// eps in (0, 0.2]. Throws DomainError otherwise.
SharpnessReport sharpness_study(const std::vector<double>& eps_list, const OptimizerConfig& cfg = {},
                                unsigned threads = 1);

struct EmpiricalInfimum {
    double value = 0.0;
    std::string body_id;
    double constant = 0.0;  // proven lower bound for the ratio
    std::size_t samples = 0;
    bool above_constant() const { return samples == 0 || value >= constant; }
};

struct ScanSummary {
    EmpiricalInfimum deficit_over_eta;
    EmpiricalInfimum deficit_over_alpha;
    EmpiricalInfimum deficit_over_fraenkel;
    EmpiricalInfimum eta_over_beta;
    bool passed() const;
};

/// Empirical infima of the ratios bounded by the quantitative inequalities.
/// Bodies whose denominator is below 10 tau_opt are excluded.
ScanSummary constant_scan(const std::vector<NamedShape>& bodies, const OptimizerConfig& cfg = {},
                          unsigned threads = 1);
ScanSummary constant_scan(Corpus corpus, std::size_t n, std::uint64_t seed, const OptimizerConfig& cfg = {},
                          unsigned threads = 1);

}  // namespace palgeo
