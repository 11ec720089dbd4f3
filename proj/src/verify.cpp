#include "palgeo/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>

#include "palgeo/errors.hpp"
#include "palgeo/polygon_io.hpp"
#include "palgeo/triangle_geometry.hpp"

namespace palgeo {

namespace {

constexpr double kInvSqrt3 = 1.0 / std::numbers::sqrt3;

double relative(double tol, double lhs, double rhs) {
    return tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

class Rows {
public:
    explicit Rows(std::vector<CheckRow>& rows) : rows_(rows) {}

    void ge(std::string name, double lhs, double rhs, double tol) {
        CheckRow row{std::move(name), lhs, rhs, lhs - rhs, relative(tol, lhs, rhs), true, false, {}};
        row.pass = std::isfinite(row.slack) && row.slack >= -row.tolerance;
        rows_.push_back(std::move(row));
    }

    void skip(std::string name, std::string reason) {
        CheckRow row;
        row.name = std::move(name);
        row.skipped = true;
        row.reason = std::move(reason);
        rows_.push_back(std::move(row));
    }

    void fail(std::string name, std::string reason) {
        CheckRow row;
        row.name = std::move(name);
        row.pass = false;
        row.lhs = row.rhs = row.slack = std::numeric_limits<double>::quiet_NaN();
        row.reason = std::move(reason);
        rows_.push_back(std::move(row));
    }

private:
    std::vector<CheckRow>& rows_;
};

const char* const kCircumscribedRows[] = {"circumscribed_contains", "circumscribed_width", "lem_convex",
                                          "lem_triangle", "ratio_rw2better"};

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

double log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxx > 0.0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

void consider(EmpiricalInfimum& inf, double num, double den, double min_den, const std::string& id) {
    if (!(den >= min_den)) return;
    const double ratio = num / den;
    if (inf.samples == 0 || ratio < inf.value) {
        inf.value = ratio;
        inf.body_id = id;
    }
    ++inf.samples;
}

}  // namespace

double b1(double delta) {
    const double d1 = 1.0 + delta;
    return d1 * d1 * (6.0 * std::numbers::sqrt3 + 32.0 * d1 / 3.0) / (1.0 - 2.0 * delta);
}

double b2(double delta) {
    const double d1 = 1.0 + delta;
    return 2.0 * std::numbers::sqrt3 * d1 * d1 / (1.0 - delta / 2.0) + 3.0;
}

double c4_of(double delta) {
    if (!(delta > 0.0) || delta > 0.5) throw DomainError("delta must lie in (0, 1/2]");
    return std::min({2.0 * delta, 1.0 / b1(delta), 1.0 / b2(delta)});
}

double c2_assembly() { return std::min(constants::c2, phi(51.0 / 150.0)); }

std::size_t CheckReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRow& r) {
        return !r.skipped && !r.pass;
    }));
}

const CheckRow* CheckReport::find(const std::string& name) const {
    for (const CheckRow& r : checks) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

CheckReport check_all(const ConvexPolygon& k, const OptimizerConfig& cfg, CheckScope scope, std::string body_id) {
    CheckReport report;
    report.body_id = std::move(body_id);
    report.tolerance_used = kClosedFormTolerance;
    Rows rows(report.checks);
    const double tol = kClosedFormTolerance;
    const double atol = kAsymmetryTolerance;

    DeficitProfile& p = report.metrics.profile;
    try {
        p = profile(k);
    } catch (const Error& e) {
        rows.fail("profile", e.what());
        return report;
    }
    const double w = p.width;
    const double x = p.inradius / w;
    const double y = p.m / w;
    const double ratio = p.area / (w * w);

    rows.ge("pal", ratio, kInvSqrt3, tol);
    rows.ge("teo1_eta", p.pal_deficit, constants::c1 * p.eta, tol);
    rows.ge("rw_lower", x, 1.0 / 3.0, tol);
    rows.ge("rw_upper", 0.5, x, tol);
    rows.ge("lowerphi", ratio, p.phi_bound, tol);
    rows.ge("lowerpsi", ratio, p.psi_bound, tol);
    rows.ge("psi_ge_phi", p.psi_bound, p.phi_bound, tol);
    rows.ge("phi_ge_pal", p.phi_bound, kInvSqrt3, tol);
    rows.ge("m_lower", y, 1.0 - x, tol);

    // Rows built on the circumscribed triangle need r < w/2.
    std::optional<Circumscription> circ;
    std::string circ_reason;
    if (x >= 0.5 - kDefaultTolerances.geom) {
        circ_reason = "r/w = 1/2: no circumscribed triangle";
    } else {
        try {
            circ = circumscribe(k);
        } catch (const NotThreeContact& e) {
            circ_reason = e.what();
        }
    }
    if (circ) {
        const TriangleMetrics& t = circ->metrics;
        const double diam = diameter(k);
        rows.ge("circumscribed_contains", 0.0, directed_hausdorff(k, circ->triangle) / diam, tol);
        rows.ge("circumscribed_width", t.width / w, 1.0, tol);
        const double body_bound = body_triangle_hausdorff_bound(t, w);
        report.metrics.body_triangle_bound = body_bound;
        rows.ge("lem_convex", body_bound / w, hausdorff(k, circ->triangle) / w, tol);
        const double tri_bound = triangle_hausdorff_bound(t, std::min(w, t.width));
        report.metrics.triangle_bound = tri_bound;
        rows.ge("lem_triangle", tri_bound / w, hausdorff(circ->triangle, aligned_equilateral(t, std::min(w, t.width))) / w,
                tol);
        const double refined = refined_eta_lower_bound(k);
        report.metrics.refined_eta_bound = refined;
        rows.ge("ratio_rw2better", p.eta, refined, tol);
        report.metrics.asymmetry_upper_bound = asymmetry_upper_bound(k);
    } else {
        for (const char* name : kCircumscribedRows) rows.skip(name, circ_reason);
    }

    if (scope == CheckScope::ClosedForm) return report;

    const AsymmetryResult a = alpha(k, cfg);
    const AsymmetryResult f = fraenkel(k, cfg);
    report.metrics.alpha = a;
    report.metrics.fraenkel = f;
    report.metrics.beta = beta_from_alpha(a.value);
    // The optimizer overestimates the minima by at most the certificate gap,
    // so lower-bound rows use value - gap and upper-bound rows the value.
    const double a_low = std::max(0.0, a.value - a.certificate_gap);
    const double f_low = std::max(0.0, f.value - f.certificate_gap);

    rows.ge("teo2_alpha", p.pal_deficit, constants::c2 * a_low, atol);
    rows.ge("teo3_fraenkel", p.pal_deficit, constants::c3 * f_low, atol);
    rows.ge("r_omega_beta", p.eta, constants::c4 * beta_from_alpha(a_low), atol);
    rows.ge("alpha_le_m_bound", y - 1.0 / 3.0, a.value, atol);
    if (circ) {
        rows.ge("asy_convex", *report.metrics.asymmetry_upper_bound, a.value, atol);
    } else {
        rows.skip("asy_convex", circ_reason);
    }
    rows.ge("equivalence_upper", constants::equivalence_upper * a.value, f_low, atol);
    rows.ge("equivalence_lower", f.value, constants::equivalence_lower * a_low, atol);
    rows.ge("fraenkel_ge_deficit", f.value, p.pal_deficit, atol);
    return report;
}

std::size_t CorpusResult::failures() const {
    std::size_t n = 0;
    for (const CheckReport& r : reports) n += r.failures();
    return n;
}

std::vector<std::string> CorpusResult::failing_bodies() const {
    std::vector<std::string> ids;
    for (const CheckReport& r : reports) {
        if (!r.passed()) ids.push_back(r.body_id);
    }
    return ids;
}

CorpusResult corpus_verify(const std::vector<NamedShape>& bodies, const OptimizerConfig& cfg,
                           const VerifyOptions& opts) {
    CorpusResult result;
    result.reports.resize(bodies.size());
    parallel_for(bodies.size(), opts.threads, [&](std::size_t i) {
        result.reports[i] = check_all(bodies[i].polygon, cfg, opts.scope, bodies[i].id);
    });
    if (opts.reproducer_dir) {
        for (std::size_t i = 0; i < bodies.size(); ++i) {
            if (result.reports[i].passed()) continue;
            std::filesystem::create_directories(*opts.reproducer_dir);
            write_polygon(*opts.reproducer_dir / (bodies[i].id + ".json"), bodies[i].polygon);
        }
    }
    return result;
}

CorpusResult corpus_verify(Corpus corpus, std::size_t n, std::uint64_t seed, const OptimizerConfig& cfg,
                           const VerifyOptions& opts) {
    return corpus_verify(make_corpus(corpus, n, seed), cfg, opts);
}

SharpnessReport sharpness_study(const std::vector<double>& eps_list, const OptimizerConfig& cfg, unsigned threads) {
    if (eps_list.empty()) throw DomainError("empty eps list");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0) || eps_list[i] > 0.2) throw DomainError("eps must lie in (0, 0.2]");
        if (i > 0 && !(eps_list[i] < eps_list[i - 1])) throw DomainError("eps list must be strictly decreasing");
    }
    const std::size_t n = eps_list.size();
    SharpnessReport s;
    s.epsilons = eps_list;
    s.deficits.resize(n);
    s.etas.resize(n);
    s.alphas.resize(n);
    s.fraenkels.resize(n);
    parallel_for(n, threads, [&](std::size_t i) {
        const ConvexPolygon k = isosceles_family(eps_list[i]);
        const DeficitProfile p = profile(k);
        s.deficits[i] = p.pal_deficit;
        s.etas[i] = p.eta;
        s.alphas[i] = alpha(k, cfg).value;
        s.fraenkels[i] = fraenkel(k, cfg).value;
    });
    for (std::size_t i = 0; i < n; ++i) {
        s.ratios_eta.push_back(s.deficits[i] / s.etas[i]);
        s.ratios_alpha.push_back(s.deficits[i] / s.alphas[i]);
        s.ratios_fraenkel.push_back(s.deficits[i] / s.fraenkels[i]);
    }
    if (n >= 2) {
        s.exponent_eta = log_slope(s.deficits, s.etas);
        s.exponent_alpha = log_slope(s.deficits, s.alphas);
        s.exponent_fraenkel = log_slope(s.deficits, s.fraenkels);
        const double e0 = s.epsilons[n - 2], e1 = s.epsilons[n - 1];
        const double r0 = s.ratios_eta[n - 2], r1 = s.ratios_eta[n - 1];
        s.limit_eta_ratio = r1 - e1 * (r0 - r1) / (e0 - e1);
    } else {
        s.exponent_eta = s.exponent_alpha = s.exponent_fraenkel = std::numeric_limits<double>::quiet_NaN();
        s.limit_eta_ratio = s.ratios_eta[0];
    }
    return s;
}

bool ScanSummary::passed() const {
    return deficit_over_eta.above_constant() && deficit_over_alpha.above_constant() &&
           deficit_over_fraenkel.above_constant() && eta_over_beta.above_constant();
}

ScanSummary constant_scan(const std::vector<NamedShape>& bodies, const OptimizerConfig& cfg, unsigned threads) {
    struct Sample {
        double deficit, eta, alpha, fraenkel;
    };
    std::vector<Sample> samples(bodies.size());
    parallel_for(bodies.size(), threads, [&](std::size_t i) {
        const ConvexPolygon& k = bodies[i].polygon;
        const DeficitProfile p = profile(k);
        samples[i] = {p.pal_deficit, p.eta, alpha(k, cfg).value, fraenkel(k, cfg).value};
    });
    ScanSummary s;
    s.deficit_over_eta.constant = constants::c1;
    s.deficit_over_alpha.constant = constants::c2;
    s.deficit_over_fraenkel.constant = constants::c3;
    s.eta_over_beta.constant = constants::c4;
    const double floor = 10.0 * cfg.tau_opt;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        const Sample& x = samples[i];
        const std::string& id = bodies[i].id;
        consider(s.deficit_over_eta, x.deficit, x.eta, floor, id);
        consider(s.deficit_over_alpha, x.deficit, x.alpha, floor, id);
        consider(s.deficit_over_fraenkel, x.deficit, x.fraenkel, floor, id);
        consider(s.eta_over_beta, x.eta, beta_from_alpha(x.alpha), floor, id);
    }
    return s;
}

ScanSummary constant_scan(Corpus corpus, std::size_t n, std::uint64_t seed, const OptimizerConfig& cfg,
                          unsigned threads) {
    return constant_scan(make_corpus(corpus, n, seed), cfg, threads);
}

}  // namespace palgeo
