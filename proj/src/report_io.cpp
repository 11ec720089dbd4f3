#include "palgeo/report_io.hpp"

#include <cstdio>
#include <numbers>

#include <json.hpp>

namespace palgeo {

namespace {

using nlohmann::ordered_json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json row_json(const CheckRow& r) {
    ordered_json j;
    j["name"] = r.name;
    if (r.skipped) {
        j["skipped"] = true;
        j["reason"] = r.reason;
        return j;
    }
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

ordered_json asymmetry_json(const AsymmetryResult& a) {
    ordered_json j;
    j["value"] = a.value;
    j["certificate_gap"] = a.certificate_gap;
    j["center"] = {a.optimal.center.x, a.optimal.center.y};
    j["rotation"] = a.optimal.rotation;
    j["width"] = a.optimal.width;
    j["evaluations"] = a.evaluations;
    j["converged"] = a.converged;
    return j;
}

ordered_json infimum_json(const EmpiricalInfimum& inf) {
    ordered_json j;
    j["value"] = inf.samples ? ordered_json(inf.value) : ordered_json(nullptr);
    j["body_id"] = inf.body_id;
    j["constant"] = inf.constant;
    j["samples"] = inf.samples;
    j["above_constant"] = inf.above_constant();
    return j;
}

ordered_json scan_body(const ScanSummary& scan) {
    ordered_json j;
    j["deficit_over_eta"] = infimum_json(scan.deficit_over_eta);
    j["deficit_over_alpha"] = infimum_json(scan.deficit_over_alpha);
    j["deficit_over_fraenkel"] = infimum_json(scan.deficit_over_fraenkel);
    j["eta_over_beta"] = infimum_json(scan.eta_over_beta);
    return j;
}

}  // namespace

void write_checks_csv(std::ostream& out, const std::vector<CheckReport>& reports) {
    out << "body_id,check_name,lhs,rhs,slack,pass\n";
    for (const CheckReport& rep : reports) {
        for (const CheckRow& r : rep.checks) {
            out << rep.body_id << ',' << r.name << ',';
            if (r.skipped) {
                out << ",,,skipped\n";
                continue;
            }
            out << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.slack) << ',' << (r.pass ? "true" : "false")
                << '\n';
        }
    }
}

void write_sharpness_csv(std::ostream& out, const SharpnessReport& s) {
    out << "eps,deficit,eta,alpha,fraenkel,deficit_over_eta,deficit_over_alpha,deficit_over_fraenkel\n";
    for (std::size_t i = 0; i < s.epsilons.size(); ++i) {
        out << num(s.epsilons[i]) << ',' << num(s.deficits[i]) << ',' << num(s.etas[i]) << ',' << num(s.alphas[i])
            << ',' << num(s.fraenkels[i]) << ',' << num(s.ratios_eta[i]) << ',' << num(s.ratios_alpha[i]) << ','
            << num(s.ratios_fraenkel[i]) << '\n';
    }
}

std::string analysis_json(const CheckReport& report) {
    const BodyMetrics& m = report.metrics;
    const DeficitProfile& p = m.profile;
    ordered_json j;
    j["body_id"] = report.body_id;
    j["width"] = p.width;
    j["inradius"] = p.inradius;
    j["m"] = p.m;
    j["area"] = p.area;
    j["deficit"] = p.pal_deficit;
    j["eta"] = p.eta;
    j["indisk_center"] = {p.center.x, p.center.y};
    if (m.alpha) j["alpha"] = asymmetry_json(*m.alpha);
    if (m.fraenkel) j["fraenkel"] = asymmetry_json(*m.fraenkel);
    if (m.beta) j["beta"] = *m.beta;
    ordered_json bounds;
    bounds["phi"] = p.phi_bound;
    bounds["psi"] = p.psi_bound;
    if (m.refined_eta_bound) bounds["refined_eta"] = *m.refined_eta_bound;
    if (m.asymmetry_upper_bound) bounds["asymmetry_upper"] = *m.asymmetry_upper_bound;
    if (m.body_triangle_bound) bounds["body_triangle_hausdorff"] = *m.body_triangle_bound;
    if (m.triangle_bound) bounds["triangle_hausdorff"] = *m.triangle_bound;
    j["bounds"] = bounds;
    ordered_json rows = ordered_json::array();
    for (const CheckRow& r : report.checks) rows.push_back(row_json(r));
    j["checks"] = rows;
    j["failures"] = report.failures();
    return j.dump(2) + "\n";
}

std::string corpus_summary_json(std::string_view corpus, std::uint64_t seed, std::size_t n,
                                const CorpusResult& result, const ScanSummary* scan) {
    ordered_json j;
    j["corpus"] = corpus;
    j["seed"] = seed;
    j["n"] = n;
    j["bodies"] = result.reports.size();
    ordered_json failures = ordered_json::array();
    for (const CheckReport& rep : result.reports) {
        for (const CheckRow& r : rep.checks) {
            if (r.skipped || r.pass) continue;
            ordered_json f = row_json(r);
            f["body_id"] = rep.body_id;
            failures.push_back(f);
        }
    }
    j["failures"] = failures;
    j["empirical_infima"] = scan ? scan_body(*scan) : ordered_json::object();
    return j.dump(2) + "\n";
}

std::string sharpness_json(const SharpnessReport& s) {
    ordered_json j;
    j["epsilons"] = s.epsilons;
    j["deficits"] = s.deficits;
    j["etas"] = s.etas;
    j["alphas"] = s.alphas;
    j["fraenkels"] = s.fraenkels;
    j["ratios_eta"] = s.ratios_eta;
    j["ratios_alpha"] = s.ratios_alpha;
    j["ratios_fraenkel"] = s.ratios_fraenkel;
    j["fitted_exponents"] = {{"eta", s.exponent_eta}, {"alpha", s.exponent_alpha}, {"fraenkel", s.exponent_fraenkel}};
    j["limit_eta_ratio"] = s.limit_eta_ratio;
    j["expected_limit_eta_ratio"] = 2.0 * std::numbers::sqrt3;
    return j.dump(2) + "\n";
}

std::string scan_json(std::string_view corpus, std::uint64_t seed, std::size_t n, const ScanSummary& scan) {
    ordered_json j;
    j["corpus"] = corpus;
    j["seed"] = seed;
    j["n"] = n;
    j["empirical_infima"] = scan_body(scan);
    j["passed"] = scan.passed();
    return j.dump(2) + "\n";
}

}  // namespace palgeo
