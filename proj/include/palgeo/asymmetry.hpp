#pragma once

#include <cstddef>

#include "palgeo/convex_polygon.hpp"
#include "palgeo/triangle_geometry.hpp"

namespace palgeo {

/// Budget of the placement search.
///
/// The rotation range [0, 2pi/3) is split into `theta_samples` strata. Every
/// stratum is screened with a nested golden-section search over the triangle
/// center whose resolution is extent / (translation_grid - 1)^2, which is
/// what a translation_grid^2 lattice refined once more by the same factor
/// would reach. The best local-minimum strata are then refined jointly in
/// rotation and center to tau_opt, with at most `refine_iterations`
/// golden steps in the rotation.
struct OptimizerConfig {
    std::size_t theta_samples = 360;
    std::size_t translation_grid = 33;
    std::size_t refine_iterations = 200;
    double tau_opt = 1e-9;
};

struct AsymmetryResult {
    double value = 0.0;
    EquilateralPlacement optimal;
    std::size_t evaluations = 0;
    bool converged = false;
    /// value minus a Lipschitz lower bound on the true minimum.
    double certificate_gap = 0.0;
};

/// d_H(K, E) / w(K) for E = equilateral(p). Throws WidthMismatch unless
/// p.width equals w(K).
double hausdorff_objective(const ConvexPolygon& k, const EquilateralPlacement& p);

/// |K sym-diff E| / w(K)^2 for E = equilateral(p). Throws WidthMismatch.
double fraenkel_objective(const ConvexPolygon& k, const EquilateralPlacement& p);

/// Hausdorff asymmetry: minimum of hausdorff_objective over placements.
AsymmetryResult alpha(const ConvexPolygon& k, const OptimizerConfig& cfg = {});

/// Fraenkel asymmetry: minimum of fraenkel_objective over placements.
AsymmetryResult fraenkel(const ConvexPolygon& k, const OptimizerConfig& cfg = {});

/// min(alpha(K), 1/6), the asymmetry truncated at the value of the disk.
double beta(const ConvexPolygon& k, const OptimizerConfig& cfg = {});
double beta_from_alpha(double alpha_value);

}  // namespace palgeo
