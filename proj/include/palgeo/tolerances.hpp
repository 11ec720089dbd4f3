#pragma once

namespace palgeo {

// geom: geometric predicate tolerance, relative to the shape diameter.
// opt: optimizer convergence tolerance on dimensionless objectives.
struct Tolerances {
    double geom = 1e-12;
    double opt = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

// Slack (relative to diameter) under which a half-plane constraint counts as
// touching the inscribed disk, and under which two unit contact normals count
// as opposite. Looser than geom because the lexicographic center selection
// perturbs the center by a few geom units.
inline constexpr double kContactTolerance = 1e-9;

}  // namespace palgeo
