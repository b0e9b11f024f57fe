#pragma once

#include <Eigen/Core>
#include <optional>

#include "svmgeom/dataset.hpp"

namespace svmgeom {

/// Certified pair of nearest (or intersecting) hull points: convex weights
/// over each class and the points they combine to.
struct HullWitness {
    Eigen::VectorXd lambda_plus;   // over idx_plus order
    Eigen::VectorXd lambda_minus;  // over idx_minus order
    Eigen::VectorXd c_plus;
    Eigen::VectorXd c_minus;
};

/// Two-class diameter: max over (i in I+, j in I-) of |x_i - x_j|.
double diameter(const Dataset& data);

struct GapResult {
    double value = 0.0;
    HullWitness witness;
    long iterations = 0;
};

/// Minimum distance between the two class hulls (0 when they intersect),
/// via pairwise Frank-Wolfe on the difference polytope. `tol` < 0 selects
/// the default 1e-8 * diameter.
GapResult gap(const Dataset& data, double tol = -1.0, long max_iter = 2000000);

/// Direction v with v.x_i = a*y_i + b for every i; both classes project to a
/// single point each, 2a apart.
struct PilingCertificate {
    Eigen::VectorXd v;  // unit norm
    double b = 0.0;
    double a = 0.0;     // > 0
};

/// Unique complete-data-piling direction inside the affine hull of the data.
/// Requires d >= n-1 and affinely independent points; otherwise nullopt.
std::optional<PilingCertificate> solve_affine_piling(const Dataset& data, double rank_tol = 1e-10);

/// Maximal-data-piling direction: pinv(global covariance) * (mean+ - mean-),
/// singular values below rank_tol * sigma_max truncated.
Eigen::VectorXd mdp_direction(const Dataset& data, double rank_tol = 1e-10);

struct PilingFit {
    bool piles = false;
    double a = 0.0;
    double b = 0.0;
    double max_residual = 0.0;
};

/// Least-squares fit of (a, b) to v.x_i ~ a*y_i + b. Piles when the max
/// residual is within tol * |v| * scale and |a| clears the same threshold.
PilingFit has_complete_piling(const Dataset& data, const Eigen::VectorXd& v, double tol = 1e-7);

struct ConvexDirectionCheck {
    bool member = false;
    double a = 0.0;  // a * v = c_plus - c_minus for the witness
    std::optional<HullWitness> witness;
};

/// Decides by LP whether v spans a convex direction (some nonzero multiple of
/// v is a difference of hull points); tries both orientations.
ConvexDirectionCheck is_convex_direction(const Dataset& data, const Eigen::VectorXd& v,
                                         double tol = 1e-9);

/// Feasible point of the piling-and-hull linear program: v is a complete data
/// piling direction (normalized to a = 1, so v.x_i = y_i + b) that also goes
/// between the two hulls.
struct CpIntersection {
    Eigen::VectorXd v;
    double b = 0.0;
    HullWitness witness;
};

/// Two-phase-simplex feasibility test for C (convex directions) intersecting
/// P (complete data piling directions); nullopt when the intersection is empty.
std::optional<CpIntersection> cp_intersection_lp(const Dataset& data);

/// LP feasibility of the two hulls having a common point.
bool hulls_intersect(const Dataset& data);

} // namespace svmgeom
