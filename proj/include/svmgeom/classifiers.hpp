#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>

#include "svmgeom/dataset.hpp"
#include "svmgeom/linear_model.hpp"

namespace svmgeom {

/// Mean difference: w = mean+ - mean-, hyperplane through the midpoint.
LinearModel mean_difference(const Dataset& data);

/// Fisher linear discriminant: w = pooled-covariance^{-1} (mean+ - mean-).
/// Needs n - 2 >= d and a numerically invertible pooled covariance.
LinearModel fld(const Dataset& data, double rank_tol = 1e-10);

/// Maximal-data-piling classifier; intercept midway between the projected
/// class values.
LinearModel mdp_classifier(const Dataset& data, double rank_tol = 1e-10);

/// Dual solution of the soft-margin problem. C is +infinity for hard margin.
struct SoftMarginSolution {
    LinearModel model;
    Eigen::VectorXd alpha;
    Eigen::VectorXd xi;
    double C = 0.0;
    double objective = 0.0;       // primal value
    double dual_objective = 0.0;
    long iterations = 0;
    double kkt_violation = 0.0;   // working-pair violation at the final iterate

    bool hard_margin() const { return !std::isfinite(C); }
};

struct SvmOptions {
    double tol = 1e-6;        // stop when the max KKT violation falls below this
    long max_iter = 1000000;  // pair updates
};

/// Pairwise coordinate ascent on the dual (most-violating-pair selection).
/// Precomputes the Gram matrix once so a C-path over the same data is cheap.
class SmoSolver {
public:
    explicit SmoSolver(const Dataset& data);

    /// Soft margin for finite C; pass C = +infinity for the hard-margin dual
    /// (callers are responsible for separability in that case).
    SoftMarginSolution solve(double C, const SvmOptions& opts = {}) const;

    const Dataset& data() const { return data_; }

private:
    Dataset data_;
    Eigen::VectorXd y_;
    Eigen::MatrixXd gram_;      // empty when n exceeds the cache limit
    Eigen::VectorXd gram_diag_;

    void add_row_update(Eigen::VectorXd& wx, Eigen::Index i, double coef) const;
    double gram_at(Eigen::Index i, Eigen::Index j) const;
};

SoftMarginSolution soft_margin_svm(const Dataset& data, double C, double tol = 1e-6,
                                   long max_iter = 1000000);

/// Hard margin; fails with SeparabilityError when the class hulls (nearly)
/// touch, distinguished from iteration-cap ConvergenceError.
SoftMarginSolution hard_margin_svm(const Dataset& data, double tol = 1e-6,
                                   long max_iter = 1000000);

/// Intercept putting the hyperplane halfway between the weighted support
/// centroids m+ and m-.
double centroid_intercept(const SoftMarginSolution& sol, const Dataset& data);

/// Case rule: centroid intercept when at least one class is entirely support
/// vectors, the solver's intercept otherwise.
double adaptive_intercept(const SoftMarginSolution& sol, const Dataset& data);

inline double margin_width(const SoftMarginSolution& sol) { return 1.0 / sol.model.w.norm(); }

inline constexpr double kInfiniteC = std::numeric_limits<double>::infinity();

} // namespace svmgeom
