#pragma once

#include <Eigen/Core>

namespace svmgeom {

/// Dense two-phase primal simplex for small LPs in equality standard form:
///   minimize c.x  subject to  A x = b, x >= 0.
/// Bland's pivoting rule throughout, so the method cannot cycle.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Eigen::VectorXd x;
    double objective = 0.0;
    long pivots = 0;
};

struct LpOptions {
    double tol = 1e-9;       // pivot / feasibility tolerance (rows are equilibrated)
    long max_pivots = 200000;
};

LpResult solve_lp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  const LpOptions& opts = {});

/// Pure feasibility variant (phase 1 only).
LpResult solve_lp_feasibility(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                              const LpOptions& opts = {});

} // namespace svmgeom
