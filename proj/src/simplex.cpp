#include "svmgeom/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "svmgeom/errors.hpp"

namespace svmgeom {

namespace {

// Full-tableau simplex working state. Columns: [structural | artificial | rhs].
struct Tableau {
    Eigen::MatrixXd t;          // m x (n_struct + m + 1)
    std::vector<int> basis;     // basis[i] = column basic in row i
    Eigen::Index m;
    Eigen::Index n_struct;
    long pivots = 0;

    Eigen::Index rhs_col() const { return n_struct + m; }

    void pivot(Eigen::Index row, Eigen::Index col) {
        t.row(row) /= t(row, col);
        for (Eigen::Index i = 0; i < t.rows(); ++i) {
            if (i == row) continue;
            const double f = t(i, col);
            if (f != 0.0) t.row(i) -= f * t.row(row);
        }
        basis[static_cast<std::size_t>(row)] = static_cast<int>(col);
        ++pivots;
    }

    // Bland: entering = lowest-index column with negative reduced cost,
    // leaving = min ratio with lowest basis index on ties.
    // obj holds reduced costs over `cols` columns; returns false when optimal.
    bool bland_step(Eigen::RowVectorXd& obj, double& obj_rhs, Eigen::Index cols, double tol,
                    long max_pivots, bool& unbounded) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (obj(j) < -tol) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return false;

        Eigen::Index leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < m; ++i) {
            const double a = t(i, enter);
            if (a > tol) {
                const double ratio = t(i, rhs_col()) / a;
                if (ratio < best_ratio - 1e-15 ||
                    (ratio <= best_ratio + 1e-15 &&
                     (leave < 0 || basis[static_cast<std::size_t>(i)] <
                                       basis[static_cast<std::size_t>(leave)]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) {
            unbounded = true;
            return false;
        }
        if (pivots >= max_pivots) {
            throw SolverError("simplex pivot cap exceeded");
        }
        // update the external objective row alongside the tableau
        const double f = obj(enter);
        pivot(leave, enter);
        if (f != 0.0) {
            obj -= f * t.row(leave).head(obj.size());
            obj_rhs -= f * t(leave, rhs_col());
        }
        return true;
    }
};

} // namespace

LpResult solve_lp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  const LpOptions& opts) {
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();
    if (b.size() != m || c.size() != n) throw DimensionMismatchError("solve_lp: shape mismatch");

    Tableau tb;
    tb.m = m;
    tb.n_struct = n;
    tb.t.setZero(m, n + m + 1);
    tb.basis.resize(static_cast<std::size_t>(m));

    // equilibrate rows and force rhs >= 0; artificial identity basis
    for (Eigen::Index i = 0; i < m; ++i) {
        Eigen::RowVectorXd row = a.row(i);
        double rhs = b(i);
        const double s = std::max(row.cwiseAbs().maxCoeff(), std::abs(rhs));
        if (s > 0.0) {
            row /= s;
            rhs /= s;
        }
        if (rhs < 0.0) {
            row = -row;
            rhs = -rhs;
        }
        tb.t.row(i).head(n) = row;
        tb.t(i, n + i) = 1.0;
        tb.t(i, tb.rhs_col()) = rhs;
        tb.basis[static_cast<std::size_t>(i)] = static_cast<int>(n + i);
    }

    const Eigen::Index all_cols = n + m;

    // phase 1: minimize sum of artificials
    Eigen::RowVectorXd obj = Eigen::RowVectorXd::Zero(all_cols);
    double obj_rhs = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        obj.head(n) -= tb.t.row(i).head(n);
        obj_rhs -= tb.t(i, tb.rhs_col());
    }
    bool unbounded = false;
    while (tb.bland_step(obj, obj_rhs, n, opts.tol, opts.max_pivots, unbounded)) {
    }
    LpResult res;
    res.pivots = tb.pivots;
    const double infeas = -obj_rhs; // phase-1 optimum
    if (infeas > opts.tol * std::max<double>(1, m)) {
        res.status = LpResult::Status::Infeasible;
        return res;
    }

    // drive leftover artificials out of the basis; drop redundant rows
    std::vector<bool> row_dead(static_cast<std::size_t>(m), false);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (tb.basis[static_cast<std::size_t>(i)] < n) continue;
        Eigen::Index piv = -1;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (std::abs(tb.t(i, j)) > opts.tol) {
                piv = j;
                break;
            }
        }
        if (piv >= 0) {
            tb.pivot(i, piv);
        } else {
            row_dead[static_cast<std::size_t>(i)] = true; // redundant constraint
        }
    }

    // phase 2: reduced costs for c; artificials barred from entering
    Eigen::RowVectorXd obj2 = Eigen::RowVectorXd::Zero(all_cols);
    obj2.head(n) = c.transpose();
    double obj2_rhs = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        const int bi = tb.basis[static_cast<std::size_t>(i)];
        if (bi < n && c(bi) != 0.0) {
            obj2 -= c(bi) * tb.t.row(i).head(all_cols);
            obj2_rhs -= c(bi) * tb.t(i, tb.rhs_col());
        }
    }
    // dead rows keep their artificial basic at zero; zero the row so it never pivots
    for (Eigen::Index i = 0; i < m; ++i) {
        if (row_dead[static_cast<std::size_t>(i)]) tb.t.row(i).head(n).setZero();
    }
    unbounded = false;
    while (tb.bland_step(obj2, obj2_rhs, n, opts.tol, opts.max_pivots, unbounded)) {
    }
    res.pivots = tb.pivots;
    if (unbounded) {
        res.status = LpResult::Status::Unbounded;
        return res;
    }

    res.status = LpResult::Status::Optimal;
    res.x = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i) {
        const int bi = tb.basis[static_cast<std::size_t>(i)];
        if (bi < n) res.x(bi) = tb.t(i, tb.rhs_col());
    }
    res.objective = c.dot(res.x);
    return res;
}

LpResult solve_lp_feasibility(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                              const LpOptions& opts) {
    return solve_lp(a, b, Eigen::VectorXd::Zero(a.cols()), opts);
}

} // namespace svmgeom
