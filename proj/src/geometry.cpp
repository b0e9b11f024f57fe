#include "svmgeom/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "svmgeom/errors.hpp"
#include "svmgeom/linear_model.hpp"
#include "svmgeom/simplex.hpp"

namespace svmgeom {

double diameter(const Dataset& data) {
    double best = 0.0;
    for (Eigen::Index i : data.idx_plus()) {
        for (Eigen::Index j : data.idx_minus()) {
            best = std::max(best, (data.points().row(i) - data.points().row(j)).squaredNorm());
        }
    }
    return std::sqrt(best);
}

namespace {

// active atom of the difference polytope conv(X+) - conv(X-)
struct PairAtom {
    Eigen::Index ip;  // position within idx_plus
    Eigen::Index im;  // position within idx_minus
    double weight;
};

HullWitness witness_from_atoms(const Dataset& data, const std::vector<PairAtom>& atoms) {
    HullWitness w;
    w.lambda_plus = Eigen::VectorXd::Zero(data.n_plus());
    w.lambda_minus = Eigen::VectorXd::Zero(data.n_minus());
    for (const auto& a : atoms) {
        w.lambda_plus(a.ip) += a.weight;
        w.lambda_minus(a.im) += a.weight;
    }
    // renormalize away accumulated drift
    w.lambda_plus /= w.lambda_plus.sum();
    w.lambda_minus /= w.lambda_minus.sum();
    w.c_plus = Eigen::VectorXd::Zero(data.dim());
    w.c_minus = Eigen::VectorXd::Zero(data.dim());
    for (Eigen::Index k = 0; k < data.n_plus(); ++k) {
        if (w.lambda_plus(k) > 0.0)
            w.c_plus += w.lambda_plus(k) * data.points().row(data.idx_plus()[static_cast<std::size_t>(k)]).transpose();
    }
    for (Eigen::Index k = 0; k < data.n_minus(); ++k) {
        if (w.lambda_minus(k) > 0.0)
            w.c_minus += w.lambda_minus(k) * data.points().row(data.idx_minus()[static_cast<std::size_t>(k)]).transpose();
    }
    return w;
}

} // namespace

GapResult gap(const Dataset& data, double tol, long max_iter) {
    const Eigen::MatrixXd plus = data.class_points(+1);
    const Eigen::MatrixXd minus = data.class_points(-1);
    const double diam = diameter(data);
    if (tol < 0.0) tol = 1e-8 * std::max(diam, 1e-300);

    auto atom_vec = [&](Eigen::Index ip, Eigen::Index im) -> Eigen::VectorXd {
        return (plus.row(ip) - minus.row(im)).transpose();
    };

    std::vector<PairAtom> atoms{{0, 0, 1.0}};
    Eigen::VectorXd z = atom_vec(0, 0);
    double best_lower = 0.0;

    for (long it = 0; it < max_iter; ++it) {
        if (it > 0 && (it & 0xff) == 0) {
            // periodic refresh against floating-point drift
            z.setZero();
            for (const auto& a : atoms) z += a.weight * atom_vec(a.ip, a.im);
        }
        const double nz = z.norm();
        if (nz <= tol) {
            GapResult r;
            r.value = 0.0;
            r.witness = witness_from_atoms(data, atoms);
            r.iterations = it;
            return r;
        }

        // Frank-Wolfe atom: minimize z . (p_i - m_j); the oracle factorizes
        const Eigen::VectorXd pz = plus * z;
        const Eigen::VectorXd mz = minus * z;
        Eigen::Index ip = 0, im = 0;
        pz.minCoeff(&ip);
        mz.maxCoeff(&im);
        const Eigen::VectorXd s = atom_vec(ip, im);
        const double fw_gap = z.squaredNorm() - z.dot(s);
        best_lower = std::max(best_lower, z.dot(s) / nz);
        if (fw_gap <= 0.5 * tol * nz) {
            GapResult r;
            r.value = nz;
            r.witness = witness_from_atoms(data, atoms);
            r.iterations = it;
            return r;
        }

        // away atom: active pair maximizing z . atom
        std::size_t away = 0;
        double away_val = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            const double v = pz(atoms[k].ip) - mz(atoms[k].im);
            if (v > away_val) {
                away_val = v;
                away = k;
            }
        }
        const Eigen::VectorXd a = atom_vec(atoms[away].ip, atoms[away].im);
        const Eigen::VectorXd u = s - a;
        const double uu = u.squaredNorm();
        if (uu <= 0.0) {
            GapResult r;  // FW atom equals away atom: stationary
            r.value = nz;
            r.witness = witness_from_atoms(data, atoms);
            r.iterations = it;
            return r;
        }
        double gamma = std::min(atoms[away].weight, -z.dot(u) / uu);
        if (gamma <= 0.0) gamma = std::min(atoms[away].weight, 1e-18);
        z += gamma * u;
        atoms[away].weight -= gamma;
        if (atoms[away].weight <= 1e-16) atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(away));
        bool merged = false;
        for (auto& at : atoms) {
            if (at.ip == ip && at.im == im) {
                at.weight += gamma;
                merged = true;
                break;
            }
        }
        if (!merged) atoms.push_back({ip, im, gamma});
    }
    throw ConvergenceError("gap: no convergence within iteration cap", best_lower, z.norm());
}

std::optional<PilingCertificate> solve_affine_piling(const Dataset& data, double rank_tol) {
    const Eigen::Index n = data.n();
    const Eigen::Index d = data.dim();
    if (d < n - 1) return std::nullopt;

    // general position <=> appended matrix [X | 1] has full row rank n
    Eigen::MatrixXd appended(n, d + 1);
    appended.leftCols(d) = data.points();
    appended.col(d).setOnes();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(appended);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= rank_tol * sv(0)) return std::nullopt;

    // Solve X v + b 1 = y with v restricted to the affine hull directions:
    // write v = Xc^T gamma over centered data; the centered Gram has the ones
    // vector in its kernel, so split y into its mean and the rest.
    const Eigen::VectorXd xbar = data.mean();
    const Eigen::MatrixXd xc = data.points().rowwise() - xbar.transpose();
    const Eigen::MatrixXd gram = xc * xc.transpose();
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) y(i) = data.labels()(i);
    const double y_mean = y.mean();
    const Eigen::VectorXd yc = y.array() - y_mean;

    Eigen::JacobiSVD<Eigen::MatrixXd> gsvd(gram, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& gs = gsvd.singularValues();
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(gs.size());
    for (Eigen::Index i = 0; i < gs.size(); ++i) {
        if (gs(i) > rank_tol * gs(0)) inv(i) = 1.0 / gs(i);
    }
    const Eigen::VectorXd gamma = gsvd.matrixV() * inv.asDiagonal() * (gsvd.matrixU().transpose() * yc);
    Eigen::VectorXd v = xc.transpose() * gamma;  // piles with a = 1
    const double norm = v.norm();
    if (norm <= kZeroDirectionTol * std::max(1.0, data.scale())) return std::nullopt;

    PilingCertificate cert;
    cert.v = v / norm;
    cert.a = 1.0 / norm;
    cert.b = (cert.v.dot(xbar) - y_mean / norm);
    return cert;
}

Eigen::VectorXd mdp_direction(const Dataset& data, double rank_tol) {
    const Eigen::VectorXd delta = data.mean_plus() - data.mean_minus();
    if (is_zero_direction(delta, data.scale())) {
        throw DegenerateDirectionError("mdp_direction: class means coincide");
    }
    const Eigen::MatrixXd xc = data.points().rowwise() - data.mean().transpose();
    // pinv(Sigma) delta through the SVD of the centered data matrix;
    // Sigma = Xc^T Xc / (n-1) shares right singular vectors with Xc
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(xc, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double nm1 = static_cast<double>(data.n() - 1);
    const double cutoff2 = rank_tol * s(0) * s(0);  // on Sigma's spectrum
    Eigen::VectorXd w = Eigen::VectorXd::Zero(data.dim());
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        const double sigma = s(i) * s(i);
        if (sigma > cutoff2) {
            w += (nm1 / sigma) * svd.matrixV().col(i) * (svd.matrixV().col(i).dot(delta));
        }
    }
    if (is_zero_direction(w, data.scale())) {
        throw DegenerateDirectionError("mdp_direction: direction collapsed under rank truncation");
    }
    return w;
}

PilingFit has_complete_piling(const Dataset& data, const Eigen::VectorXd& v, double tol) {
    if (v.size() != data.dim()) throw DimensionMismatchError("has_complete_piling: dimension mismatch");
    if (is_zero_direction(v, data.scale())) {
        throw InvalidDirectionError("has_complete_piling: zero direction");
    }
    const Eigen::VectorXd proj = data.points() * v;
    const double n = static_cast<double>(data.n());
    double sum_y = 0.0, dot_py = 0.0;
    for (Eigen::Index i = 0; i < data.n(); ++i) {
        sum_y += data.labels()(i);
        dot_py += proj(i) * data.labels()(i);
    }
    const double sum_p = proj.sum();
    // normal equations for proj ~ a y + b; determinant is 4 n+ n- > 0
    const double det = n * n - sum_y * sum_y;
    PilingFit fit;
    fit.a = (n * dot_py - sum_y * sum_p) / det;
    fit.b = (sum_p - fit.a * sum_y) / n;
    double resid = 0.0;
    for (Eigen::Index i = 0; i < data.n(); ++i) {
        resid = std::max(resid, std::abs(proj(i) - fit.a * data.labels()(i) - fit.b));
    }
    fit.max_residual = resid;
    const double threshold = tol * v.norm() * data.scale();
    fit.piles = resid <= threshold && std::abs(fit.a) > threshold;
    return fit;
}

namespace {

HullWitness witness_from_weights(const Dataset& data, const Eigen::VectorXd& lp,
                                 const Eigen::VectorXd& lm) {
    HullWitness w;
    w.lambda_plus = lp / lp.sum();
    w.lambda_minus = lm / lm.sum();
    w.c_plus = data.class_points(+1).transpose() * w.lambda_plus;
    w.c_minus = data.class_points(-1).transpose() * w.lambda_minus;
    return w;
}

} // namespace

ConvexDirectionCheck is_convex_direction(const Dataset& data, const Eigen::VectorXd& v, double tol) {
    if (v.size() != data.dim()) throw DimensionMismatchError("is_convex_direction: dimension mismatch");
    if (is_zero_direction(v, data.scale())) {
        throw InvalidDirectionError("is_convex_direction: zero direction");
    }
    const Eigen::Index np = data.n_plus();
    const Eigen::Index nm = data.n_minus();
    const Eigen::Index d = data.dim();
    const Eigen::VectorXd vu = v / v.norm();

    // variables: lambda+ (np), lambda- (nm), a_pos, a_neg  (a = a_pos - a_neg)
    const Eigen::Index cols = np + nm + 2;
    Eigen::MatrixXd a_eq = Eigen::MatrixXd::Zero(d + 2, cols);
    Eigen::VectorXd b_eq = Eigen::VectorXd::Zero(d + 2);
    const Eigen::MatrixXd plus_t = data.class_points(+1).transpose();
    const Eigen::MatrixXd minus_t = data.class_points(-1).transpose();
    a_eq.block(0, 0, d, np) = plus_t;
    a_eq.block(0, np, d, nm) = -minus_t;
    a_eq.block(0, np + nm, d, 1) = -vu;
    a_eq.block(0, np + nm + 1, d, 1) = vu;
    a_eq.row(d).segment(0, np).setOnes();
    b_eq(d) = 1.0;
    a_eq.row(d + 1).segment(np, nm).setOnes();
    b_eq(d + 1) = 1.0;

    const double a_floor = tol * std::max(1.0, data.scale());
    ConvexDirectionCheck out;
    for (int orientation = 0; orientation < 2; ++orientation) {
        Eigen::VectorXd cost = Eigen::VectorXd::Zero(cols);
        // maximize a, then (second pass) maximize -a
        cost(np + nm) = orientation == 0 ? -1.0 : 1.0;
        cost(np + nm + 1) = orientation == 0 ? 1.0 : -1.0;
        const LpResult lp = solve_lp(a_eq, b_eq, cost);
        if (lp.status == LpResult::Status::Infeasible) return out;
        double a_val;
        if (lp.status == LpResult::Status::Unbounded) {
            // |a| * |v_unit| is bounded by the diameter; unbounded cannot occur
            throw SolverError("is_convex_direction: unexpected unbounded LP");
        }
        a_val = lp.x(np + nm) - lp.x(np + nm + 1);
        if ((orientation == 0 && a_val > a_floor) || (orientation == 1 && a_val < -a_floor)) {
            out.member = true;
            out.a = a_val / v.norm();  // scale back to the caller's v
            out.witness = witness_from_weights(data, lp.x.segment(0, np), lp.x.segment(np, nm));
            return out;
        }
    }
    return out;
}

std::optional<CpIntersection> cp_intersection_lp(const Dataset& data) {
    const Eigen::Index n = data.n();
    const Eigen::Index d = data.dim();
    const Eigen::Index np = data.n_plus();
    const Eigen::Index nm = data.n_minus();

    // variables: v (split d+d), b (split 2), alpha (np), beta (nm)
    // rows: piling X v + 1 b = y (n), hull combination = v (d), equal weight sums (1)
    const Eigen::Index cols = 2 * d + 2 + np + nm;
    Eigen::MatrixXd a_eq = Eigen::MatrixXd::Zero(n + d + 1, cols);
    Eigen::VectorXd b_eq = Eigen::VectorXd::Zero(n + d + 1);

    a_eq.block(0, 0, n, d) = data.points();
    a_eq.block(0, d, n, d) = -data.points();
    a_eq.block(0, 2 * d, n, 1).setOnes();
    a_eq.block(0, 2 * d + 1, n, 1) = -Eigen::VectorXd::Ones(n);
    for (Eigen::Index i = 0; i < n; ++i) b_eq(i) = data.labels()(i);

    a_eq.block(n, 0, d, d) = -Eigen::MatrixXd::Identity(d, d);
    a_eq.block(n, d, d, d) = Eigen::MatrixXd::Identity(d, d);
    a_eq.block(n, 2 * d + 2, d, np) = data.class_points(+1).transpose();
    a_eq.block(n, 2 * d + 2 + np, d, nm) = -data.class_points(-1).transpose();

    a_eq.row(n + d).segment(2 * d + 2, np).setOnes();
    a_eq.row(n + d).segment(2 * d + 2 + np, nm) = -Eigen::RowVectorXd::Ones(nm);

    const LpResult lp = solve_lp_feasibility(a_eq, b_eq);
    if (lp.status != LpResult::Status::Optimal) return std::nullopt;

    CpIntersection res;
    res.v = lp.x.segment(0, d) - lp.x.segment(d, d);
    res.b = -(lp.x(2 * d) - lp.x(2 * d + 1));  // v.x_i = y_i + b convention
    const Eigen::VectorXd alpha = lp.x.segment(2 * d + 2, np);
    const Eigen::VectorXd beta = lp.x.segment(2 * d + 2 + np, nm);
    if (alpha.sum() <= 0.0 || beta.sum() <= 0.0) return std::nullopt;  // cannot happen: v != 0
    res.witness = witness_from_weights(data, alpha, beta);
    return res;
}

bool hulls_intersect(const Dataset& data) {
    const Eigen::Index d = data.dim();
    const Eigen::Index np = data.n_plus();
    const Eigen::Index nm = data.n_minus();
    Eigen::MatrixXd a_eq = Eigen::MatrixXd::Zero(d + 2, np + nm);
    Eigen::VectorXd b_eq = Eigen::VectorXd::Zero(d + 2);
    a_eq.block(0, 0, d, np) = data.class_points(+1).transpose();
    a_eq.block(0, np, d, nm) = -data.class_points(-1).transpose();
    a_eq.row(d).segment(0, np).setOnes();
    b_eq(d) = 1.0;
    a_eq.row(d + 1).segment(np, nm).setOnes();
    b_eq(d + 1) = 1.0;
    return solve_lp_feasibility(a_eq, b_eq).status == LpResult::Status::Optimal;
}

} // namespace svmgeom
