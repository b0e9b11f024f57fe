#include "svmgeom/linear_model.hpp"

#include <algorithm>
#include <cmath>

#include "svmgeom/errors.hpp"

namespace svmgeom {

bool is_zero_direction(const Eigen::VectorXd& v, double reference_scale) {
    return v.norm() <= kZeroDirectionTol * std::max(1.0, reference_scale);
}

double direction_angle(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    if (u.size() != v.size()) throw DimensionMismatchError("direction_angle: size mismatch");
    const double nu = u.norm();
    const double nv = v.norm();
    if (is_zero_direction(u) || is_zero_direction(v)) {
        throw InvalidDirectionError("direction_angle: zero direction");
    }
    const double c = std::clamp(std::abs(u.dot(v)) / (nu * nv), 0.0, 1.0);
    return std::acos(c);
}

bool directions_equivalent(const Eigen::VectorXd& u, const Eigen::VectorXd& v, double tol) {
    return direction_angle(u, v) <= tol;
}

int predict(const LinearModel& model, const Eigen::VectorXd& x) {
    if (x.size() != model.w.size()) throw DimensionMismatchError("predict: dimension mismatch");
    return model.decision(x) >= 0.0 ? 1 : -1;
}

Eigen::VectorXi predict(const LinearModel& model, const Eigen::MatrixXd& points) {
    if (points.cols() != model.w.size()) throw DimensionMismatchError("predict: dimension mismatch");
    const Eigen::VectorXd f = points * model.w + Eigen::VectorXd::Constant(points.rows(), model.b);
    Eigen::VectorXi out(points.rows());
    for (Eigen::Index i = 0; i < points.rows(); ++i) out[i] = f[i] >= 0.0 ? 1 : -1;
    return out;
}

double classification_error(const LinearModel& model, const Dataset& data) {
    const Eigen::VectorXi pred = predict(model, data.points());
    Eigen::Index wrong = 0;
    for (Eigen::Index i = 0; i < data.n(); ++i) {
        if (pred[i] != data.labels()[i]) ++wrong;
    }
    return static_cast<double>(wrong) / static_cast<double>(data.n());
}

} // namespace svmgeom
