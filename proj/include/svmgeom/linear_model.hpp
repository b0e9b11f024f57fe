#pragma once

#include <Eigen/Core>

#include "svmgeom/dataset.hpp"

namespace svmgeom {

/// Linear decision rule f(x) = w.x + b, classification sign(f); sign(0) -> +1.
struct LinearModel {
    Eigen::VectorXd w;
    double b = 0.0;

    double decision(const Eigen::VectorXd& x) const { return w.dot(x) + b; }
};

// direction treated as degenerate when its norm falls below this
inline constexpr double kZeroDirectionTol = 1e-12;

bool is_zero_direction(const Eigen::VectorXd& v, double reference_scale = 1.0);

/// Angle in [0, pi/2] between the lines spanned by u and v.
double direction_angle(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

bool directions_equivalent(const Eigen::VectorXd& u, const Eigen::VectorXd& v, double tol);

int predict(const LinearModel& model, const Eigen::VectorXd& x);
Eigen::VectorXi predict(const LinearModel& model, const Eigen::MatrixXd& points);

/// Fraction of points whose predicted label differs from the given one.
double classification_error(const LinearModel& model, const Dataset& data);

} // namespace svmgeom
