#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace svmgeom {

/// Two-class dataset: rows of `points` are observations, labels are +-1.
/// Immutable after construction; the constructor validates n >= 2, at least
/// one point per class and finite coordinates.
class Dataset {
public:
    Dataset(Eigen::MatrixXd points, Eigen::VectorXi labels);

    const Eigen::MatrixXd& points() const { return points_; }
    const Eigen::VectorXi& labels() const { return labels_; }

    Eigen::Index n() const { return points_.rows(); }
    Eigen::Index dim() const { return points_.cols(); }
    Eigen::Index n_plus() const { return static_cast<Eigen::Index>(idx_plus_.size()); }
    Eigen::Index n_minus() const { return static_cast<Eigen::Index>(idx_minus_.size()); }

    const std::vector<Eigen::Index>& idx_plus() const { return idx_plus_; }
    const std::vector<Eigen::Index>& idx_minus() const { return idx_minus_; }

    Eigen::VectorXd mean_plus() const;
    Eigen::VectorXd mean_minus() const;
    Eigen::VectorXd mean() const { return points_.colwise().mean(); }

    // max absolute coordinate, floored at 1; tolerance reference scale
    double scale() const { return scale_; }

    bool balanced() const { return n_plus() == n_minus(); }

    // rows of one class, in index order
    Eigen::MatrixXd class_points(int label) const;

private:
    Eigen::MatrixXd points_;
    Eigen::VectorXi labels_;
    std::vector<Eigen::Index> idx_plus_;
    std::vector<Eigen::Index> idx_minus_;
    double scale_ = 1.0;
};

/// Result of enforcing the n+ >= n- convention. `flipped` records whether the
/// labels were negated to get there.
struct NormalizedDataset {
    Dataset data;
    bool flipped;
};

NormalizedDataset normalize_labels(const Dataset& data);

/// Applies x -> m * x to every observation; labels unchanged.
Dataset transform_dataset(const Dataset& data, const Eigen::MatrixXd& m);

struct GaussianPairConfig {
    Eigen::Index n_plus = 1;
    Eigen::Index n_minus = 1;
    Eigen::Index d = 1;
    double separation = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Identity-covariance Gaussian pair with class means at +-(separation/2)*e1.
/// Bit-reproducible per seed.
Dataset generate_gaussian_pair(const GaussianPairConfig& cfg);

/// CSV: one observation per row, d feature columns then a +-1 label column.
Dataset load_dataset_csv(const std::string& path);
void save_dataset_csv(const Dataset& data, const std::string& path);

} // namespace svmgeom
