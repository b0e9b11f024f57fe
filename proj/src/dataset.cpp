#include "svmgeom/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "svmgeom/errors.hpp"
#include "svmgeom/rng.hpp"

namespace svmgeom {

Dataset::Dataset(Eigen::MatrixXd points, Eigen::VectorXi labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
    const Eigen::Index n = points_.rows();
    if (labels_.size() != n) {
        throw DimensionMismatchError("labels length " + std::to_string(labels_.size()) +
                                     " does not match point count " + std::to_string(n));
    }
    if (n < 2) throw Error("dataset needs at least 2 points, got " + std::to_string(n));
    if (points_.cols() < 1) throw Error("dataset needs at least 1 feature column");
    if (!points_.allFinite()) throw Error("dataset contains non-finite coordinates");

    for (Eigen::Index i = 0; i < n; ++i) {
        if (labels_[i] == 1) {
            idx_plus_.push_back(i);
        } else if (labels_[i] == -1) {
            idx_minus_.push_back(i);
        } else {
            throw Error("label must be +1 or -1, got " + std::to_string(labels_[i]) +
                        " at index " + std::to_string(i));
        }
    }
    if (idx_plus_.empty() || idx_minus_.empty()) {
        throw Error("each class needs at least one point");
    }
    scale_ = std::max(1.0, points_.cwiseAbs().maxCoeff());
}

Eigen::VectorXd Dataset::mean_plus() const {
    Eigen::VectorXd m = Eigen::VectorXd::Zero(dim());
    for (Eigen::Index i : idx_plus_) m += points_.row(i).transpose();
    return m / static_cast<double>(idx_plus_.size());
}

Eigen::VectorXd Dataset::mean_minus() const {
    Eigen::VectorXd m = Eigen::VectorXd::Zero(dim());
    for (Eigen::Index i : idx_minus_) m += points_.row(i).transpose();
    return m / static_cast<double>(idx_minus_.size());
}

Eigen::MatrixXd Dataset::class_points(int label) const {
    const auto& idx = (label >= 0) ? idx_plus_ : idx_minus_;
    Eigen::MatrixXd out(static_cast<Eigen::Index>(idx.size()), dim());
    for (std::size_t k = 0; k < idx.size(); ++k) out.row(static_cast<Eigen::Index>(k)) = points_.row(idx[k]);
    return out;
}

NormalizedDataset normalize_labels(const Dataset& data) {
    if (data.n_plus() >= data.n_minus()) {
        return {Dataset(data.points(), data.labels()), false};
    }
    return {Dataset(data.points(), -data.labels()), true};
}

Dataset transform_dataset(const Dataset& data, const Eigen::MatrixXd& m) {
    if (m.rows() != data.dim() || m.cols() != data.dim()) {
        throw DimensionMismatchError("transform must be " + std::to_string(data.dim()) + "x" +
                                     std::to_string(data.dim()));
    }
    if (!m.allFinite()) throw Error("transform matrix contains non-finite entries");
    return Dataset(data.points() * m.transpose(), data.labels());
}

void GaussianPairConfig::validate() const {
    if (n_plus < 1 || n_minus < 1) throw ConfigError("class counts must be >= 1");
    if (d < 1) throw ConfigError("dimension must be >= 1");
    if (!(separation >= 0.0)) throw ConfigError("separation must be >= 0");
}

Dataset generate_gaussian_pair(const GaussianPairConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const Eigen::Index n = cfg.n_plus + cfg.n_minus;
    Eigen::MatrixXd x(n, cfg.d);
    Eigen::VectorXi y(n);
    const double half = cfg.separation / 2.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const bool pos = i < cfg.n_plus;
        for (Eigen::Index j = 0; j < cfg.d; ++j) x(i, j) = rng.gaussian();
        x(i, 0) += pos ? half : -half;
        y[i] = pos ? 1 : -1;
    }
    return Dataset(std::move(x), std::move(y));
}

namespace {

double parse_double(const std::string& field, long row) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("cannot parse number '" + field + "'", row);
    }
    return value;
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

Dataset load_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");

    std::vector<std::vector<double>> rows;
    std::vector<int> labels;
    std::string line;
    long row_no = 0;
    Eigen::Index d = -1;
    while (std::getline(in, line)) {
        ++row_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_csv_row(line);
        if (fields.size() < 2) throw ParseError("row needs at least one feature and a label", row_no);
        const Eigen::Index row_d = static_cast<Eigen::Index>(fields.size()) - 1;
        if (d < 0) {
            d = row_d;
        } else if (row_d != d) {
            throw ParseError("inconsistent column count: expected " + std::to_string(d + 1) +
                                 ", got " + std::to_string(fields.size()),
                             row_no);
        }
        std::vector<double> coords(static_cast<std::size_t>(d));
        for (Eigen::Index j = 0; j < d; ++j) {
            coords[static_cast<std::size_t>(j)] = parse_double(fields[static_cast<std::size_t>(j)], row_no);
        }
        // label must be exactly +-1 (allow a leading '+')
        std::string lab = fields.back();
        if (!lab.empty() && lab.front() == '+') lab.erase(lab.begin());
        const double lv = parse_double(lab, row_no);
        if (lv != 1.0 && lv != -1.0) {
            throw ParseError("label must be +1 or -1, got '" + fields.back() + "'", row_no);
        }
        rows.push_back(std::move(coords));
        labels.push_back(lv > 0 ? 1 : -1);
    }
    if (rows.empty()) throw ParseError("file '" + path + "' holds no data rows");

    Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), d);
    Eigen::VectorXi y(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (Eigen::Index j = 0; j < d; ++j) x(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
        y[static_cast<Eigen::Index>(i)] = labels[i];
    }
    return Dataset(std::move(x), std::move(y));
}

void save_dataset_csv(const Dataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out.precision(17);
    for (Eigen::Index i = 0; i < data.n(); ++i) {
        for (Eigen::Index j = 0; j < data.dim(); ++j) out << data.points()(i, j) << ',';
        out << data.labels()[i] << '\n';
    }
    if (!out) throw Error("write to '" + path + "' failed");
}

} // namespace svmgeom
