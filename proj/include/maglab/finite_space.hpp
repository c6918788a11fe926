#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace maglab {

// Finite metric measure space: point labels, a symmetric distance matrix with
// zero diagonal, and positive measure weights (all 1 by default).
struct FiniteMetricSpace {
    std::vector<std::string> labels;
    Eigen::MatrixXd dist;
    Eigen::VectorXd measure;

    FiniteMetricSpace() = default;
    FiniteMetricSpace(Eigen::MatrixXd dist, std::optional<Eigen::VectorXd> measure = {},
                      std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(dist.rows()); }
};

struct SymmetryViolation {
    int i, j;
    double difference;
};

struct TriangleViolation {
    int i, j, k;  // dist(i,j) > dist(i,k) + dist(k,j)
    double excess;
};

struct MetricReport {
    std::vector<SymmetryViolation> symmetry;
    std::vector<TriangleViolation> triangle;
    std::vector<std::string> other;  // negative entries, nonzero diagonal, ...

    bool ok() const { return symmetry.empty() && triangle.empty() && other.empty(); }
    std::string describe() const;
};

// Lists all symmetry and triangle-inequality violations (with indices).
MetricReport validate_metric(const FiniteMetricSpace& space, double tol = 1e-12);

// Pairwise Euclidean distances of a point configuration (rows = points).
// Throws DimensionMismatch when rows have inconsistent dimension or the
// measure length does not match.
FiniteMetricSpace finite_from_points(const std::vector<std::vector<double>>& coords,
                                     std::optional<std::vector<double>> measure = {});

// Structured-text (JSON) I/O. Schema: {"labels": [...], "dist": row-major
// symmetric matrix (nested rows or flat), "measure": optional positive list}.
// Throws SchemaError for malformed input; with strict = true also throws
// MetricViolation when the metric axioms fail.
FiniteMetricSpace parse_finite_file(const std::string& path, bool strict = false);
FiniteMetricSpace parse_finite_json(const std::string& text, bool strict = false);
std::string finite_to_json(const FiniteMetricSpace& space);

}  // namespace maglab
