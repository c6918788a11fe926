#include "maglab/finite_space.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maglab/errors.hpp"

namespace maglab {

FiniteMetricSpace::FiniteMetricSpace(Eigen::MatrixXd dist_in,
                                     std::optional<Eigen::VectorXd> measure_in,
                                     std::vector<std::string> labels_in) {
    if (dist_in.rows() != dist_in.cols()) {
        throw SchemaError("distance matrix must be square");
    }
    int n = static_cast<int>(dist_in.rows());
    if (n == 0) throw SchemaError("space needs at least one point");
    dist = std::move(dist_in);
    if (measure_in) {
        if (measure_in->size() != n) {
            throw DimensionMismatch("measure length does not match point count");
        }
        measure = std::move(*measure_in);
    } else {
        measure = Eigen::VectorXd::Ones(n);
    }
    for (int i = 0; i < n; ++i) {
        if (!(measure[i] > 0.0)) throw SchemaError("measure weights must be positive");
    }
    if (labels_in.empty()) {
        labels.resize(n);
        for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
    } else {
        if (static_cast<int>(labels_in.size()) != n) {
            throw DimensionMismatch("label count does not match point count");
        }
        labels = std::move(labels_in);
    }
}

std::string MetricReport::describe() const {
    std::ostringstream out;
    for (const auto& v : symmetry) {
        out << "symmetry violation at (" << v.i << "," << v.j << "): |d(i,j)-d(j,i)| = "
            << v.difference << "\n";
    }
    for (const auto& v : triangle) {
        out << "triangle violation at (" << v.i << "," << v.j << "," << v.k
            << "): excess " << v.excess << "\n";
    }
    for (const auto& msg : other) out << msg << "\n";
    return out.str();
}

MetricReport validate_metric(const FiniteMetricSpace& space, double tol) {
    MetricReport report;
    const auto& d = space.dist;
    int n = space.size();
    for (int i = 0; i < n; ++i) {
        if (std::abs(d(i, i)) > tol) {
            report.other.push_back("nonzero diagonal at " + std::to_string(i));
        }
        for (int j = 0; j < n; ++j) {
            if (d(i, j) < -tol) {
                report.other.push_back("negative distance at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double diff = std::abs(d(i, j) - d(j, i));
            if (diff > tol) report.symmetry.push_back({i, j, diff});
            if (!(d(i, j) > tol) ) {
                report.other.push_back("zero distance between distinct points (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                double excess = d(i, j) - d(i, k) - d(k, j);
                if (excess > tol) report.triangle.push_back({i, j, k, excess});
            }
        }
    }
    return report;
}

FiniteMetricSpace finite_from_points(const std::vector<std::vector<double>>& coords,
                                     std::optional<std::vector<double>> measure) {
    if (coords.empty()) throw SchemaError("finite_from_points: empty configuration");
    size_t dim = coords.front().size();
    int n = static_cast<int>(coords.size());
    for (const auto& point : coords) {
        if (point.size() != dim) {
            throw DimensionMismatch("finite_from_points: inconsistent coordinate dimensions");
        }
    }
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double sq = 0.0;
            for (size_t c = 0; c < dim; ++c) {
                double delta = coords[i][c] - coords[j][c];
                sq += delta * delta;
            }
            d(i, j) = d(j, i) = std::sqrt(sq);
        }
    }
    std::optional<Eigen::VectorXd> mu;
    if (measure) {
        if (static_cast<int>(measure->size()) != n) {
            throw DimensionMismatch("finite_from_points: measure length mismatch");
        }
        mu = Eigen::Map<const Eigen::VectorXd>(measure->data(), n);
    }
    return FiniteMetricSpace(std::move(d), std::move(mu));
}

namespace {

FiniteMetricSpace from_json_object(const nlohmann::json& obj, bool strict) {
    if (!obj.is_object()) throw SchemaError("finite space file must be a JSON object");
    if (!obj.contains("dist")) throw SchemaError("missing required field 'dist'");

    const auto& dist_field = obj.at("dist");
    if (!dist_field.is_array() || dist_field.empty()) {
        throw SchemaError("'dist' must be a non-empty array");
    }

    Eigen::MatrixXd d;
    if (dist_field.front().is_array()) {
        int n = static_cast<int>(dist_field.size());
        d.resize(n, n);
        for (int i = 0; i < n; ++i) {
            const auto& row = dist_field.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != n) {
                throw SchemaError("'dist' rows must all have the matrix dimension");
            }
            for (int j = 0; j < n; ++j) {
                if (!row.at(j).is_number()) throw SchemaError("'dist' entries must be numbers");
                d(i, j) = row.at(j).get<double>();
            }
        }
    } else {
        // flat row-major
        size_t total = dist_field.size();
        int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(total))));
        if (static_cast<size_t>(n) * n != total) {
            throw SchemaError("flat 'dist' length must be a perfect square");
        }
        d.resize(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const auto& v = dist_field.at(i * n + j);
                if (!v.is_number()) throw SchemaError("'dist' entries must be numbers");
                d(i, j) = v.get<double>();
            }
        }
    }

    std::optional<Eigen::VectorXd> mu;
    if (obj.contains("measure")) {
        const auto& m = obj.at("measure");
        if (!m.is_array()) throw SchemaError("'measure' must be an array");
        Eigen::VectorXd v(m.size());
        for (size_t i = 0; i < m.size(); ++i) {
            if (!m.at(i).is_number()) throw SchemaError("'measure' entries must be numbers");
            v[i] = m.at(i).get<double>();
        }
        mu = std::move(v);
    }

    std::vector<std::string> labels;
    if (obj.contains("labels")) {
        const auto& l = obj.at("labels");
        if (!l.is_array()) throw SchemaError("'labels' must be an array");
        for (const auto& item : l) {
            if (item.is_string()) labels.push_back(item.get<std::string>());
            else labels.push_back(item.dump());
        }
    }

    FiniteMetricSpace space(std::move(d), std::move(mu), std::move(labels));
    if (strict) {
        MetricReport report = validate_metric(space);
        if (!report.ok()) {
            throw MetricViolation("metric axioms violated:\n" + report.describe());
        }
    }
    return space;
}

}  // namespace

FiniteMetricSpace parse_finite_json(const std::string& text, bool strict) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    return from_json_object(obj, strict);
}

FiniteMetricSpace parse_finite_file(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_finite_json(buffer.str(), strict);
}

std::string finite_to_json(const FiniteMetricSpace& space) {
    nlohmann::ordered_json obj;
    obj["labels"] = space.labels;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < space.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < space.size(); ++j) row.push_back(space.dist(i, j));
        rows.push_back(std::move(row));
    }
    obj["dist"] = std::move(rows);
    obj["measure"] = std::vector<double>(space.measure.data(),
                                         space.measure.data() + space.measure.size());
    return obj.dump(2);
}

}  // namespace maglab
