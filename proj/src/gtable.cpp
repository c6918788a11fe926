#include "maglab/gtable.hpp"

#include <algorithm>

namespace maglab {

namespace {

// All (k_1, ..., k_j) with sum_l l*k_l = j, in lexicographic order.
void enumerate_partitions(int j, int part, std::vector<int>& current,
                          std::vector<std::vector<int>>& out) {
    if (part > static_cast<int>(current.size())) {
        if (j == 0) out.push_back(current);
        return;
    }
    int max_count = j / part;
    for (int count = 0; count <= max_count; ++count) {
        current[part - 1] = count;
        enumerate_partitions(j - count * part, part + 1, current, out);
    }
    current[part - 1] = 0;
}

NuPolynomial falling_factorial(unsigned k) {
    NuPolynomial poly{Rational(1)};
    for (unsigned i = 0; i < k; ++i) {
        // multiply by (nu - i)
        NuPolynomial next(poly.size() + 1, Rational(0));
        for (size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] += poly[d];
            next[d] -= Rational(i) * poly[d];
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace

GTable gj_table(int max_j) {
    if (max_j < 0) throw OrderExceeded("gj_table: order must be non-negative");
    GTable table;
    table.max_j = max_j;
    table.rows.resize(static_cast<size_t>(max_j) + 1);
    table.rows[0].push_back(GEntry{{}, NuPolynomial{Rational(1)}});
    for (int j = 1; j <= max_j; ++j) {
        std::vector<std::vector<int>> partitions;
        std::vector<int> current(j, 0);
        enumerate_partitions(j, 1, current, partitions);
        std::sort(partitions.begin(), partitions.end());
        for (const auto& k : partitions) {
            unsigned total = 0;
            for (int kl : k) total += static_cast<unsigned>(kl);
            NuPolynomial coeff = falling_factorial(total);
            Rational denom(1);
            for (int kl : k) denom *= Rational(factorial(static_cast<unsigned>(kl)));
            for (Rational& c : coeff) c /= denom;
            table.rows[j].push_back(GEntry{k, std::move(coeff)});
        }
    }
    return table;
}

}  // namespace maglab
