#include "gdesign/weighted.hpp"

#include <cmath>
#include <stdexcept>

namespace gdesign {

namespace {

// quadrature right-hand side for eigenvector i: its global average
double rhs_of(const Spectrum& s, int i) { return s.column_mean[i]; }

double max_residual(const Spectrum& s, const VertexSubset& w,
                    const std::vector<int>& targets, const std::vector<double>& a) {
    double worst = 0.0;
    for (int i : targets) {
        double lhs = 0.0;
        for (size_t j = 0; j < a.size(); ++j) lhs += a[j] * s.eigenvectors(w.members[j], i);
        worst = std::max(worst, std::abs(lhs - rhs_of(s, i)));
    }
    return worst;
}

}  // namespace

std::optional<std::vector<double>> solve_weights(const Spectrum& s, const VertexSubset& w,
                                                 const std::vector<int>& targets,
                                                 double eps_sing) {
    const int k = w.size();
    if (static_cast<int>(targets.size()) != k)
        throw std::invalid_argument("solve_weights: |targets| must equal |subset|");
    Eigen::MatrixXd A(k, k);
    Eigen::VectorXd b(k);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) A(r, c) = s.eigenvectors(w.members[c], targets[r]);
        b[r] = rhs_of(s, targets[r]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double smax = svd.singularValues()[0];
    double smin = svd.singularValues()[k - 1];
    if (smax <= 0.0 || smin / smax < eps_sing) return std::nullopt;  // singular minor
    Eigen::VectorXd a = svd.solve(b);
    return std::vector<double>(a.data(), a.data() + k);
}

WeightedSolution find_minor_design(const Spectrum& s, int k, double eps_sing) {
    const int n = s.n;
    if (k < 1 || k > n) throw std::invalid_argument("find_minor_design: k out of range");

    // Column-pivoted elimination over the eigenvector matrix, visiting rows
    // (eigenfunctions) in frequency order so solutions prefer the leading
    // spectrum. Rows that go numerically to zero are skipped; the Proposition
    // guarantees k pivots exist.
    std::vector<int> chosen_rows, chosen_cols;
    std::vector<Eigen::VectorXd> elim;  // eliminated copies of chosen rows
    std::vector<char> col_used(n, 0);
    for (int oi = 0; oi < n && static_cast<int>(chosen_rows.size()) < k; ++oi) {
        int row = s.ordering[oi];
        Eigen::VectorXd r = s.eigenvectors.col(row);  // row of phi values over V
        for (size_t p = 0; p < chosen_rows.size(); ++p) {
            double factor = r[chosen_cols[p]] / elim[p][chosen_cols[p]];
            r -= factor * elim[p];
        }
        int best_col = -1;
        double best_abs = 0.0;
        for (int c = 0; c < n; ++c)
            if (!col_used[c] && std::abs(r[c]) > best_abs) {
                best_abs = std::abs(r[c]);
                best_col = c;
            }
        if (best_col < 0 || best_abs < eps_sing) continue;  // row dependent on chosen ones
        chosen_rows.push_back(row);
        chosen_cols.push_back(best_col);
        col_used[best_col] = 1;
        elim.push_back(std::move(r));
    }
    if (static_cast<int>(chosen_rows.size()) < k)
        throw std::runtime_error(
            "find_minor_design: no nonsingular minor found; the spectrum violates "
            "orthogonality (eigensolver defect)");

    VertexSubset verts = VertexSubset::of(chosen_cols, n);
    // realign targets to the sorted vertex order for the final solve
    std::vector<int> targets = chosen_rows;
    auto weights = solve_weights(s, verts, targets, eps_sing);
    if (!weights)
        throw std::runtime_error("find_minor_design: pivoted minor unexpectedly singular");

    WeightedSolution sol;
    sol.subset = verts;
    sol.eigen_indices = std::move(targets);
    sol.weights = *weights;
    sol.residual = max_residual(s, sol.subset, sol.eigen_indices, sol.weights);
    sol.all_weights_positive = true;
    for (double w : sol.weights)
        if (w <= 0.0) sol.all_weights_positive = false;
    return sol;
}

double eigenbasis_determinant_magnitude(const Spectrum& s) {
    return std::abs(s.eigenvectors.determinant());
}

}  // namespace gdesign
