#include "gdesign/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gdesign {

Eigen::MatrixXd build_operator(const Graph& g, OperatorKind kind, bool strict) {
    const int n = g.n();
    if (kind == OperatorKind::kRandomWalk && strict && !g.is_regular())
        throw std::invalid_argument(
            "random-walk operator of a non-regular graph is not symmetric; "
            "use the normalized-symmetric kind or disable strict mode");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (kind == OperatorKind::kRandomWalk)
                m(u, v) = 1.0 / g.degree(v);
            else
                m(u, v) = 1.0 / std::sqrt(double(g.degree(u)) * g.degree(v));
        }
    return m;
}

namespace {

// orders eigen indices (constant pinned first) and builds frequency classes
void finalize(Spectrum& s, double eps_deg) {
    const int n = s.n;
    s.frequency.resize(n);
    for (int i = 0; i < n; ++i) s.frequency[i] = std::abs(s.eigenvalues[i] + 1.0);
    s.column_mean = s.eigenvectors.colwise().mean();

    // Perron index: largest eigenvalue of AD^-1, i.e. largest lambda of L.
    int constant;
    s.eigenvalues.maxCoeff(&constant);

    s.ordering.resize(n);
    std::iota(s.ordering.begin(), s.ordering.end(), 0);
    std::erase(s.ordering, constant);
    std::sort(s.ordering.begin(), s.ordering.end(), [&](int a, int b) {
        if (s.frequency[a] != s.frequency[b]) return s.frequency[a] > s.frequency[b];
        if (s.eigenvalues[a] != s.eigenvalues[b]) return s.eigenvalues[a] > s.eigenvalues[b];
        return a < b;
    });
    s.ordering.insert(s.ordering.begin(), constant);

    s.classes = frequency_classes(s, eps_deg, &s.clustering_ambiguity);
}

}  // namespace

std::vector<FrequencyClass> frequency_classes(const Spectrum& s, double eps_deg,
                                              bool* ambiguity) {
    std::vector<FrequencyClass> classes;
    classes.push_back({1.0, {s.ordering[0]}});
    if (ambiguity) *ambiguity = false;
    FrequencyClass cur{0.0, {}};
    double prev = 0.0;
    for (size_t k = 1; k < s.ordering.size(); ++k) {
        int idx = s.ordering[k];
        double f = s.frequency[idx];
        if (!cur.members.empty()) {
            double gap = prev - f;
            if (ambiguity && gap > eps_deg / 2 && gap <= 2 * eps_deg) *ambiguity = true;
            if (gap > eps_deg) {
                cur.frequency /= cur.members.size();
                classes.push_back(std::move(cur));
                cur = {0.0, {}};
            }
        }
        cur.frequency += f;
        cur.members.push_back(idx);
        prev = f;
    }
    if (!cur.members.empty()) {
        cur.frequency /= cur.members.size();
        classes.push_back(std::move(cur));
    }
    return classes;
}

Spectrum eigendecompose(const Eigen::MatrixXd& m, double eps_eig, double eps_deg) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw std::invalid_argument("eigendecompose: matrix not square");
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > eps_eig)
        throw std::invalid_argument("eigendecompose: matrix not symmetric within eps_eig");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecompose: eigensolver failed to converge");

    Spectrum s;
    s.n = n;
    s.eigenvectors = solver.eigenvectors();
    s.eigenvalues = solver.eigenvalues().array() - 1.0;

    // residual and range gates
    for (int i = 0; i < n; ++i) {
        double theta = s.eigenvalues[i] + 1.0;
        double resid = (m * s.eigenvectors.col(i) - theta * s.eigenvectors.col(i)).norm();
        if (resid > eps_eig * std::max(1.0, m.norm()))
            throw std::runtime_error("eigendecompose: residual check failed");
        if (s.eigenvalues[i] < -2.0 - eps_eig || s.eigenvalues[i] > eps_eig)
            throw std::runtime_error("eigendecompose: eigenvalue outside [-2, 0]");
    }
    finalize(s, eps_deg);
    return s;
}

Spectrum spectrum_of(const Graph& g, OperatorKind kind, double eps_eig, double eps_deg) {
    const bool regular = g.is_regular();
    if (regular || kind == OperatorKind::kNormalizedSymmetric)
        return eigendecompose(build_operator(g, kind, /*strict=*/false), eps_eig, eps_deg);

    // non-regular random walk: decompose N = D^-1/2 A D^-1/2, map through D^1/2
    Spectrum s = eigendecompose(build_operator(g, OperatorKind::kNormalizedSymmetric, false),
                                eps_eig, eps_deg);
    Eigen::VectorXd scale(g.n());
    for (int v = 0; v < g.n(); ++v) scale[v] = std::sqrt(double(g.degree(v)));
    for (int i = 0; i < s.n; ++i) {
        Eigen::VectorXd phi = scale.asDiagonal() * s.eigenvectors.col(i);
        s.eigenvectors.col(i) = phi / phi.norm();
    }
    s.column_mean = s.eigenvectors.colwise().mean();
    s.degree_weighted_basis = true;
    return s;
}

}  // namespace gdesign
