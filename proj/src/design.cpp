#include "gdesign/design.hpp"

#include <cmath>
#include <stdexcept>

namespace gdesign {

namespace {
constexpr double kWeightSumTol = 1e-12;
}

Design Design::equal(VertexSubset subset) {
    Design d;
    d.weights.assign(subset.members.size(), 1.0 / subset.members.size());
    d.subset = std::move(subset);
    d.equal_weights = true;
    return d;
}

Design Design::weighted(VertexSubset subset, std::vector<double> weights) {
    if (weights.size() != subset.members.size())
        throw std::invalid_argument("design: one weight per subset member required");
    double sum = 0.0;
    for (double w : weights) sum += w;
    if (std::abs(sum - 1.0) > kWeightSumTol)
        throw std::invalid_argument("design: weights must sum to 1");
    Design d;
    d.subset = std::move(subset);
    d.weights = std::move(weights);
    d.equal_weights = true;
    for (double w : d.weights)
        if (std::abs(w - d.weights[0]) > kWeightSumTol) d.equal_weights = false;
    return d;
}

bool Design::all_weights_positive() const {
    for (double w : weights)
        if (w <= 0.0) return false;
    return true;
}

Eigen::VectorXd design_measure(const Design& d, int n) {
    Eigen::VectorXd mu = Eigen::VectorXd::Constant(n, -1.0 / n);
    for (size_t i = 0; i < d.weights.size(); ++i) mu[d.subset.members[i]] += d.weights[i];
    return mu;
}

std::vector<double> quadrature_residuals(const Spectrum& s, const Design& d) {
    if (d.subset.members.back() >= s.n)
        throw std::invalid_argument("quadrature_residuals: design does not fit the spectrum");
    Eigen::VectorXd mu = design_measure(d, s.n);
    std::vector<double> rs;
    rs.reserve(s.classes.size());
    for (const auto& cls : s.classes) {
        double r2 = 0.0;
        for (int i : cls.members) {
            double e = s.eigenvectors.col(i).dot(mu);
            r2 += e * e;
        }
        rs.push_back(std::sqrt(r2));
    }
    return rs;
}

DesignReport design_strength(const Spectrum& s, const Design& d, double eps_int) {
    DesignReport rep;
    rep.class_residuals = quadrature_residuals(s, d);
    rep.mu_norm = design_measure(d, s.n).norm();
    rep.all_weights_positive = d.all_weights_positive();
    rep.degree_weighted_basis = s.degree_weighted_basis;

    if (rep.mu_norm <= kWeightSumTol) {  // the uniform design integrates everything
        rep.strength_K = s.n;
        rep.integrated_boundary = s.n;
        rep.lambda_star = 0.0;
        return rep;
    }
    const double gate = eps_int * rep.mu_norm;
    rep.lambda_star = 1.0;
    for (size_t j = 0; j < s.classes.size(); ++j) {
        const int dim = s.classes[j].dimension();
        if (rep.class_residuals[j] <= gate) {
            rep.strength_K += dim;
            rep.integrated_boundary += dim;
            rep.lambda_star = s.classes[j].frequency;
        } else {
            rep.failing_class = static_cast<int>(j);
            rep.failing_dimension = dim;
            rep.strength_K += dim - 1;
            if (j == 0) rep.lambda_star = 0.0;  // even the constant fails (non-regular)
            break;
        }
    }
    if (!rep.failing_class) rep.lambda_star = 0.0;
    return rep;
}

double threshold(const DesignReport& report) { return report.lambda_star; }

}  // namespace gdesign
