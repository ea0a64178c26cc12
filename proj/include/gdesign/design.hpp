#pragma once

#include <optional>
#include <vector>

#include "gdesign/spectral.hpp"

namespace gdesign {

// Weighted vertex subset with sum(weights) = 1 (forced by the constant
// eigenfunction). Weights may be negative; the Theorem requires positivity
// and reports track it separately.
struct Design {
    VertexSubset subset;
    std::vector<double> weights;  // aligned with subset.members
    bool equal_weights = false;

    static Design equal(VertexSubset subset);
    static Design weighted(VertexSubset subset, std::vector<double> weights);
    bool all_weights_positive() const;
};

// signed design measure mu = sum a_w delta_w - 1/n as a dense vector
Eigen::VectorXd design_measure(const Design& d, int n);

struct DesignReport {
    int strength_K = 0;
    double lambda_star = 0.0;            // frequency of the last fully integrated class
    std::vector<double> class_residuals; // ||P_j mu||, one per frequency class
    std::optional<int> failing_class;    // index into Spectrum.classes
    int integrated_boundary = 0;         // sum of dims of fully integrated classes
    int failing_dimension = 0;           // dim of the failing class, 0 if none
    double mu_norm = 0.0;
    bool all_weights_positive = true;
    bool degree_weighted_basis = false;  // propagated non-regular caveat
};

// r_j = ||P_j mu||_2 with P_j the projector onto the class eigenspace;
// basis-independent for orthonormal spectra (regular graphs)
std::vector<double> quadrature_residuals(const Spectrum& s, const Design& d);

// Scans classes in frequency order, accumulating full dimensions while the
// class residual stays below eps_int * ||mu||; the first failing class
// contributes dim - 1 (its integrated subspace has codimension exactly one,
// and an admissible ordering may place the failing direction last).
DesignReport design_strength(const Spectrum& s, const Design& d,
                             double eps_int = kDefaultEpsInt);

// the lambda fed to the Theorem checker; 0 if every class integrates
double threshold(const DesignReport& report);

}  // namespace gdesign
