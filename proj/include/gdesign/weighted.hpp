#pragma once

#include <optional>

#include "gdesign/design.hpp"

namespace gdesign {

inline constexpr double kDefaultEpsSing = 1e-10;

struct WeightedSolution {
    VertexSubset subset;            // k vertices
    std::vector<int> eigen_indices; // k targets, not necessarily the leading k
    std::vector<double> weights;    // may be negative
    double residual = 0.0;          // max quadrature error over the targets
    bool all_weights_positive = false;
};

// Solves sum_j a_j phi_i(v_j) = mean(phi_i) over the given targets. Returns
// nothing when the minor is numerically singular (reciprocal condition number
// below eps_sing).
std::optional<std::vector<double>> solve_weights(const Spectrum& s, const VertexSubset& w,
                                                 const std::vector<int>& targets,
                                                 double eps_sing = kDefaultEpsSing);

// Picks k eigen indices (preferring leading frequencies) and k vertices with a
// nonsingular minor via column-pivoted elimination on the eigenvector matrix,
// then solves for weights. Existence is guaranteed for valid spectra; failure
// indicates an eigensolver defect and throws.
WeightedSolution find_minor_design(const Spectrum& s, int k,
                                   double eps_sing = kDefaultEpsSing);

// |det| of the full eigenvector matrix (1 for an orthonormal basis)
double eigenbasis_determinant_magnitude(const Spectrum& s);

}  // namespace gdesign
