#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gdesign/graph.hpp"

namespace gdesign {

inline constexpr double kDefaultEpsEig = 1e-10;
inline constexpr double kDefaultEpsDeg = 1e-8;
inline constexpr double kDefaultEpsInt = 1e-9;

enum class OperatorKind { kRandomWalk, kNormalizedSymmetric };

// M[u][v] = 1/deg(v) (random walk) or 1/sqrt(deg u * deg v) (normalized) on
// edges, 0 elsewhere. In strict mode the random-walk kind rejects non-regular
// graphs, where AD^-1 is not symmetric.
Eigen::MatrixXd build_operator(const Graph& g, OperatorKind kind, bool strict = true);

struct FrequencyClass {
    double frequency;          // shared |lambda + 1| value
    std::vector<int> members;  // eigen indices into Spectrum columns
    int dimension() const { return static_cast<int>(members.size()); }
};

// Full spectrum of L = AD^-1 - I. Eigenvalues live in [-2, 0]; the frequency
// of an eigenvector is |lambda + 1| and the ordering lists eigen indices by
// non-increasing frequency with the constant (Perron) vector pinned first.
struct Spectrum {
    int n = 0;
    Eigen::VectorXd eigenvalues;   // lambda_i, aligned with eigenvector columns
    Eigen::MatrixXd eigenvectors;  // column i is phi_i
    Eigen::VectorXd frequency;     // |lambda_i + 1|
    Eigen::VectorXd column_mean;   // mean of each eigenvector over V
    std::vector<int> ordering;
    std::vector<FrequencyClass> classes;  // classes[0] is the constant class
    bool degree_weighted_basis = false;   // set for non-regular graphs
    bool clustering_ambiguity = false;    // suspicious frequency gap seen

    int constant_index() const { return ordering[0]; }
};

// eigendecomposition of a symmetric averaging operator (spectrum in [-1,1]);
// throws if the matrix is not symmetric within eps_eig or a residual check fails
Spectrum eigendecompose(const Eigen::MatrixXd& m, double eps_eig = kDefaultEpsEig,
                        double eps_deg = kDefaultEpsDeg);

// Spectrum of the random-walk operator of g. Non-regular graphs are handled by
// similarity: the normalized-symmetric operator is decomposed and eigenvectors
// mapped through D^{1/2}, which makes them orthonormal only in the
// degree-weighted inner product (degree_weighted_basis is set).
Spectrum spectrum_of(const Graph& g, OperatorKind kind = OperatorKind::kRandomWalk,
                     double eps_eig = kDefaultEpsEig, double eps_deg = kDefaultEpsDeg);

// regroups eigen indices 2..n by frequency with gap clustering at eps_deg
std::vector<FrequencyClass> frequency_classes(const Spectrum& s, double eps_deg,
                                              bool* ambiguity = nullptr);

}  // namespace gdesign
