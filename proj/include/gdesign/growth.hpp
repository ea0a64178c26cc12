#pragma once

#include <vector>

#include "gdesign/design.hpp"

namespace gdesign {

// |{x : d(x,W) <= k}| for k = 0..diameter (padded with n past the
// eccentricity of W)
struct GrowthProfile {
    std::vector<long> size_at_radius;
    int eccentricity = 0;
};

GrowthProfile growth_profile(const Graph& g, const VertexSubset& w);

struct BoundValues {
    double general = 0.0;  // 1/2 min{lambda^-2k, n}
    double equal = 0.0;    // 1/2 min{|W| lambda^-2k, n}
    double sharp = 0.0;    // from 1/#S_k - 1/n <= lambda^2k sum a_w^2
    bool vacuous = false;  // lambda <= 0: every eigenfunction integrated
};

BoundValues theorem_lower_bound(double lambda, int k, int n, int w_size, bool equal,
                                double sum_sq_weights);

struct RadiusCheck {
    int radius = 0;
    long observed = 0;
    BoundValues bounds;
    bool pass_general = false;
    bool pass_equal = false;  // true when not applicable
    bool pass_sharp = false;
};

struct BoundCertificate {
    double lambda = 0.0;  // the lambda* the bounds were evaluated at
    std::vector<RadiusCheck> checks;
    bool all_pass = false;
    bool vacuous = false;
};

struct TheoremOptions {
    bool allow_nonregular = false;
    // evaluate at this lambda instead of the verified threshold
    std::optional<double> lambda_override;
    double eps_int = kDefaultEpsInt;
};

// Evaluates the growth bounds at every radius 0..eccentricity(W) using the
// verified threshold lambda* of the design. Requires positive weights, and a
// regular graph unless overridden (the orthogonality hypothesis).
BoundCertificate check_theorem(const Graph& g, const Spectrum& s, const Design& d,
                               const TheoremOptions& opts = {});

}  // namespace gdesign
