#include "gdesign/growth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gdesign {

namespace {
// comparison at machine precision; the 1/2 convenience factor keeps bounds
// non-integral so exact ties matter
constexpr double kSlack = 1e-9;
}

GrowthProfile growth_profile(const Graph& g, const VertexSubset& w) {
    auto dist = distances_from(g, w);
    GrowthProfile p;
    p.eccentricity = *std::max_element(dist.begin(), dist.end());
    int diam = diameter(g);
    p.size_at_radius.assign(diam + 1, 0);
    for (int d : dist)
        if (d <= diam) p.size_at_radius[d]++;
    long acc = 0;
    for (auto& s : p.size_at_radius) {
        acc += s;
        s = acc;
    }
    return p;
}

BoundValues theorem_lower_bound(double lambda, int k, int n, int w_size, bool equal,
                                double sum_sq_weights) {
    BoundValues b;
    if (lambda <= 0.0) {
        // every eigenfunction integrated: the n/2 convention, flagged vacuous
        b.general = b.equal = 0.5 * n;
        b.sharp = n;
        b.vacuous = true;
        return b;
    }
    double decay = std::pow(lambda, -2.0 * k);
    b.general = 0.5 * std::min(decay, double(n));
    b.equal = equal ? 0.5 * std::min(w_size * decay, double(n)) : b.general;
    b.sharp = 1.0 / (std::pow(lambda, 2.0 * k) * sum_sq_weights + 1.0 / n);
    return b;
}

BoundCertificate check_theorem(const Graph& g, const Spectrum& s, const Design& d,
                               const TheoremOptions& opts) {
    if (!d.all_weights_positive())
        throw std::invalid_argument("check_theorem: the Theorem requires positive weights");
    if (!g.is_regular() && !opts.allow_nonregular)
        throw std::invalid_argument(
            "check_theorem: non-regular graph; AD^-1 generically lacks an orthogonal "
            "eigenbasis (pass allow_nonregular to override)");

    DesignReport rep = design_strength(s, d, opts.eps_int);
    BoundCertificate cert;
    cert.lambda = opts.lambda_override.value_or(rep.lambda_star);

    double ssw = 0.0;
    for (double w : d.weights) ssw += w * w;

    GrowthProfile prof = growth_profile(g, d.subset);
    cert.all_pass = true;
    for (int k = 0; k <= prof.eccentricity; ++k) {
        RadiusCheck rc;
        rc.radius = k;
        rc.observed = prof.size_at_radius[k];
        rc.bounds = theorem_lower_bound(cert.lambda, k, g.n(), d.subset.size(),
                                        d.equal_weights, ssw);
        rc.pass_general = rc.observed + kSlack >= rc.bounds.general;
        rc.pass_equal = !d.equal_weights || rc.observed + kSlack >= rc.bounds.equal;
        rc.pass_sharp = rc.observed + kSlack >= rc.bounds.sharp;
        cert.vacuous = cert.vacuous || rc.bounds.vacuous;
        cert.all_pass = cert.all_pass && rc.pass_general && rc.pass_equal && rc.pass_sharp;
        cert.checks.push_back(rc);
    }
    return cert;
}

}  // namespace gdesign
