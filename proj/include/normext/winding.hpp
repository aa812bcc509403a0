#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace normext {

/// |x|_k = sqrt((cos(pi x) - 1)^2 + sin^2(pi x) + (2^{-(k+1)} x)^2): the
/// Euclidean length of the chord from the origin of the winding curve
/// t -> (cos(pi t), sin(pi t), 2^{-(k+1)} t) to its point at x.
double winding_norm(int k, double x);

/// Euclidean distance between the winding-curve images of t and s; equals
/// winding_norm(k, t - s) by the half-angle identity.
double pair_distance(int k, double t, double s);

/// Finitely supported vector in the direct sum of the winding summands.
struct FinSupportVector {
    std::map<int, double> entries; // k -> x_k, k >= 1
};

/// Sum of the summand norms, |(x_k)| = sum_k |x_k|_k.
double sum_norm(const FinSupportVector& v);

struct DiscontinuityRow {
    int k;
    double e_norm;      // |e_k|   (> 2 for every k)
    double two_e_norm;  // |2e_k|  (= 2^{-k})
    double ratio;       // e_norm / two_e_norm, diverging in k
};

/// Quantitative table behind the discontinuity of halving: (2 e_k) tends to
/// zero while (e_k) stays bounded away from zero.
std::vector<DiscontinuityRow> discontinuity_report(int K);

struct WindingSampleSummary {
    int k = 0;
    long triangle_samples = 0;
    double triangle_max_violation = 0.0; // max(d(t,s) - d(t,r) - d(r,s), 0)
    long identity_samples = 0;
    double identity_max_err = 0.0;       // max |d(t,s) - |t-s|_k|
};

/// Monte-Carlo check of the metric triangle inequality and of the
/// pair-distance / norm identity for one summand; points uniform in
/// [-50, 50], deterministic for a fixed seed.
WindingSampleSummary sample_winding_checks(int k, long triangle_samples,
                                           long identity_samples, std::uint64_t seed);

} // namespace normext
