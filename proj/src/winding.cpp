#include "normext/winding.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace normext {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void image(int k, double t, double out[3]) {
    out[0] = std::cos(kPi * t);
    out[1] = std::sin(kPi * t);
    out[2] = std::ldexp(t, -(k + 1));
}

} // namespace

double winding_norm(int k, double x) {
    if (k < 1) throw std::invalid_argument("winding_norm: k must be >= 1");
    const double c = std::cos(kPi * x) - 1.0;
    const double s = std::sin(kPi * x);
    const double z = std::ldexp(x, -(k + 1));
    return std::sqrt(c * c + s * s + z * z);
}

double pair_distance(int k, double t, double s) {
    if (k < 1) throw std::invalid_argument("pair_distance: k must be >= 1");
    double a[3];
    double b[3];
    image(k, t, a);
    image(k, s, b);
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    const double dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double sum_norm(const FinSupportVector& v) {
    double total = 0.0;
    for (const auto& [k, x] : v.entries) {
        if (x != 0.0) total += winding_norm(k, x);
    }
    return total;
}

std::vector<DiscontinuityRow> discontinuity_report(int K) {
    if (K < 1) throw std::invalid_argument("discontinuity_report: K must be >= 1");
    std::vector<DiscontinuityRow> rows;
    rows.reserve(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) {
        DiscontinuityRow row;
        row.k = k;
        row.e_norm = winding_norm(k, 1.0);
        row.two_e_norm = winding_norm(k, 2.0);
        row.ratio = row.e_norm / row.two_e_norm;
        rows.push_back(row);
    }
    return rows;
}

WindingSampleSummary sample_winding_checks(int k, long triangle_samples, long identity_samples,
                                           std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("sample_winding_checks: k must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pt(-50.0, 50.0);

    WindingSampleSummary out;
    out.k = k;
    out.triangle_samples = triangle_samples;
    out.identity_samples = identity_samples;
    for (long i = 0; i < triangle_samples; ++i) {
        const double t = pt(rng);
        const double r = pt(rng);
        const double s = pt(rng);
        const double gap = pair_distance(k, t, s) - pair_distance(k, t, r) - pair_distance(k, r, s);
        out.triangle_max_violation = std::max(out.triangle_max_violation, gap);
    }
    for (long i = 0; i < identity_samples; ++i) {
        const double t = pt(rng);
        const double s = pt(rng);
        const double err = std::fabs(pair_distance(k, t, s) - winding_norm(k, t - s));
        out.identity_max_err = std::max(out.identity_max_err, err);
    }
    return out;
}

} // namespace normext
