#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "radii_atlas/geometry.hpp"

namespace radii_atlas {

namespace {

// Samples h_b(sign * theta_k - phi); sign = -1 is the reflection in the x-axis.
std::vector<double> support_samples(const ArcPolygon& body, int n, double sign = 1.0, double phi = 0.0) {
    std::vector<double> h(n);
    for (int k = 0; k < n; ++k) h[k] = support(body, UnitDir(sign * kTwoPi * k / n - phi)).h;
    return h;
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

}  // namespace

double support_distance(const ArcPolygon& a, const ArcPolygon& b, int n) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        const UnitDir u(kTwoPi * k / n);
        worst = std::max(worst, std::abs(support(a, u).h - support(b, u).h));
    }
    return worst;
}

double congruence_support_distance(const ArcPolygon& a, const ArcPolygon& b, int n) {
    const int coarse = 2 * n;
    const std::vector<double> ha = support_samples(a, coarse);
    const std::vector<double> ha_fine = support_samples(a, n);
    double best = std::numeric_limits<double>::infinity();
    for (double sign : {1.0, -1.0}) {
        const std::vector<double> hb = support_samples(b, coarse, sign);
        int best_shift = 0;
        double best_coarse = std::numeric_limits<double>::infinity();
        for (int s = 0; s < coarse; ++s) {
            double worst = 0.0;
            for (int k = 0; k < coarse && worst < best_coarse; ++k) worst = std::max(worst, std::abs(ha[k] - hb[(k - s + coarse) % coarse]));
            if (worst < best_coarse) {
                best_coarse = worst;
                best_shift = s;
            }
        }
        const double step = kTwoPi / coarse;
        // Rotating b by phi gives h(theta - phi) before the reflection sign is applied.
        auto at = [&](double phi) { return max_gap(ha_fine, support_samples(b, n, sign, sign * phi)); };
        double lo = (best_shift - 1) * step, hi = (best_shift + 1) * step;
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
        double f1 = at(x1), f2 = at(x2);
        for (int it = 0; it < 60; ++it) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = at(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = at(x2);
            }
        }
        best = std::min({best, f1, f2, at(best_shift * step)});
    }
    return best;
}

}  // namespace radii_atlas
