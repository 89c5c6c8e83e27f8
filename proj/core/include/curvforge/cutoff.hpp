#pragma once

#include "curvforge/linalg.hpp"

#include <stdexcept>

namespace curvforge {

// f_{d,s}(t) = s exp(-d/t) on t > 0, identically 0 on t <= 0, with analytic
// derivatives up to third order.
struct FCut {
    double d = 1.0, s = 1.0;

    double value(double t) const;
    double d1(double t) const;
    double d2(double t) const;
    double d3(double t) const;
};

// Smooth step h with h = 1 on t <= 0, h = 0 on t >= 1, realized from the
// normalized bump integral; h_eps_b(t) = h((t - b)/eps).
struct HCut {
    double b = 1.0, eps = 1.0;

    double value(double t) const;
    double d1(double t) const;
    double d2(double t) const;

    static double step(double u);    // the underlying h on [0, 1]
    static double step_d1(double u);
    static double step_d2(double u);
    static double step_d1_sup();     // sup |h'| over [0, 1]
    static double step_d2_sup();
};

struct DeformParams {
    double a = 1.0, b = 8.5, eps = 0.1, c = 9.0;
    double d = 1.0, s = 1.0;

    void validate() const;  // 0 < a < b < b+eps < c <= 9, d > 0, s in [0,1]
};

// Y(r) = h_eps^b(c - r) * f_{d,s}(c - r) and its first two derivatives in r.
struct CutoffPair {
    DeformParams params;

    double Y(double r) const;
    double dY(double r) const;
    double d2Y(double r) const;

    // Y vanishes identically for r <= c - b - eps and r >= c.
    bool supported(double r) const;
};

}  // namespace curvforge
