#pragma once

#include "curvforge/linalg.hpp"

#include <stdexcept>

namespace curvforge {

struct out_of_domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chart the fields live on: an open euclidean ball or a flat 4-torus
// [0, period)^4 with coordinate wrap-around.
struct ChartDomain {
    enum class Kind { euclidean_ball, torus };

    Kind kind = Kind::euclidean_ball;
    Vec4 center = Vec4::Zero();
    double radius = 1e4;   // ball only
    double period = 0.0;   // torus only

    static ChartDomain ball(const Vec4& c, double r);
    static ChartDomain torus(double period);

    bool contains(const Vec4& x) const;

    // Canonical representative: identity on a ball, coordinates reduced into
    // [0, period) on a torus. Idempotent.
    Vec4 canonical(const Vec4& x) const;

    // Shortest representative of (x - y); on a torus each coordinate is
    // wrapped into (-period/2, period/2].
    Vec4 difference(const Vec4& x, const Vec4& y) const;

    double distance_flat(const Vec4& x, const Vec4& y) const;
};

}  // namespace curvforge
