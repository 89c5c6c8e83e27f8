#include "curvforge/chart.hpp"

#include <cmath>

namespace curvforge {

ChartDomain ChartDomain::ball(const Vec4& c, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("ball radius must be positive");
    ChartDomain d;
    d.kind = Kind::euclidean_ball;
    d.center = c;
    d.radius = r;
    return d;
}

ChartDomain ChartDomain::torus(double period) {
    if (!(period > 0.0)) throw std::invalid_argument("torus period must be positive");
    ChartDomain d;
    d.kind = Kind::torus;
    d.period = period;
    return d;
}

bool ChartDomain::contains(const Vec4& x) const {
    if (kind == Kind::torus) return x.allFinite();
    return (x - center).norm() < radius;
}

Vec4 ChartDomain::canonical(const Vec4& x) const {
    if (kind == Kind::euclidean_ball) return x;
    Vec4 y;
    for (int i = 0; i < 4; ++i) {
        double v = std::fmod(x[i], period);
        if (v < 0.0) v += period;
        if (v >= period) v -= period;  // fmod can land exactly on period
        y[i] = v;
    }
    return y;
}

Vec4 ChartDomain::difference(const Vec4& x, const Vec4& y) const {
    Vec4 d = x - y;
    if (kind == Kind::torus) {
        for (int i = 0; i < 4; ++i) {
            double v = std::fmod(d[i], period);
            if (v > 0.5 * period) v -= period;
            if (v <= -0.5 * period) v += period;
            d[i] = v;
        }
    }
    return d;
}

double ChartDomain::distance_flat(const Vec4& x, const Vec4& y) const {
    return difference(x, y).norm();
}

}  // namespace curvforge
