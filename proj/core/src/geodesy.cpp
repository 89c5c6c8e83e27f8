#include "curvforge/geodesy.hpp"

#include "curvforge/parallel.hpp"

#include <cmath>

namespace curvforge {

namespace {

struct Phase {
    Vec4 x, y;
};

Phase rhs(const MetricField& g, const Phase& s) {
    Christoffel G = christoffel(g, s.x);
    Vec4 acc;
    for (int k = 0; k < 4; ++k) acc[k] = -s.y.dot(G[k] * s.y);
    return {s.y, acc};
}

}  // namespace

GeodesicState geodesic_flow(const MetricField& g, const Vec4& p, const Vec4& v,
                            double T, int steps) {
    if (steps < 1) steps = 1;
    double h = T / steps;
    Phase s{p, v};
    for (int i = 0; i < steps; ++i) {
        if (!g.domain.contains(s.x))
            throw out_of_domain_error("geodesic_flow: left the chart at t = " +
                                      std::to_string(i * h));
        Phase k1 = rhs(g, s);
        Phase k2 = rhs(g, {s.x + 0.5 * h * k1.x, s.y + 0.5 * h * k1.y});
        Phase k3 = rhs(g, {s.x + 0.5 * h * k2.x, s.y + 0.5 * h * k2.y});
        Phase k4 = rhs(g, {s.x + h * k3.x, s.y + h * k3.y});
        s.x += (h / 6.0) * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        s.y += (h / 6.0) * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
    }
    return {s.x, s.y};
}

namespace {

int steps_for(const Vec4& v, const GeodesyOptions& opts) {
    int n = static_cast<int>(std::ceil(v.norm() / opts.step_length));
    return std::max(n, opts.min_steps);
}

}  // namespace

Vec4 exp_map(const MetricField& g, const Vec4& p, const Vec4& v, const GeodesyOptions& opts) {
    return geodesic_flow(g, p, v, 1.0, steps_for(v, opts)).x;
}

ShootingResult log_map(const MetricField& g, const Vec4& p, const Vec4& x,
                       const GeodesyOptions& opts) {
    ShootingResult res;
    Vec4 target = g.domain.difference(x, p);  // shortest representative on a torus
    res.v = target;
    if (target.norm() == 0.0) {
        res.converged = true;
        return res;
    }

    auto shoot = [&](const Vec4& v) -> Vec4 {
        GeodesicState st = geodesic_flow(g, p, v, 1.0, steps_for(v, opts));
        return g.domain.difference(st.x, p) - target;
    };

    Vec4 F = shoot(res.v);
    res.residual = F.norm();
    Mat4 Jinv = Mat4::Identity();
    bool have_jacobian = false;

    for (res.iterations = 0; res.iterations < opts.max_newton; ++res.iterations) {
        if (res.residual < opts.newton_tol) {
            res.converged = true;
            return res;
        }
        // near-euclidean metrics have d exp ~ Id; refresh the FD Jacobian only
        // when the identity step stalls
        if (res.iterations >= 2 && !have_jacobian) {
            Mat4 J;
            double h = std::max(1e-6, 1e-6 * target.norm());
            for (int a = 0; a < 4; ++a) {
                Vec4 e = Vec4::Zero();
                e[a] = h;
                J.col(a) = (shoot(res.v + e) - shoot(res.v - e)) / (2.0 * h);
            }
            Eigen::FullPivLU<Mat4> lu(J);
            if (!lu.isInvertible())
                throw shooting_failure("log_map: singular shooting Jacobian");
            Jinv = lu.inverse();
            have_jacobian = true;
        }
        Vec4 dv = -(Jinv * F);
        double lambda = 1.0;
        for (int halving = 0; halving < 30; ++halving) {
            Vec4 vtry = res.v + lambda * dv;
            Vec4 Ftry = shoot(vtry);
            if (Ftry.norm() < res.residual) {
                res.v = vtry;
                F = Ftry;
                res.residual = Ftry.norm();
                break;
            }
            lambda *= 0.5;
            if (halving == 29)
                throw shooting_failure("log_map: damped Newton failed to reduce the residual");
        }
    }
    if (res.residual < opts.newton_tol) {
        res.converged = true;
        return res;
    }
    throw shooting_failure("log_map: no convergence in " + std::to_string(opts.max_newton) +
                           " iterations, residual " + std::to_string(res.residual));
}

double dist(const MetricField& g, const Vec4& p, const Vec4& x, const GeodesyOptions& opts) {
    ShootingResult r = log_map(g, p, x, opts);
    Mat4 gp = g.eval(p);
    return std::sqrt(r.v.dot(gp * r.v));
}

DistanceAndGradient dist_with_gradient(const MetricField& g, const Vec4& p, const Vec4& x,
                                       const GeodesyOptions& opts) {
    ShootingResult r = log_map(g, p, x, opts);
    Mat4 gp = g.eval(p);
    double rg = std::sqrt(r.v.dot(gp * r.v));
    if (rg < opts.puncture_radius)
        throw singular_point_error("dist_gradient: inside the puncture radius");
    GeodesicState st = geodesic_flow(g, p, r.v, 1.0, steps_for(r.v, opts));
    Mat4 gx = g.eval(st.x);
    Vec4 lowered = gx * st.y;
    double norm = std::sqrt(st.y.dot(lowered));
    return {rg, lowered / norm};
}

Vec4 dist_gradient(const MetricField& g, const Vec4& p, const Vec4& x,
                   const GeodesyOptions& opts) {
    return dist_with_gradient(g, p, x, opts).dr;
}

DistanceCache::DistanceCache(const MetricField& g, const Vec4& p, const Vec4& lo,
                             const Vec4& hi, int n_per_axis, const GeodesyOptions& opts)
    : lo_(lo), hi_(hi), n_(n_per_axis) {
    const std::size_t total = static_cast<std::size_t>(n_) * n_ * n_ * n_;
    values_.resize(total);
    parallel_for(total, [&](std::size_t idx) {
        std::size_t rem = idx;
        int i0 = rem % n_; rem /= n_;
        int i1 = rem % n_; rem /= n_;
        int i2 = rem % n_; rem /= n_;
        int i3 = static_cast<int>(rem);
        Vec4 x;
        int ii[4] = {i0, i1, i2, i3};
        for (int a = 0; a < 4; ++a)
            x[a] = lo_[a] + (hi_[a] - lo_[a]) * ii[a] / (n_ - 1);
        values_[idx] = dist(g, p, x, opts);
    });
}

double DistanceCache::operator()(const Vec4& x) const {
    int base[4];
    double frac[4];
    for (int a = 0; a < 4; ++a) {
        double t = (x[a] - lo_[a]) / (hi_[a] - lo_[a]) * (n_ - 1);
        t = std::clamp(t, 0.0, static_cast<double>(n_ - 1) - 1e-12);
        base[a] = static_cast<int>(t);
        frac[a] = t - base[a];
    }
    double acc = 0.0;
    for (int corner = 0; corner < 16; ++corner) {
        double w = 1.0;
        std::size_t idx = 0;
        std::size_t stride = 1;
        for (int a = 0; a < 4; ++a) {
            int bit = (corner >> a) & 1;
            w *= bit ? frac[a] : (1.0 - frac[a]);
            idx += stride * (base[a] + bit);
            stride *= n_;
        }
        acc += w * values_[idx];
    }
    return acc;
}

}  // namespace curvforge
