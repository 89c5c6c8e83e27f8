#pragma once

#include "curvforge/metric.hpp"
#include "curvforge/oracle.hpp"

#include <optional>

namespace curvforge {

struct shooting_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct singular_point_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeodesicState {
    Vec4 x = Vec4::Zero();
    Vec4 y = Vec4::Zero();  // velocity
};

struct GeodesyOptions {
    double step_length = 0.02;   // target step in g0 units
    int min_steps = 10;
    double newton_tol = 1e-12;
    int max_newton = 50;
    double puncture_radius = 1e-3;
};

// Fixed-step RK4 integration of x' = y, y'_k = -Gamma^k_ij y_i y_j.
GeodesicState geodesic_flow(const MetricField& g, const Vec4& p, const Vec4& v,
                            double T, int steps);

Vec4 exp_map(const MetricField& g, const Vec4& p, const Vec4& v,
             const GeodesyOptions& opts = {});

struct ShootingResult {
    Vec4 v = Vec4::Zero();
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
};

// Newton shooting for exp_p(v) = x from the euclidean guess v0 = x - p,
// with a finite-difference Jacobian that is reused between iterations and
// step halving on residual increase.
ShootingResult log_map(const MetricField& g, const Vec4& p, const Vec4& x,
                       const GeodesyOptions& opts = {});

double dist(const MetricField& g, const Vec4& p, const Vec4& x,
            const GeodesyOptions& opts = {});

// Unit covector dr_g at x: the arrival velocity of the minimal geodesic from
// p, lowered by g(x) and normalized to unit g-norm.
Vec4 dist_gradient(const MetricField& g, const Vec4& p, const Vec4& x,
                   const GeodesyOptions& opts = {});

struct DistanceAndGradient {
    double r = 0.0;
    Vec4 dr = Vec4::Zero();
};
DistanceAndGradient dist_with_gradient(const MetricField& g, const Vec4& p, const Vec4& x,
                                       const GeodesyOptions& opts = {});

// Read-only memo for distance sweeps: filled once on a lattice, then shared.
class DistanceCache {
  public:
    DistanceCache(const MetricField& g, const Vec4& p, const Vec4& lo, const Vec4& hi,
                  int n_per_axis, const GeodesyOptions& opts = {});

    double operator()(const Vec4& x) const;  // multilinear interpolation

  private:
    Vec4 lo_, hi_;
    int n_;
    std::vector<double> values_;
};

}  // namespace curvforge
