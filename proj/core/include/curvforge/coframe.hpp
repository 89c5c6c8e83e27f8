#pragma once

#include "curvforge/compat.hpp"
#include "curvforge/geodesy.hpp"
#include "curvforge/metric.hpp"

#include <memory>

namespace curvforge {

struct frame_degeneracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rows are the covectors w_1..w_4.
struct CoframeBasis {
    Mat4 W;
};

// Coframe with its coordinate partials: dW[a](i, b) = d_a (w_i)_b.
struct CoframeJet {
    Mat4 W;
    std::array<Mat4, 4> dW;
};

// Euclidean reference coframe around an offset w = x - p: radial direction
// plus the quaternion frame i*w, j*w, k*w, all unit. Row 0 is dr_{g0},
// rows 1..3 are r*sigma_1..3.
Mat4 reference_coframe(const Vec4& w);

// Distance function of some metric from a base point: value, differential and
// hessian. The hessian is only needed on derivative-grade paths.
struct DistJet {
    double r = 0.0;
    Vec4 dr = Vec4::Zero();
    Mat4 hess = Mat4::Zero();
};

struct DistField {
    std::function<DistanceAndGradient(const Vec4&)> eval;
    std::function<DistJet(const Vec4&)> jet;
};

// Exact distance of a constant-coefficient metric, with periodic wrap on a
// torus chart.
DistField frozen_dist_field(const Mat4& Gp, const Vec4& p, const ChartDomain& dom);

// Geodesic distance by Newton shooting; the jet route integrates the
// variational equations along the connecting geodesic so dr and hess come out
// at integrator accuracy rather than through finite differences.
DistField shooting_dist_field(const std::shared_ptr<const MetricField>& g, const Vec4& p,
                              const GeodesyOptions& opts = {});

// The adapted orthonormal coframe of (g, w) around p:
//   w1 ~ dr_g, w2 = J w1, w3 = Gram-Schmidt of the euclidean reference
//   against w1, w2, w4 = J w3,
// where J acts on covectors by raise-rotate-lower.
class CoframeField {
  public:
    CoframeField(std::shared_ptr<const MetricField> g, SymplecticForm w, Vec4 p,
                 DistField dist, double min_denominator = 1e-6);

    CoframeBasis basis(const Vec4& x) const;
    CoframeJet jet(const Vec4& x) const;
    DistanceAndGradient dist(const Vec4& x) const;

    const MetricField& metric() const { return *g_; }
    std::shared_ptr<const MetricField> metric_ptr() const { return g_; }
    const Vec4& base_point() const { return p_; }
    const SymplecticForm& symplectic() const { return w_; }

  private:
    std::shared_ptr<const MetricField> g_;
    SymplecticForm w_;
    Vec4 p_;
    DistField dist_;
    double min_den_;
};

}  // namespace curvforge
