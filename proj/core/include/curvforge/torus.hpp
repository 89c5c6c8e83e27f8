#pragma once

#include "curvforge/compat.hpp"
#include "curvforge/metric.hpp"

#include <functional>
#include <memory>

namespace curvforge {

// Flat 4-torus with global Darboux coordinates, optionally perturbed by a
// periodic anti-invariant tensor h0: g = g_flat e^{h0}. Everything at
// pipeline scale works in the rescaled coordinates where the period is m * L
// and the symplectic form is standard.
struct TorusManifold {
    double period = 18.0;                                 // m * L
    std::function<Mat4(const Vec4&)> h0;                  // may be empty (flat)
    std::shared_ptr<const MetricField> metric;            // base metric on the torus
    SymplecticForm omega = SymplecticForm::standard();

    static TorusManifold flat(double period);
    static TorusManifold perturbed(double period, std::function<Mat4(const Vec4&)> h0);

    bool is_flat() const { return !h0; }
};

// Constant-coefficient comparison metric frozen from g at p.
struct FreezeMetric {
    Vec4 p = Vec4::Zero();
    Mat4 gp = Mat4::Identity();
    MetricField field;
};

FreezeMetric freeze_metric(const TorusManifold& torus, const Vec4& p);

// Orthonormal J-adapted frame of a constant compatible metric: columns
// e1, e2 = J e1, e3, e4 = J e3, with the dual coordinates z = E^{-1} (x - p)
// turning gp into the identity and omega into the standard form.
Mat4 darboux_frame(const Mat4& gp, const SymplecticForm& w);

}  // namespace curvforge
