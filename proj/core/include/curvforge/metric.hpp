#pragma once

#include "curvforge/chart.hpp"
#include "curvforge/linalg.hpp"

#include <functional>
#include <string>
#include <vector>

namespace curvforge {

// Constant symplectic form dx1^dx2 + dx3^dx4 as the matrix Omega_ij = w(e_i, e_j).
struct SymplecticForm {
    Mat4 matrix;

    SymplecticForm();
    static SymplecticForm standard() { return SymplecticForm{}; }
};

// A smooth metric on a chart, evaluated pointwise with derivative access.
// `deriv` returns the matrix of coordinate partials d_axis g at a point; when
// not provided it falls back to central differences of `eval` with step
// fd_step. Evaluation must be pure so fields can be shared across workers.
struct MetricField {
    std::function<Mat4(const Vec4&)> eval;
    std::function<Mat4(const Vec4&, int)> deriv;            // may be empty
    std::function<Mat4(const Vec4&, int, int)> deriv2;      // may be empty
    ChartDomain domain;
    std::string id = "metric";
    double fd_step = 1e-4;

    Mat4 operator()(const Vec4& x) const { return eval(x); }

    // First coordinate partial, analytic when available.
    Mat4 d(const Vec4& x, int axis) const;

    // Second partial d_a d_b g; falls back to differencing d().
    Mat4 d2(const Vec4& x, int a, int b) const;

    // Central-difference partial of eval, regardless of an analytic deriv.
    Mat4 fd_partial(const Vec4& x, int axis, double h) const;

    // Richardson consistency of the derivative route against eval: returns the
    // ratio residual(h) / residual(h/2), which should be >= ~3 for a correct
    // first derivative (exactly 4 in the smooth limit).
    double deriv_consistency(const Vec4& x, int axis, double h) const;
};

MetricField euclidean_metric(const ChartDomain& dom);
MetricField constant_metric(const Mat4& g, const ChartDomain& dom, const std::string& id = "constant");
MetricField scaled_metric(const MetricField& g, double factor);

// g = e^{2 phi} g0 with analytic derivatives; phi and grad phi supplied.
MetricField conformal_metric(const std::function<double(const Vec4&)>& phi,
                             const std::function<Vec4(const Vec4&)>& grad_phi,
                             const ChartDomain& dom);

// C0/C1/C2 sup-norms of (g1 - g2) over a sample set, measured entrywise in
// the coordinates of the chart (the frames used throughout are near-euclidean,
// so entrywise and operator norms agree up to a bounded factor).
struct CkNorms {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
};
CkNorms ck_norms(const MetricField& g1, const MetricField& g2,
                 const std::vector<Vec4>& samples, double h = 1e-3);

}  // namespace curvforge
