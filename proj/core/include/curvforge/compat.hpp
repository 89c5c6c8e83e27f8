#pragma once

#include "curvforge/metric.hpp"

#include <utility>

namespace curvforge {

struct invalid_structure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Almost complex structure determined by (g, w) through w(x, y) = g(Jx, y);
// in matrices J = -g^{-1} Omega.
Mat4 canonical_J(const Mat4& g, const SymplecticForm& w);
Mat4 canonical_J(const MetricField& g, const SymplecticForm& w, const Vec4& x);

// max(||J^2 + I||_inf, ||J^T g J - g||_inf) for J = canonical_J; zero exactly
// when g is w-compatible.
double compat_residual(const Mat4& g, const SymplecticForm& w);
double compat_residual(const MetricField& g, const SymplecticForm& w, const Vec4& x);

// h = h+ + h- with h+(x,y) = (h(x,y) + h(Jx,Jy))/2.
std::pair<Mat4, Mat4> split_invariant(const Mat4& h, const Mat4& J);

// Pointwise matrix of g e^h, i.e. g(x, e^{g^{-1}h} y).
Mat4 metric_exp_point(const Mat4& g, const Mat4& h);

// h with g e^h = gt, via the g-symmetrized eigendecomposition
// g^{1/2} log(g^{-1/2} gt g^{-1/2}) g^{1/2}. Throws not_comparable_error when
// g^{-1} gt has a non-positive eigenvalue.
Mat4 metric_log_point(const Mat4& g, const Mat4& gt);

// Field versions. metric_exp keeps the base field's domain; its derivative is
// finite-difference unless both inputs carry analytic derivatives (not needed
// by the verification paths).
MetricField metric_exp(const MetricField& g, const std::function<Mat4(const Vec4&)>& h);

// J acting on a covector by raise-rotate-lower: (J a) = g J g^{-1} a. With a
// compatible pair this equals a . J^{-1} and makes w1^w2 + w3^w4 rebuild w.
Vec4 j_covector(const Mat4& g, const Mat4& J, const Vec4& a);

}  // namespace curvforge
