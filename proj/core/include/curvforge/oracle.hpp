#pragma once

#include "curvforge/metric.hpp"

#include <array>

namespace curvforge {

// Gamma[k](i,j), symmetric in (i,j).
using Christoffel = std::array<Mat4, 4>;

Christoffel christoffel(const MetricField& g, const Vec4& x);

struct OracleOptions {
    double h = 4e-3;          // step for differencing Gamma
    bool richardson = true;   // extrapolate from h and h/2
};

struct OracleValue {
    double value = 0.0;
    double convergence = 0.0;  // |s_h - s_{h/2}|, reported, flags bad stencils
};

// Scalar curvature from coordinate stencils:
//   s = g^{ij} ( d_k Gamma^k_ij - d_j Gamma^k_ik
//                + Gamma^k_kl Gamma^l_ij - Gamma^k_jl Gamma^l_ik ).
// Independent of every closed-form curvature path in the project; this is the
// oracle all formulas are certified against.
OracleValue scalar_numeric(const MetricField& g, const Vec4& x, const OracleOptions& opts = {});

double scalar_numeric_value(const MetricField& g, const Vec4& x, const OracleOptions& opts = {});

// Analytic comparison value for conformal metrics e^{2 phi} g0 in dimension 4:
//   s = e^{-2 phi} (-6 laplacian(phi) - 6 |grad phi|^2).
double conformal_scalar_reference(double lap_phi, const Vec4& grad_phi, double phi);

}  // namespace curvforge
