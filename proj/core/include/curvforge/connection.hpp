#pragma once

#include "curvforge/coframe.hpp"

namespace curvforge {

// Connection coefficients w_ij = sum_k a_ijk w_k of an orthonormal coframe,
// antisymmetric in (i, j), plus their frame derivatives
// d(a_ijk) = sum_l a_ijk,l w_l.
struct ConnectionCoeffs {
    double a[4][4][4] = {};
    double aD[4][4][4][4] = {};

    double antisymmetry_residual() const;
    double a1_symmetry_residual() const;  // |a_1jk - a_1kj| max
    double max_abs() const;
    double max_abs_deriv() const;
};

// Exact table of the euclidean radial coframe at distance r, derivatives
// included.
ConnectionCoeffs euclidean_connection(double r);

struct ConnectionOptions {
    double frame_step = 1e-3;     // step for the frame-directional derivatives
    bool richardson = true;
    bool want_derivs = true;
    int deriv_dirs = 0xF;         // bitmask of frame directions to difference
};

// a_ijk from the coframe jet via
//   2 a_ijk = <d w_k, w_i ^ w_j> - <d w_i, w_j ^ w_k> - <d w_j, w_k ^ w_i>,
// a_ijk,l by central differences of a along the dual frame directions.
ConnectionCoeffs connection_coeffs(const CoframeField& cf, const Vec4& x,
                                   const ConnectionOptions& opts = {});

}  // namespace curvforge
