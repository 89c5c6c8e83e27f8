#pragma once

#include "curvforge/connection.hpp"

namespace curvforge {

// Scalar curvature of the deformed metric in terms of the base coframe's
// connection coefficients and Y = h f(c - r_g), evaluated verbatim; Y = 0
// gives the scalar curvature of the base metric.
double scalar_formula(const ConnectionCoeffs& c, double Y, double Yp, double Ypp);

// The difference s(deformed) - s(base) in closed form.
double scalar_diff(const ConnectionCoeffs& c, double Y, double Yp, double Ypp);

// Connection coefficients of the rescaled coframe w1 -> alpha w1,
// w2 -> w2/alpha with alpha = alpha(r_g); derivative entries are pushed
// through by the chain rule with e_1(alpha) = alpha'.
ConnectionCoeffs tilde_coeffs(const ConnectionCoeffs& c, double alpha, double alphap,
                              double alphapp = 0.0);

struct TildeCurvature {
    // R_1212, R_1313, R_1414, R_2323, R_2424, R_3434 of the rescaled frame
    std::array<double, 6> components{};
    double scalar = 0.0;           // 2 * (R_2112 + R_3113 + ... ) assembled from them
    double scalar_display = 0.0;   // the expanded display in the tilde coefficients
};

TildeCurvature tilde_curvature(const ConnectionCoeffs& ct);

}  // namespace curvforge
