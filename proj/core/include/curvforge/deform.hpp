#pragma once

#include "curvforge/coframe.hpp"
#include "curvforge/connection.hpp"
#include "curvforge/cutoff.hpp"
#include "curvforge/scalar_formula.hpp"

#include <memory>
#include <vector>

namespace curvforge {

// The scalar-curvature diffusion: rescale w1, w2 of the adapted coframe by
// reciprocal factors driven by Y = h_eps^b(c - r_g) f_{d,s}(c - r_g),
//   g -> g + (1/(1+Y) - 1) w1 (x) w1 + Y w2 (x) w2.
// Bit-identical to the base metric wherever Y vanishes; derivatives come from
// the coframe jet and the analytic cutoff derivatives.
MetricField deform(const std::shared_ptr<const CoframeField>& cf, const DeformParams& params);

// Scalar-curvature difference of the deformation at x through the closed
// formula (the base coframe's coefficients plus the cutoff derivatives).
double deform_scalar_diff(const CoframeField& cf, const DeformParams& params, const Vec4& x,
                          const ConnectionOptions& copts = {});

// Full closed-formula scalar curvature of the deformed metric at x.
double deform_scalar_formula(const CoframeField& cf, const DeformParams& params, const Vec4& x,
                             const ConnectionOptions& copts = {});

struct ClauseReport {
    std::string clause;
    bool pass = true;
    double margin = 0.0;     // worst value minus its bound (negative = satisfied)
    Vec4 worst_point = Vec4::Zero();
    int samples = 0;
};

struct DiffusionReport {
    ClauseReport inner_equality;   // (i): bit-exact equality inside B_{c-b-eps}
    ClauseReport nonincrease;      // (ii): s-difference <= slack outside B_{c-b}
    ClauseReport decrease;         // (iii): s-difference <= -s e^{-d/a} + slack on the annulus
    bool pass() const { return inner_equality.pass && nonincrease.pass && decrease.pass; }
};

struct DiffusionCheckOptions {
    int inner_samples = 200;
    int annulus_samples = 2000;
    double slack = 1e-8;
    double outer_radius = 0.0;  // 0: use c + 2
    unsigned seed = 7;
    ConnectionOptions copts{1e-3, true, true, 0x3};  // frame dirs 1 and 2 feed (sdif)
};

DiffusionReport diffusion_check(const CoframeField& cf, const DeformParams& params,
                                const DiffusionCheckOptions& opts = {});

struct CalibrationResult {
    double d0 = 0.0;
    bool found = false;
    int candidates_tried = 0;
    DiffusionReport report_at_d0;
};

// Scan d over a dyadic grid until every clause of the diffusion check passes;
// the witnesses replace the paper's non-constructive gamma(a, b, c).
CalibrationResult calibrate_diffusion(const CoframeField& cf, DeformParams params,
                                      const DiffusionCheckOptions& opts = {},
                                      int max_dyadic = 12);

}  // namespace curvforge
