#pragma once

#include "curvforge/compat.hpp"
#include "curvforge/cutoff.hpp"
#include "curvforge/metric.hpp"
#include "curvforge/profile.hpp"

#include <array>
#include <memory>
#include <vector>

namespace curvforge {

struct axis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The separated-variables pair F(r,rho) = 1 + beta(rho) P(r),
// H(r,rho) = 1 - alpha(r) K(rho) driving the biaxial metric
//   f^2 dr^2 + (r^2/f^2) dtheta^2 + h^2 drho^2 + (rho^2/h^2) dsigma^2,
// f = F^{-1/2}, h = H^{-1/2}. All partials are assembled from the defining
// integrals, never by differencing.
class BiaxialProfile {
  public:
    BiaxialProfile(BumpProfile p, BumpProfile k);

    const BumpProfile& profile_p() const { return p_; }
    const BumpProfile& profile_k() const { return k_; }

    double F(double r, double rho) const;
    double H(double r, double rho) const;
    double F_r(double r, double rho) const;
    double F_rr(double r, double rho) const;
    double F_rho(double r, double rho) const;
    double F_rhorho(double r, double rho) const;
    double H_r(double r, double rho) const;
    double H_rr(double r, double rho) const;
    double H_rho(double r, double rho) const;
    double H_rhorho(double r, double rho) const;

    // F_rr + 3 F_r / r + H_rhorho + 3 H_rho / rho; identically the difference
    // alpha(r) beta(rho) - alpha(r) beta(rho) of the two separated halves.
    double pde_residual(double r, double rho) const;

    std::array<double, 3> r_criticals() const { return p_.criticals(); }
    std::array<double, 3> rho_criticals() const { return k_.criticals(); }

  private:
    BumpProfile p_, k_;
};

BiaxialProfile build_FH(const BumpProfile& p, const BumpProfile& k);

// The island metric in cartesian coordinates on R^4, smooth across both
// axes, euclidean outside the unit bidisk, with analytic first derivatives.
MetricField island_metric(const std::shared_ptr<const BiaxialProfile>& bp);

double closed_scalar(const BiaxialProfile& bp, double r, double rho);

// Frame curvature components R_1212, R_1313, R_1414, R_2424, R_3434, R_2323
// in the convention where s = 2 * (their sum). Throws axis_error on an axis.
std::array<double, 6> closed_curv_components(const BiaxialProfile& bp, double r, double rho);

struct SignPatternReport {
    bool zero_loci_ok = true;      // |s| tiny on axes, outside the bidisk
    bool lattice_ok = true;        // |s| tiny at the nine (r_i, rho_j)
    bool negative_ok = true;       // s < 0 strictly elsewhere off a 1e-3 band
    double worst_zero = 0.0;       // largest |s| seen on a zero locus
    double worst_negative = 0.0;   // largest (i.e. closest to 0 from below, or violating) s elsewhere
    Vec4 worst_point = Vec4::Zero();
    int checked = 0;
};

SignPatternReport sign_pattern_check(const BiaxialProfile& bp, int grid_n = 100);

// The modified island g^- : the diffusion applied to the island metric with
// the section-5 parameter block c = 1, a = 0.01, b = 1 - r1/200,
// eps = r1/600 around the point with r = rho = r1/50, decay d and amplitude s
// calibrated so the scalar curvature stays strictly negative at every
// verification sample.
struct GMinusResult {
    MetricField field;
    MetricField base_island;
    DeformParams params;
    Vec4 base_point = Vec4::Zero();
    double d0 = 0.0;
    double s0 = 1.0;
    int scanned_candidates = 0;
    CkNorms deviation_from_flat;  // finite-order stand-in for the C^{2k+2} claim
};

struct GMinusOptions {
    int negativity_samples_per_axis = 8;   // quick scan used inside calibration
    double clause_slack = 1e-8;
    int max_dyadic = 12;                   // scan d in {2^0 .. 2^max_dyadic}
    unsigned seed = 20240501;
};

GMinusResult build_gminus(const std::shared_ptr<const BiaxialProfile>& bp,
                          const GMinusOptions& opts = {});

}  // namespace curvforge
