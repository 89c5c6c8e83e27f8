#pragma once

#include "curvforge/linalg.hpp"
#include "curvforge/quadrature.hpp"

#include <array>
#include <stdexcept>

namespace curvforge {

struct profile_construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProfileParams {
    double support = 1.0;        // p vanishes outside (0, support)
    double edge_rate0 = 0.5;     // flatness rate at y = 0
    double edge_rate1 = 0.5;     // flatness rate at y = support
    double alpha_bound = 0.2;    // normalization target for max |p'/y^3|
};

// Smooth compactly supported profile
//   p(y) = A t^4 (z - t) exp(-k0/t - k1/(1-t)) * S^4,  t = y/S,
// with the sign-change location z solved so that the weighted mean
// int_0^S p(y)/y^3 dy vanishes, and A fixed by the alpha_bound. The single
// sign change of p makes P(r) = int_0^r p/y^3 strictly positive inside the
// support, and alpha = p'/y^3 comes out with exactly three interior critical
// points.
class BumpProfile {
  public:
    double support() const { return S_; }
    double amplitude() const { return A_; }
    double sign_change() const { return z_ * S_; }

    double p(double y) const;
    double dp(double y) const;
    double p_over_y3(double y) const;  // p(y)/y^3, finite and smooth at 0

    double alpha(double y) const;      // p'(y)/y^3
    double dalpha(double y) const;
    double d2alpha(double y) const;

    // P(r) = int_0^r p(y)/y^3 dy. Fast tabulated value for field evaluation,
    // and an exact quadrature route for the invariant checks. For r past the
    // sign change the exact route integrates the tail -int_r^S so positivity
    // is never lost to cancellation.
    double P(double r) const;
    double P_exact(double r) const;

    // Residual of the zero-mean property int_0^S p/y^3 = 0.
    double zero_mean_residual() const;

    // The three interior critical points of alpha, ascending.
    std::array<double, 3> criticals() const { return criticals_; }
    double r1() const { return criticals_[0]; }

    // Sign changes of alpha' on an n-point grid, ignoring the underflow
    // fringe where the profile is below 1e-100.
    int count_alpha_criticals(int n = 400001) const;

  private:
    friend BumpProfile make_profile(const ProfileParams&);

    double S_ = 1.0, k0_ = 0.5, k1_ = 0.5, z_ = 0.5, A_ = 1.0;
    std::array<double, 3> criticals_{};
    PchipTable p_table_;   // normalized P-hat on [0, 1]
    double t_switch_ = 0.5;

    Jet2 alpha_jet(double t) const;   // normalized alpha with derivatives in t
    double phat_over_t3(double t) const;
    double Phat_exact(double t) const;
};

BumpProfile make_profile(const ProfileParams& params = {});

}  // namespace curvforge
