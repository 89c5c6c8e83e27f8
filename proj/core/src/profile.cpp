#include "curvforge/profile.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace curvforge {

namespace {

double window(double t, double k0, double k1) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return std::exp(-k0 / t - k1 / (1.0 - t));
}

}  // namespace

Jet2 BumpProfile::alpha_jet(double t) const {
    if (t <= 0.0 || t >= 1.0) return Jet2(0.0);
    Jet2 T = Jet2::variable(t);
    Jet2 one_m = 1.0 - T;
    Jet2 W = jet_exp(-1.0 * (k0_ / T) - (k1_ / one_m));
    Jet2 Q = z_ - T;
    Jet2 wl = k0_ / (T * T) - k1_ / (one_m * one_m);
    return A_ * (W * (4.0 * Q - T + T * Q * wl));
}

double BumpProfile::p(double y) const {
    double t = y / S_;
    if (t <= 0.0 || t >= 1.0) return 0.0;
    double S4 = S_ * S_ * S_ * S_;
    return S4 * A_ * t * t * t * t * (z_ - t) * window(t, k0_, k1_);
}

double BumpProfile::dp(double y) const {
    // p' = y^3 alpha by definition of alpha
    return y * y * y * alpha(y);
}

double BumpProfile::p_over_y3(double y) const {
    double t = y / S_;
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return S_ * A_ * t * (z_ - t) * window(t, k0_, k1_);
}

double BumpProfile::alpha(double y) const { return alpha_jet(y / S_).v; }
double BumpProfile::dalpha(double y) const { return alpha_jet(y / S_).d / S_; }
double BumpProfile::d2alpha(double y) const { return alpha_jet(y / S_).dd / (S_ * S_); }

double BumpProfile::phat_over_t3(double t) const {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return A_ * t * (z_ - t) * window(t, k0_, k1_);
}

double BumpProfile::Phat_exact(double t) const {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    if (t <= t_switch_)
        return adaptive_quad([this](double u) { return phat_over_t3(u); }, 0.0, t, 1e-15);
    return adaptive_quad([this](double u) { return -phat_over_t3(u); }, t, 1.0, 1e-15);
}

double BumpProfile::P(double r) const {
    double t = r / S_;
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return S_ * S_ * p_table_(t);
}

double BumpProfile::P_exact(double r) const {
    return S_ * S_ * Phat_exact(r / S_);
}

double BumpProfile::zero_mean_residual() const {
    double left = adaptive_quad([this](double u) { return phat_over_t3(u); }, 0.0, t_switch_, 1e-16);
    double right = adaptive_quad([this](double u) { return phat_over_t3(u); }, t_switch_, 1.0, 1e-16);
    return S_ * S_ * (left + right);
}

int BumpProfile::count_alpha_criticals(int n) const {
    int count = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 1; i < n; ++i) {
        double t = static_cast<double>(i) / n;
        Jet2 a = alpha_jet(t);
        if (std::abs(a.v) < 1e-100) continue;  // underflow fringe
        if (have_prev && prev * a.d < 0.0) ++count;
        if (a.d != 0.0) {
            prev = a.d;
            have_prev = true;
        }
    }
    return count;
}

BumpProfile make_profile(const ProfileParams& params) {
    if (!(params.support > 0.0 && params.support <= 1.0))
        throw profile_construction_error("profile support must lie in (0, 1]");
    if (!(params.edge_rate0 > 0.0 && params.edge_rate1 > 0.0))
        throw profile_construction_error("edge rates must be positive");
    if (params.edge_rate0 > 0.7 || params.edge_rate1 > 0.7)
        throw profile_construction_error("edge rate too large: P would underflow at the 1e-3 grid");

    BumpProfile bp;
    bp.S_ = params.support;
    bp.k0_ = params.edge_rate0;
    bp.k1_ = params.edge_rate1;
    bp.A_ = 1.0;

    // Solve the zero-mean condition for the sign-change location z.
    auto residual = [&bp](double z) {
        return adaptive_quad(
            [&](double u) {
                return (u <= 0.0 || u >= 1.0) ? 0.0 : u * (z - u) * window(u, bp.k0_, bp.k1_);
            },
            0.0, 1.0, 1e-16);
    };
    double lo = 0.02, hi = 0.98;
    double flo = residual(lo), fhi = residual(hi);
    if (flo * fhi > 0.0)
        throw profile_construction_error("zero-mean condition has no root in the family");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = residual(mid);
        if (fm == 0.0) { lo = hi = mid; break; }
        if (flo * fm < 0.0) { hi = mid; fhi = fm; }
        else { lo = mid; flo = fm; }
        if (hi - lo < 1e-15) break;
    }
    bp.z_ = 0.5 * (lo + hi);
    bp.t_switch_ = bp.z_;

    // Normalize the amplitude to the alpha bound.
    double amax = 0.0;
    const int scan_n = 200001;
    for (int i = 1; i < scan_n; ++i)
        amax = std::max(amax, std::abs(bp.alpha_jet(static_cast<double>(i) / scan_n).v));
    if (amax <= 0.0) throw profile_construction_error("degenerate profile");
    bp.A_ = params.alpha_bound / amax;

    // Tabulate P-hat on a fine grid (left branch up to z, tail branch after).
    const int nodes = 10001;
    std::vector<double> ts(nodes), Ps(nodes);
    std::vector<double> cell(nodes, 0.0);
    for (int i = 1; i < nodes; ++i) {
        double a = static_cast<double>(i - 1) / (nodes - 1);
        double b = static_cast<double>(i) / (nodes - 1);
        cell[i] = adaptive_quad([&bp](double u) { return bp.phat_over_t3(u); }, a, b, 1e-16);
    }
    // forward cumulative up to the sign change, exact tail form after it,
    // so the table never loses positivity to cancellation
    double acc = 0.0;
    for (int i = 0; i < nodes; ++i) {
        if (i > 0) acc += cell[i];
        ts[i] = static_cast<double>(i) / (nodes - 1);
        Ps[i] = acc;
    }
    double tail = 0.0;
    for (int i = nodes - 1; i >= 0; --i) {
        if (ts[i] >= bp.z_) {
            Ps[i] = tail;   // -sum of cells to the right, p < 0 there
            tail -= cell[i];
        }
    }
    bp.p_table_ = PchipTable(ts, Ps);

    // Locate the critical points of alpha by sign changes of alpha'.
    std::vector<double> found;
    double prev_t = 0.0, prev_d = 0.0;
    bool have = false;
    for (int i = 1; i < scan_n; ++i) {
        double t = static_cast<double>(i) / scan_n;
        Jet2 a = bp.alpha_jet(t);
        if (std::abs(a.v) < 1e-100) continue;
        if (have && prev_d * a.d < 0.0) {
            double x0 = prev_t, x1 = t, f0 = prev_d;
            for (int k = 0; k < 80; ++k) {
                double xm = 0.5 * (x0 + x1);
                double fm = bp.alpha_jet(xm).d;
                if (f0 * fm <= 0.0) x1 = xm;
                else { x0 = xm; f0 = fm; }
            }
            found.push_back(0.5 * (x0 + x1) * bp.S_);
        }
        prev_t = t;
        prev_d = a.d;
        have = true;
    }
    if (found.size() != 3)
        throw profile_construction_error("alpha' must vanish at exactly three interior points, got " +
                                         std::to_string(found.size()));
    std::sort(found.begin(), found.end());
    bp.criticals_ = {found[0], found[1], found[2]};
    return bp;
}

}  // namespace curvforge
