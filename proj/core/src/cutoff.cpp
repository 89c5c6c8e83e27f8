#include "curvforge/cutoff.hpp"

#include <cmath>

namespace curvforge {

double FCut::value(double t) const {
    if (t <= 0.0) return 0.0;
    return s * std::exp(-d / t);
}

double FCut::d1(double t) const {
    if (t <= 0.0) return 0.0;
    return s * std::exp(-d / t) * d / (t * t);
}

double FCut::d2(double t) const {
    if (t <= 0.0) return 0.0;
    double t2 = t * t;
    return s * std::exp(-d / t) * (d * d / (t2 * t2) - 2.0 * d / (t2 * t));
}

double FCut::d3(double t) const {
    if (t <= 0.0) return 0.0;
    double t2 = t * t, t3 = t2 * t;
    return s * std::exp(-d / t) *
           (d * d * d / (t3 * t3) - 6.0 * d * d / (t2 * t3) + 6.0 * d / (t2 * t2));
}

namespace {
// h(u) = sig(1-u) / (sig(u) + sig(1-u)) with sig(x) = exp(-1/x); closed form,
// so the analytic derivatives are exactly consistent with the values.
Jet2 sig(const Jet2& x) {
    if (x.v <= 0.0) return Jet2(0.0);
    return jet_exp(-1.0 * (Jet2(1.0) / x));
}

Jet2 step_jet(double u) {
    if (u <= 0.0) return Jet2(1.0);
    if (u >= 1.0) return Jet2(0.0);
    Jet2 U = Jet2::variable(u);
    Jet2 a = sig(1.0 - U);
    Jet2 b = sig(U);
    return a / (a + b);
}
}  // namespace

double HCut::step(double u) { return step_jet(u).v; }
double HCut::step_d1(double u) { return step_jet(u).d; }
double HCut::step_d2(double u) { return step_jet(u).dd; }

namespace {
double scan_sup(int order) {
    double sup = 0.0;
    for (int i = 1; i < 4000; ++i) {
        Jet2 j = step_jet(i / 4000.0);
        sup = std::max(sup, std::abs(order == 1 ? j.d : j.dd));
    }
    return sup;
}
}  // namespace

double HCut::step_d1_sup() {
    static const double v = scan_sup(1);
    return v;
}
double HCut::step_d2_sup() {
    static const double v = scan_sup(2);
    return v;
}

double HCut::value(double t) const { return step((t - b) / eps); }
double HCut::d1(double t) const { return step_d1((t - b) / eps) / eps; }
double HCut::d2(double t) const { return step_d2((t - b) / eps) / (eps * eps); }

void DeformParams::validate() const {
    if (!(a > 0.0 && a < b && b + eps < c && c <= 9.0))
        throw std::invalid_argument("DeformParams: need 0 < a < b < b+eps < c <= 9");
    if (!(d > 0.0)) throw std::invalid_argument("DeformParams: d must be positive");
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("DeformParams: s must lie in [0,1]");
}

double CutoffPair::Y(double r) const {
    double t = params.c - r;
    if (t <= 0.0) return 0.0;
    HCut h{params.b, params.eps};
    if (h.value(t) == 0.0) return 0.0;
    FCut f{params.d, params.s};
    return h.value(t) * f.value(t);
}

double CutoffPair::dY(double r) const {
    double t = params.c - r;
    if (t <= 0.0) return 0.0;
    HCut h{params.b, params.eps};
    FCut f{params.d, params.s};
    // d/dr = -d/dt
    return -(h.d1(t) * f.value(t) + h.value(t) * f.d1(t));
}

double CutoffPair::d2Y(double r) const {
    double t = params.c - r;
    if (t <= 0.0) return 0.0;
    HCut h{params.b, params.eps};
    FCut f{params.d, params.s};
    return h.d2(t) * f.value(t) + 2.0 * h.d1(t) * f.d1(t) + h.value(t) * f.d2(t);
}

bool CutoffPair::supported(double r) const {
    return r > params.c - params.b - params.eps && r < params.c;
}

}  // namespace curvforge
