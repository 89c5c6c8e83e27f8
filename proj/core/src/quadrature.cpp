#include "curvforge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvforge {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
constexpr double kNodes[8] = {
    0.000000000000000, 0.405845151377397, 0.741531185599394, 0.949107912342759,
    0.207784955007898, 0.586087235467691, 0.864864423359769, 0.991455371120813};
constexpr double kGauss[8] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870,
    0.0, 0.0, 0.0, 0.0};
constexpr double kKronrod[8] = {
    0.209482141084728, 0.190350578064785, 0.140653259715525, 0.063092092629979,
    0.204432940075298, 0.169004726639267, 0.104790010322250, 0.022935322010529};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double scale = 0.5 * (b - a);
    double y0 = f(mid);
    double g7 = kGauss[0] * y0;
    double k15 = kKronrod[0] * y0;
    for (int i = 1; i < 8; ++i) {
        double dx = scale * kNodes[i];
        double yi = f(mid + dx) + f(mid - dx);
        g7 += kGauss[i] * yi;
        k15 += kKronrod[i] * yi;
    }
    g7 *= scale;
    k15 *= scale;
    return {k15, std::abs(k15 - g7)};
}

double recurse(const std::function<double(double)>& f, double a, double b,
               double tol, int depth, int max_depth) {
    PanelResult r = gk15(f, a, b);
    if (r.error <= tol || depth >= max_depth) return r.value;
    double mid = 0.5 * (a + b);
    return recurse(f, a, mid, 0.5 * tol, depth + 1, max_depth) +
           recurse(f, mid, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    return recurse(f, a, b, abs_tol, 0, max_depth);
}

PchipTable::PchipTable(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const std::size_t n = xs_.size();
    if (n < 2 || n != ys_.size())
        throw std::invalid_argument("PchipTable: need matching arrays, length >= 2");
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        d[i] = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    slopes_.assign(n, 0.0);
    slopes_[0] = d[0];
    slopes_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0.0) {
            slopes_[i] = 0.0;
        } else {
            // weighted harmonic mean keeps the interpolant monotone
            double w1 = 2.0 * (xs_[i + 1] - xs_[i]) + (xs_[i] - xs_[i - 1]);
            double w2 = (xs_[i + 1] - xs_[i]) + 2.0 * (xs_[i] - xs_[i - 1]);
            slopes_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
}

double PchipTable::operator()(double x) const {
    if (x <= xs_.front()) return ys_.front();
    if (x >= xs_.back()) return ys_.back();
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
    double h = xs_[i + 1] - xs_[i];
    double t = (x - xs_[i]) / h;
    double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    double h10 = t * (1 - t) * (1 - t);
    double h01 = t * t * (3 - 2 * t);
    double h11 = t * t * (t - 1);
    return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] + h11 * h * slopes_[i + 1];
}

}  // namespace curvforge
