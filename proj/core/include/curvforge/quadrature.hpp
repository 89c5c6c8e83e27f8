#pragma once

#include <functional>
#include <vector>

namespace curvforge {

// Adaptive Gauss-Kronrod 7-15 on [a, b] to an absolute tolerance.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, int max_depth = 48);

// Monotone cubic (Fritsch-Carlson) interpolant on a fixed grid; used to
// tabulate integrals that sit inside million-point sweeps.
class PchipTable {
  public:
    PchipTable() = default;
    PchipTable(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;
    bool empty() const { return xs_.empty(); }

  private:
    std::vector<double> xs_, ys_, slopes_;
};

}  // namespace curvforge
