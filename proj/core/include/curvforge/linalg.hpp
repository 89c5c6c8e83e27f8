#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <stdexcept>

namespace curvforge {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

struct degenerate_metric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_comparable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Mat4 symmetrize(const Mat4& m) { return 0.5 * (m + m.transpose()); }

inline double symmetry_residual(const Mat4& m) {
    return (m - m.transpose()).cwiseAbs().maxCoeff();
}

inline double min_eigenvalue(const Mat4& m) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(symmetrize(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// f(M) for symmetric M through its eigendecomposition
template <class F>
Mat4 sym_matrix_function(const Mat4& m, F&& f) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(symmetrize(m));
    Vec4 lam = es.eigenvalues();
    Vec4 flam;
    for (int i = 0; i < 4; ++i) flam[i] = f(lam[i]);
    return es.eigenvectors() * flam.asDiagonal() * es.eigenvectors().transpose();
}

inline Mat4 spd_sqrt(const Mat4& m) {
    if (min_eigenvalue(m) <= 0.0)
        throw degenerate_metric_error("spd_sqrt: matrix not positive definite");
    return sym_matrix_function(m, [](double x) { return std::sqrt(x); });
}

inline Mat4 spd_inv_sqrt(const Mat4& m) {
    if (min_eigenvalue(m) <= 0.0)
        throw degenerate_metric_error("spd_inv_sqrt: matrix not positive definite");
    return sym_matrix_function(m, [](double x) { return 1.0 / std::sqrt(x); });
}

inline Mat4 sym_exp(const Mat4& m) {
    return sym_matrix_function(m, [](double x) { return std::exp(x); });
}

// log of a symmetric positive definite matrix; throws if an eigenvalue is <= 0
inline Mat4 spd_log(const Mat4& m) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(symmetrize(m));
    Vec4 lam = es.eigenvalues();
    if (lam.minCoeff() <= 0.0)
        throw not_comparable_error("spd_log: non-positive eigenvalue");
    Vec4 flam;
    for (int i = 0; i < 4; ++i) flam[i] = std::log(lam[i]);
    return es.eigenvectors() * flam.asDiagonal() * es.eigenvectors().transpose();
}

// Value with first and second derivative in one scalar variable.
struct Jet2 {
    double v = 0.0, d = 0.0, dd = 0.0;

    Jet2() = default;
    Jet2(double v_) : v(v_) {}
    Jet2(double v_, double d_, double dd_) : v(v_), d(d_), dd(dd_) {}
    static Jet2 variable(double x) { return {x, 1.0, 0.0}; }

    Jet2 operator+(const Jet2& o) const { return {v + o.v, d + o.d, dd + o.dd}; }
    Jet2 operator-(const Jet2& o) const { return {v - o.v, d - o.d, dd - o.dd}; }
    Jet2 operator-() const { return {-v, -d, -dd}; }
    Jet2 operator*(const Jet2& o) const {
        return {v * o.v, d * o.v + v * o.d, dd * o.v + 2.0 * d * o.d + v * o.dd};
    }
    Jet2 operator/(const Jet2& o) const {
        double iv = 1.0 / o.v;
        double q = v * iv;
        double qd = (d - q * o.d) * iv;
        double qdd = (dd - 2.0 * qd * o.d - q * o.dd) * iv;
        return {q, qd, qdd};
    }
};

inline Jet2 operator*(double c, const Jet2& j) { return {c * j.v, c * j.d, c * j.dd}; }
inline Jet2 operator+(double c, const Jet2& j) { return {c + j.v, j.d, j.dd}; }
inline Jet2 operator-(double c, const Jet2& j) { return {c - j.v, -j.d, -j.dd}; }
inline Jet2 operator/(double c, const Jet2& j) { return Jet2(c) / j; }
inline Jet2 jet_exp(const Jet2& j) {
    double e = std::exp(j.v);
    return {e, e * j.d, e * (j.dd + j.d * j.d)};
}

// Value with directional derivatives along a 4-frame; used to push connection
// coefficients and their frame derivatives through algebraic relations.
struct Jet4 {
    double v = 0.0;
    Vec4 d = Vec4::Zero();

    Jet4() = default;
    Jet4(double v_) : v(v_) {}
    Jet4(double v_, const Vec4& d_) : v(v_), d(d_) {}

    Jet4 operator+(const Jet4& o) const { return {v + o.v, d + o.d}; }
    Jet4 operator-(const Jet4& o) const { return {v - o.v, d - o.d}; }
    Jet4 operator-() const { return {-v, -d}; }
    Jet4 operator*(const Jet4& o) const { return {v * o.v, v * o.d + o.v * d}; }
    Jet4 operator/(const Jet4& o) const {
        double q = v / o.v;
        return {q, (d - q * o.d) / o.v};
    }
};

inline Jet4 operator*(double c, const Jet4& j) { return {c * j.v, c * j.d}; }
inline Jet4 operator+(double c, const Jet4& j) { return {c + j.v, j.d}; }
inline Jet4 operator-(double c, const Jet4& j) { return {c - j.v, -j.d}; }
inline Jet4 jet_sqrt(const Jet4& j) {
    double s = std::sqrt(j.v);
    return {s, j.d / (2.0 * s)};
}

// Scalar with gradient and hessian in the four chart coordinates; the island
// metric is assembled in this type to expose exact first and second partials.
struct D2 {
    double v = 0.0;
    Vec4 g = Vec4::Zero();
    Mat4 h = Mat4::Zero();

    D2() = default;
    D2(double v_) : v(v_) {}
    D2(double v_, const Vec4& g_, const Mat4& h_) : v(v_), g(g_), h(h_) {}
    static D2 variable(double x, int axis) {
        D2 d(x);
        d.g[axis] = 1.0;
        return d;
    }

    D2 operator+(const D2& o) const { return {v + o.v, g + o.g, h + o.h}; }
    D2 operator-(const D2& o) const { return {v - o.v, g - o.g, h - o.h}; }
    D2 operator-() const { return {-v, -g, -h}; }
    D2 operator*(const D2& o) const {
        return {v * o.v, v * o.g + o.v * g,
                v * o.h + o.v * h + g * o.g.transpose() + o.g * g.transpose()};
    }
    D2 operator/(const D2& o) const {
        D2 inv = o.reciprocal();
        return *this * inv;
    }
    D2 reciprocal() const {
        double iv = 1.0 / v;
        Vec4 gg = -iv * iv * g;
        Mat4 hh = -iv * iv * h + 2.0 * iv * iv * iv * g * g.transpose();
        return {iv, gg, hh};
    }
};

inline D2 operator*(double c, const D2& d) { return {c * d.v, c * d.g, c * d.h}; }
inline D2 operator+(double c, const D2& d) { return {c + d.v, d.g, d.h}; }
inline D2 operator-(double c, const D2& d) { return {c - d.v, -d.g, -d.h}; }
inline D2 d2_sqrt(const D2& d) {
    double s = std::sqrt(d.v);
    Vec4 gg = d.g / (2.0 * s);
    Mat4 hh = d.h / (2.0 * s) - (d.g * d.g.transpose()) / (4.0 * s * s * s);
    return {s, gg, hh};
}

// Compose a bivariate function with known partials with two D2 arguments.
inline D2 d2_compose2(double f, double fr, double fq, double frr, double frq, double fqq,
                      const D2& r, const D2& q) {
    D2 out;
    out.v = f;
    out.g = fr * r.g + fq * q.g;
    out.h = fr * r.h + fq * q.h + frr * r.g * r.g.transpose() + fqq * q.g * q.g.transpose() +
            frq * (r.g * q.g.transpose() + q.g * r.g.transpose());
    return out;
}

}  // namespace curvforge
