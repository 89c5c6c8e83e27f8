#include "curvforge/scalar_formula.hpp"

namespace curvforge {

namespace {

inline double A(const ConnectionCoeffs& c, int i, int j, int k) {
    return c.a[i - 1][j - 1][k - 1];
}
inline double AD(const ConnectionCoeffs& c, int i, int j, int k, int l) {
    return c.aD[i - 1][j - 1][k - 1][l - 1];
}

}  // namespace

double scalar_formula(const ConnectionCoeffs& c, double Y, double Yp, double Ypp) {
    double T = 3.0 * A(c, 1, 2, 2) + 2.0 * A(c, 1, 3, 3) + 2.0 * A(c, 1, 4, 4);
    double P = 0.0;
    for (int i = 2; i <= 4; ++i) P += AD(c, 1, i, i, 1) + A(c, 1, i, i) * A(c, 1, i, i);
    P += A(c, 1, 3, 4) * A(c, 1, 3, 4) + A(c, 1, 2, 2) * A(c, 1, 3, 3) +
         A(c, 1, 2, 2) * A(c, 1, 4, 4) + A(c, 1, 3, 3) * A(c, 1, 4, 4);
    double dq = A(c, 2, 4, 3) - A(c, 2, 3, 4);
    P += 0.25 * dq * dq;

    double sq = A(c, 2, 4, 3) + A(c, 2, 3, 4);
    double Q = AD(c, 2, 3, 3, 2) + AD(c, 2, 4, 4, 2) + A(c, 2, 3, 3) * A(c, 2, 3, 3) +
               A(c, 2, 4, 4) * A(c, 2, 4, 4) + A(c, 2, 3, 3) * A(c, 2, 4, 4) +
               0.25 * sq * sq;

    double S = 0.0;
    for (int i = 3; i <= 4; ++i) {
        double t = Y * A(c, 2, i, 1) - (Y + 2.0) * A(c, 2, 1, i);
        S += t * t;
    }

    double I0 = 2.0 * (AD(c, 2, 3, 2, 3) + AD(c, 2, 4, 2, 4) + AD(c, 3, 4, 3, 4) +
                       AD(c, 4, 3, 4, 3) - A(c, 2, 3, 2) * A(c, 2, 3, 2) -
                       A(c, 2, 4, 2) * A(c, 2, 4, 2) - A(c, 3, 4, 3) * A(c, 3, 4, 3) -
                       A(c, 4, 3, 4) * A(c, 4, 3, 4) + A(c, 2, 4, 2) * A(c, 4, 3, 3) +
                       A(c, 2, 3, 2) * A(c, 3, 4, 4) + A(c, 3, 4, 2) * A(c, 2, 3, 4) -
                       A(c, 3, 4, 2) * A(c, 2, 4, 3) + 0.5 * A(c, 2, 3, 4) * A(c, 2, 3, 4) +
                       0.5 * A(c, 2, 4, 3) * A(c, 2, 4, 3) - A(c, 2, 4, 3) * A(c, 2, 3, 4));

    return -Ypp - Yp * T - 2.0 * (Y + 1.0) * P - (2.0 / (Y + 1.0)) * Q - 0.5 * S + I0;
}

double scalar_diff(const ConnectionCoeffs& c, double Y, double Yp, double Ypp) {
    double T = 3.0 * A(c, 1, 2, 2) + 2.0 * A(c, 1, 3, 3) + 2.0 * A(c, 1, 4, 4);

    double dq = A(c, 2, 4, 3) - A(c, 2, 3, 4);
    double I1h = 0.25 * dq * dq;
    for (int i = 2; i <= 4; ++i) I1h += AD(c, 1, i, i, 1) + A(c, 1, i, i) * A(c, 1, i, i);
    I1h += A(c, 1, 3, 4) * A(c, 1, 3, 4) + A(c, 1, 2, 2) * A(c, 1, 3, 3) +
           A(c, 1, 2, 2) * A(c, 1, 4, 4) + A(c, 1, 3, 3) * A(c, 1, 4, 4);

    double a231 = A(c, 2, 3, 1), a241 = A(c, 2, 4, 1);
    double a213 = A(c, 2, 1, 3), a214 = A(c, 2, 1, 4);
    I1h += 0.25 * (Y * (a231 * a231 + a241 * a241) -
                   2.0 * (Y + 2.0) * (a213 * a231 + a214 * a241) +
                   (Y + 4.0) * (a213 * a213 + a214 * a214));

    double sq = A(c, 2, 4, 3) + A(c, 2, 3, 4);
    double Q = AD(c, 2, 3, 3, 2) + AD(c, 2, 4, 4, 2) + A(c, 2, 3, 3) * A(c, 2, 3, 3) +
               A(c, 2, 4, 4) * A(c, 2, 4, 4) + A(c, 2, 3, 3) * A(c, 2, 4, 4) +
               0.25 * sq * sq;
    I1h -= Q / (Y + 1.0);

    return -Ypp - Yp * T - Y * 2.0 * I1h;
}

namespace {

inline Jet4 J(const ConnectionCoeffs& c, int i, int j, int k) {
    Vec4 g;
    for (int l = 0; l < 4; ++l) g[l] = c.aD[i - 1][j - 1][k - 1][l];
    return Jet4(c.a[i - 1][j - 1][k - 1], g);
}

}  // namespace

ConnectionCoeffs tilde_coeffs(const ConnectionCoeffs& c, double al, double alp, double alpp) {
    Jet4 alpha(al, Vec4(alp, 0, 0, 0));
    Jet4 alphap(alp, Vec4(alpp, 0, 0, 0));
    Jet4 one(1.0);
    Jet4 ia = one / alpha;
    Jet4 ia2 = ia * ia;

    // generators from the printed relation table
    Jet4 t212 = alphap * ia2 + J(c, 2, 1, 2) * ia;
    Jet4 t232 = J(c, 2, 3, 2), t242 = J(c, 2, 4, 2);
    Jet4 t313 = J(c, 3, 1, 3) * ia, t414 = J(c, 4, 1, 4) * ia;
    Jet4 t323 = alpha * J(c, 3, 2, 3), t424 = alpha * J(c, 4, 2, 4);
    Jet4 t231 = 0.5 * (one - ia2) * J(c, 2, 1, 3) + 0.5 * (one + ia2) * J(c, 2, 3, 1);
    Jet4 t241 = 0.5 * (one - ia2) * J(c, 2, 1, 4) + 0.5 * (one + ia2) * J(c, 2, 4, 1);
    Jet4 t213 = 0.5 * (one + ia2) * J(c, 2, 1, 3) + 0.5 * (one - ia2) * J(c, 2, 3, 1);
    Jet4 t214 = 0.5 * (one + ia2) * J(c, 2, 1, 4) + 0.5 * (one - ia2) * J(c, 2, 4, 1);
    Jet4 t343 = J(c, 3, 4, 3), t434 = J(c, 4, 3, 4);
    Jet4 t143 = J(c, 1, 4, 3) * ia, t341 = J(c, 3, 4, 1) * ia;
    Jet4 t342 = (J(c, 2, 4, 3) - J(c, 2, 3, 4)) * (0.5 * ia) +
                (2.0 * J(c, 3, 4, 2) + J(c, 2, 3, 4) - J(c, 2, 4, 3)) * (0.5 * alpha);
    Jet4 t234 = (J(c, 2, 3, 4) - J(c, 2, 4, 3)) * (0.5 * ia) +
                (J(c, 2, 4, 3) + J(c, 2, 3, 4)) * (0.5 * alpha);
    Jet4 t243 = (J(c, 2, 4, 3) - J(c, 2, 3, 4)) * (0.5 * ia) +
                (J(c, 2, 4, 3) + J(c, 2, 3, 4)) * (0.5 * alpha);

    Jet4 z(0.0);
    Jet4 T[4][4][4];
    for (auto& pl : T)
        for (auto& row : pl)
            for (auto& e : row) e = z;

    auto set = [&](int i, int j, int k, const Jet4& v) { T[i - 1][j - 1][k - 1] = v; };

    // 1jk block (tilde a_{1j1} = 0, symmetric in (j,k))
    set(1, 2, 2, -t212);
    set(1, 2, 3, -t213);
    set(1, 3, 2, -t213);
    set(1, 2, 4, -t214);
    set(1, 4, 2, -t214);
    set(1, 3, 3, -t313);
    set(1, 3, 4, t143);
    set(1, 4, 3, t143);
    set(1, 4, 4, -t414);
    // 2jk block
    set(2, 1, 2, t212);
    set(2, 1, 3, t213);
    set(2, 1, 4, t214);
    set(2, 3, 1, t231);
    set(2, 3, 2, t232);
    set(2, 3, 3, -t323);
    set(2, 3, 4, t234);
    set(2, 4, 1, t241);
    set(2, 4, 2, t242);
    set(2, 4, 3, t243);
    set(2, 4, 4, -t424);
    // 3jk block
    set(3, 4, 1, t341);
    set(3, 4, 2, t342);
    set(3, 4, 3, t343);
    set(3, 4, 4, -t434);

    // antisymmetry closure
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                if (i == j) continue;
                if (T[i][j][k].v == 0.0 && T[i][j][k].d.isZero() && !(T[j][i][k].v == 0.0 && T[j][i][k].d.isZero()))
                    T[i][j][k] = -T[j][i][k];
            }

    ConnectionCoeffs out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                out.a[i][j][k] = T[i][j][k].v;
                // convert the chain-rule gradient (in the undeformed frame) to
                // the deformed frame: e~1 = e1/alpha, e~2 = alpha e2
                out.aD[i][j][k][0] = T[i][j][k].d[0] / al;
                out.aD[i][j][k][1] = T[i][j][k].d[1] * al;
                out.aD[i][j][k][2] = T[i][j][k].d[2];
                out.aD[i][j][k][3] = T[i][j][k].d[3];
            }
    return out;
}

TildeCurvature tilde_curvature(const ConnectionCoeffs& ct) {
    auto a = [&](int i, int j, int k) { return ct.a[i - 1][j - 1][k - 1]; };
    auto ad = [&](int i, int j, int k, int l) { return ct.aD[i - 1][j - 1][k - 1][l - 1]; };

    TildeCurvature out;
    double R1212 = ad(1, 2, 2, 1) + a(1, 2, 2) * a(1, 2, 2) + a(1, 2, 3) * a(1, 2, 3) +
                   a(1, 2, 4) * a(1, 2, 4) +
                   2.0 * (a(1, 2, 3) * a(3, 2, 1) + a(1, 2, 4) * a(4, 2, 1));
    double R1313 = ad(1, 3, 3, 1) + a(1, 3, 2) * a(1, 3, 2) + a(1, 3, 3) * a(1, 3, 3) +
                   a(1, 3, 4) * a(1, 3, 4) +
                   2.0 * (a(1, 3, 2) * a(2, 3, 1) + a(1, 3, 4) * a(4, 3, 1));
    double R1414 = ad(1, 4, 4, 1) + a(1, 4, 2) * a(1, 4, 2) + a(1, 4, 3) * a(1, 4, 3) +
                   a(1, 4, 4) * a(1, 4, 4) +
                   2.0 * (a(1, 4, 2) * a(2, 4, 1) + a(1, 4, 3) * a(3, 4, 1));
    double R2323 = ad(2, 3, 3, 2) - ad(2, 3, 2, 3) + a(2, 3, 4) * (a(4, 3, 2) - a(4, 2, 3)) +
                   a(2, 3, 2) * a(2, 3, 2) + a(2, 3, 3) * a(2, 3, 3) +
                   a(1, 2, 2) * a(1, 3, 3) + a(4, 2, 2) * a(4, 3, 3) -
                   a(1, 2, 3) * a(1, 2, 3) + a(2, 4, 3) * a(4, 3, 2);
    double R2424 = ad(2, 4, 4, 2) - ad(2, 4, 2, 4) + a(2, 4, 3) * (a(3, 4, 2) - a(3, 2, 4)) +
                   a(2, 4, 2) * a(2, 4, 2) + a(2, 4, 4) * a(2, 4, 4) +
                   a(1, 2, 2) * a(1, 4, 4) + a(3, 2, 2) * a(3, 4, 4) -
                   a(1, 2, 4) * a(1, 2, 4) + a(2, 3, 4) * a(3, 4, 2);
    double R3434 = ad(3, 4, 4, 3) - ad(3, 4, 3, 4) + a(3, 4, 2) * (a(2, 4, 3) - a(2, 3, 4)) +
                   a(3, 4, 3) * a(3, 4, 3) + a(3, 4, 4) * a(3, 4, 4) +
                   a(1, 3, 3) * a(1, 4, 4) + a(2, 3, 3) * a(2, 4, 4) -
                   a(1, 3, 4) * a(1, 3, 4) + a(3, 2, 4) * a(2, 4, 3);

    out.components = {R1212, R1313, R1414, R2323, R2424, R3434};
    out.scalar = 2.0 * (-(R1212 + R1313 + R1414 + R2323 + R2424 + R3434));

    double half = 0.0;
    for (int i = 2; i <= 4; ++i) half -= ad(1, i, i, 1);
    for (int i = 2; i <= 4; ++i)
        for (int j = i; j <= 4; ++j) half -= a(1, i, j) * a(1, i, j);
    for (int i = 3; i <= 4; ++i) half += ad(2, i, 2, i) - ad(2, i, i, 2);
    half += ad(3, 4, 3, 4) - ad(3, 4, 4, 3);
    half += a(4, 2, 3) * a(3, 4, 2) + a(2, 3, 4) * a(3, 4, 2) + a(2, 3, 4) * a(4, 2, 3);
    for (int i = 3; i <= 4; ++i) half -= a(2, i, 2) * a(2, i, 2) + a(2, i, i) * a(2, i, i);
    half -= a(3, 4, 3) * a(3, 4, 3) + a(3, 4, 4) * a(3, 4, 4);
    for (int i = 3; i <= 4; ++i) half -= a(1, 2, 2) * a(1, i, i);
    half -= a(4, 2, 2) * a(4, 3, 3) + a(3, 2, 2) * a(3, 4, 4) + a(1, 3, 3) * a(1, 4, 4) +
            a(2, 3, 3) * a(2, 4, 4);
    out.scalar_display = 2.0 * half;
    return out;
}

}  // namespace curvforge
