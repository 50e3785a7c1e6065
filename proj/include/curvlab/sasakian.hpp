#pragma once

#include <cmath>
#include <random>
#include <stdexcept>

#include "curvlab/tensor.hpp"

// Sasakian-specific identities: the Weyl xi-components determined by a
// Ricci profile, the squared-sum identity they satisfy, the trace identity
// for tensors with the Sasakian xi-block, and the scalar curvature bounds
// with the round-sphere equality witness.

namespace curvlab {

// A candidate Ricci tensor of a Sasakian space: symmetric with xi an
// eigenvector of eigenvalue 2n. The curvature away from xi is left free;
// these identities depend on the Ricci data only.
struct SasakianRicciProfile {
    int n = 1;
    Matrix ricci;

    int dim() const { return 2 * n + 1; }

    void validate() const {
        if (n < 1) throw std::invalid_argument("SasakianRicciProfile: n must be >= 1");
        if (ricci.dim() != dim())
            throw std::invalid_argument("SasakianRicciProfile: ricci dim mismatch");
        const int d = dim();
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (std::abs(ricci(i, j) - ricci(j, i)) > 1e-12)
                    throw std::invalid_argument("SasakianRicciProfile: ricci not symmetric");
            }
        for (int i = 0; i < d; ++i) {
            const double target = (i == 0) ? 2.0 * n : 0.0;
            if (std::abs(ricci(i, 0) - target) > 1e-12)
                throw std::invalid_argument("SasakianRicciProfile: Ric(xi) != 2n xi");
        }
    }
};

inline SasakianRicciProfile einstein_profile(int n) {
    SasakianRicciProfile p;
    p.n = n;
    p.ricci = Matrix(2 * n + 1);
    for (int i = 0; i < p.dim(); ++i) p.ricci(i, i) = 2.0 * n;
    return p;
}

// Symmetric entries uniform in [-3,3], then row/column 0 overwritten to
// enforce the eigenvector condition. Deterministic per (n, engine state).
inline SasakianRicciProfile random_profile(int n, std::mt19937_64& rng) {
    SasakianRicciProfile p;
    p.n = n;
    const int d = 2 * n + 1;
    p.ricci = Matrix(d);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            const double v = u(rng);
            p.ricci(i, j) = v;
            p.ricci(j, i) = v;
        }
    for (int i = 0; i < d; ++i) {
        p.ricci(i, 0) = 0.0;
        p.ricci(0, i) = 0.0;
    }
    p.ricci(0, 0) = 2.0 * n;
    return p;
}

// W[i][j][l] = W_{ij0l} as a function of the Ricci profile alone.
inline Tensor3 weyl_xi_components(const SasakianRicciProfile& p) {
    p.validate();
    const int d = p.dim();
    const double n = p.n;
    const double s = p.ricci.trace();
    const double coef = 1.0 - (2.0 * n - s / (2.0 * n)) / (2.0 * n - 1.0);
    Tensor3 w(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                const double di0 = (i == 0) ? 1.0 : 0.0;
                const double dj0 = (j == 0) ? 1.0 : 0.0;
                w(i, j, l) = coef * (dj0 * (i == l ? 1.0 : 0.0) - di0 * (j == l ? 1.0 : 0.0)) +
                             (di0 * p.ricci(j, l) - dj0 * p.ricci(i, l)) / (2.0 * n - 1.0);
            }
    return w;
}

// | sum_{i,j,a>=1} W_{ija0}^2 - closed form | ; vanishes for every
// admissible profile.
inline double weyl_xi_identity_residual(const SasakianRicciProfile& p) {
    const Tensor3 w = weyl_xi_components(p);
    const int d = p.dim();
    const double n = p.n;
    const double s = p.ricci.trace();
    double lhs = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int a = 1; a < d; ++a) lhs += w(i, j, a) * w(i, j, a);
    const double ric0 = p.ricci.frobenius_sq() - s * s / d;
    const double rhs = 2.0 / ((2.0 * n - 1.0) * (2.0 * n - 1.0)) *
                       (ric0 - s * s / (2.0 * n * (2.0 * n + 1.0)) + 2.0 * s -
                        2.0 * n * (2.0 * n + 1.0));
    return std::abs(lhs - rhs);
}

// Checks the Sasakian xi-block pattern R(X,Y)xi = eta(Y)X - eta(X)Y.
inline double sasakian_xi_pattern_residual(const CurvatureTensor& t) {
    const int d = t.dim();
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                const double target = (j == 0 ? 1.0 : 0.0) * (i == l ? 1.0 : 0.0) -
                                      (i == 0 ? 1.0 : 0.0) * (j == l ? 1.0 : 0.0);
                worst = std::max(worst, std::abs(t(i, j, 0, l) - target));
            }
    return worst;
}

// |4n - (2s^2/(2n(2n+1)) + 4|Ric0|^2/(2n-1) + |W|^2)/(2n+1)|; requires the
// Sasakian xi-block, which already forces Breve(xi,xi) = 4n.
inline double trace_identity_residual(const CurvatureTensor& t, double tol = 1e-9) {
    const int d = t.dim();
    if (d % 2 == 0) throw std::invalid_argument("trace_identity_residual: dim must be odd");
    if (sasakian_xi_pattern_residual(t) > tol)
        throw std::invalid_argument("trace_identity_residual: tensor lacks the Sasakian xi-block");
    const double n = (d - 1) / 2;
    const CurvatureInvariants inv = invariants_of(t);
    const double s = inv.record.scalar;
    const double rhs = (2.0 * s * s / (2.0 * n * (2.0 * n + 1.0)) +
                        4.0 * inv.record.traceless_normsq / (2.0 * n - 1.0) +
                        inv.record.weyl_normsq) /
                       (2.0 * n + 1.0);
    return std::abs(4.0 * n - rhs);
}

struct ScalarBounds {
    int n = 1;
    double lower = 0.0;
    double upper = 0.0;
};

inline ScalarBounds scalar_bounds(int n) {
    if (n < 1) throw std::invalid_argument("scalar_bounds: n must be >= 1");
    ScalarBounds b;
    b.n = n;
    if (n == 1) {
        b.lower = -6.0;
        b.upper = 6.0;
    } else {
        const double q = 4.0 * n * n - 4.0 * n;
        b.lower = -2.0 * n * (2.0 * n + 1.0) * (q + 3.0) / (q - 1.0);
        b.upper = 2.0 * n * (2.0 * n + 1.0);
    }
    return b;
}

// n=1 rearrangement: with W = 0 the trace identity reads
// 4|Ric0|^2 = 12 - s^2/3.
inline double dim3_ricci_identity_residual(double s, double traceless_normsq) {
    return std::abs(4.0 * traceless_normsq - (12.0 - s * s / 3.0));
}

// The unit-curvature witness: constant curvature 1 with xi = e0. Saturates
// the upper scalar bound and is weakly Einstein with vanishing Weyl part.
inline CurvatureTensor sphere_sasakian_tensor(int n) {
    if (n < 1) throw std::invalid_argument("sphere_sasakian_tensor: n must be >= 1");
    return constant_curvature(2 * n + 1, 1.0);
}

}  // namespace curvlab
