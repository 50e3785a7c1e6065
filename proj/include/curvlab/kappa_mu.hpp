#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "curvlab/tensor.hpp"

// Synthetic curvature tensors of contact metric and almost cosymplectic
// (kappa,mu)-spaces in the adapted h-eigenframe:
//   index 0 = xi, indices 1..n the +lambda eigenspace, n+1..2n = phi of it.
// These are assembled from the published block formulas, independently of
// the Lie-model Koszul path, so the two can cross-validate each other.

namespace curvlab {

enum class Family { contact, almost_cosymplectic };

struct KappaMuParams {
    Family family = Family::contact;
    int n = 1;
    double kappa = 0.0;
    double mu = 0.0;

    int dim() const { return 2 * n + 1; }

    double lambda() const {
        return family == Family::contact ? std::sqrt(1.0 - kappa) : std::sqrt(-kappa);
    }

    void validate() const {
        if (n < 1) throw std::invalid_argument("KappaMuParams: n must be >= 1");
        if (family == Family::contact) {
            if (!(kappa < 1.0)) throw std::invalid_argument("kappa must be < 1");
            // the adapted frame degenerates as h -> 0
            if (lambda() < 1e-6)
                throw std::invalid_argument("kappa too close to 1 (lambda < 1e-6)");
        } else {
            if (!(kappa < 0.0)) throw std::invalid_argument("kappa must be < 0");
        }
    }
};

inline Matrix adapted_h(int n, double lambda) {
    Matrix h(2 * n + 1);
    for (int a = 1; a <= n; ++a) {
        h(a, a) = lambda;
        h(n + a, n + a) = -lambda;
    }
    return h;
}

inline Matrix adapted_phi(int n) {
    Matrix p(2 * n + 1);
    for (int i = 1; i <= n; ++i) {
        p(n + i, i) = 1.0;
        p(i, n + i) = -1.0;
    }
    return p;
}

namespace detail {

// Horizontal blocks of the contact family: R(e_a,e_b)e_k by eigenspace
// membership of (a,b,k). Written as a vector in the adapted frame.
// plus = indices 1..n, minus = n+1..2n; phi maps a -> a+n resp. a -> a-n
// with sign, so g(phi x, y) factors reduce to Kronecker lookups.
struct ContactBlocks {
    int n;
    double kappa, mu, lambda;
    int d() const { return 2 * n + 1; }
    bool plus(int a) const { return a <= n; }
    // (index, coeff) of phi e_a for horizontal a
    std::pair<int, double> phiv(int a) const {
        return plus(a) ? std::pair<int, double>{a + n, 1.0} : std::pair<int, double>{a - n, -1.0};
    }

    void op(int a, int b, int k, double* v) const {
        for (int i = 0; i < d(); ++i) v[i] = 0.0;
        if (!plus(a) && plus(b)) {  // reduce to the listed order by antisymmetry
            std::array<double, 32> tmp{};
            op(b, a, k, tmp.data());
            for (int i = 0; i < d(); ++i) v[i] = -tmp[i];
            return;
        }
        if (plus(a) && plus(b)) {
            if (plus(k)) {
                const double c = 2.0 * (1.0 + lambda) - mu;
                if (b == k) v[a] += c;
                if (a == k) v[b] -= c;
            } else {
                const auto [pa, ca] = phiv(a);
                const auto [pb, cb] = phiv(b);
                const double c = kappa - mu;
                if (pb == k) v[pa] += c * cb * ca;
                if (pa == k) v[pb] -= c * ca * cb;
            }
        } else if (!plus(a) && !plus(b)) {
            if (!plus(k)) {
                const double c = 2.0 * (1.0 - lambda) - mu;
                if (b == k) v[a] += c;
                if (a == k) v[b] -= c;
            } else {
                const auto [pa, ca] = phiv(a);
                const auto [pb, cb] = phiv(b);
                const double c = kappa - mu;
                if (pb == k) v[pa] += c * cb * ca;
                if (pa == k) v[pb] -= c * ca * cb;
            }
        } else {  // a in D(lambda), b in D(-lambda)
            const auto [pa, ca] = phiv(a);
            const auto [pb, cb] = phiv(b);
            const auto [pk, ck] = phiv(k);
            if (!plus(k)) {
                // R(X+,Y-)Z- = kappa g(phi X,Z) phi Y + mu g(phi X,Y) phi Z
                if (pa == k) v[pb] += kappa * ca * cb;
                if (pa == b) v[pk] += mu * ca * ck;
            } else {
                // R(X+,Y-)Z+ = -kappa g(phi Y,Z) phi X - mu g(phi Y,X) phi Z
                if (pb == k) v[pa] -= kappa * cb * ca;
                if (pb == a) v[pk] -= mu * cb * ck;
            }
        }
    }
};

}  // namespace detail

inline CurvatureTensor assemble_contact_km(const KappaMuParams& p) {
    if (p.family != Family::contact)
        throw std::invalid_argument("assemble_contact_km: family must be contact");
    p.validate();
    const int n = p.n;
    const int d = p.dim();
    const double lambda = p.lambda();
    const Matrix h = adapted_h(n, lambda);
    CurvatureTensor r(d);
    // xi blocks from the nullity condition and its symmetry images
    for (int a = 1; a < d; ++a)
        for (int b = 1; b < d; ++b) {
            const double v = p.kappa * (a == b ? 1.0 : 0.0) - p.mu * h(a, b);
            r(a, 0, 0, b) = v;
            r(0, a, 0, b) = -v;
            r(a, 0, b, 0) = -v;
            r(0, a, b, 0) = v;
        }
    detail::ContactBlocks blocks{n, p.kappa, p.mu, lambda};
    std::array<double, 32> v{};
    for (int a = 1; a < d; ++a)
        for (int b = 1; b < d; ++b) {
            if (a == b) continue;
            for (int k = 1; k < d; ++k) {
                blocks.op(a, b, k, v.data());
                for (int l = 0; l < d; ++l) r(a, b, k, l) = v[l];
            }
        }
    return r;
}

// R = -kappa R3 - R_{5,2} + mu R6 evaluated tensorially in the adapted
// frame, with h = diag(0, lambda I, -lambda I) and the standard phi.
inline CurvatureTensor assemble_cosymplectic_km(const KappaMuParams& p) {
    if (p.family != Family::almost_cosymplectic)
        throw std::invalid_argument("assemble_cosymplectic_km: family must be almost-cosymplectic");
    p.validate();
    const int n = p.n;
    const int d = p.dim();
    const double lambda = p.lambda();
    const Matrix h = adapted_h(n, lambda);
    const Matrix phi = adapted_phi(n);
    const Matrix ph = phi.multiply(h);
    auto eta = [](int i) { return i == 0 ? 1.0 : 0.0; };
    CurvatureTensor r(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const double r3 = eta(i) * eta(k) * (j == l ? 1.0 : 0.0) -
                                      eta(j) * eta(k) * (i == l ? 1.0 : 0.0) +
                                      (i == k ? 1.0 : 0.0) * eta(j) * eta(l) -
                                      (j == k ? 1.0 : 0.0) * eta(i) * eta(l);
                    const double r6 = eta(i) * eta(k) * h(l, j) - eta(j) * eta(k) * h(l, i) +
                                      h(k, i) * eta(j) * eta(l) - h(k, j) * eta(i) * eta(l);
                    const double r52 = ph(k, j) * ph(l, i) - ph(k, i) * ph(l, j);
                    r(i, j, k, l) = -p.kappa * r3 - r52 + p.mu * r6;
                }
    return r;
}

inline CurvatureTensor assemble_km(const KappaMuParams& p) {
    return p.family == Family::contact ? assemble_contact_km(p) : assemble_cosymplectic_km(p);
}

struct ClosedFormInvariants {
    double breve_xixi = 0.0;
    double riemann_normsq = 0.0;
    std::array<double, 6> block_squares{};  // index-range sums in Lemma order
};

inline ClosedFormInvariants closed_form_invariants(const KappaMuParams& p) {
    p.validate();
    const double n = p.n, k = p.kappa, mu = p.mu;
    ClosedFormInvariants out;
    if (p.family == Family::contact) {
        const double lam = p.lambda();
        out.breve_xixi = 4.0 * n * (k * k - mu * mu * (k - 1.0));
        const double t1 = 2.0 * n * (n - 1.0) * std::pow(2.0 * (1.0 + lam) - mu, 2);
        const double t3 = 2.0 * n * (n - 1.0) * (k - mu) * (k - mu);
        const double t4 = (k * k + mu * mu) * n * n + 2.0 * n * k * mu;
        const double t6 = 2.0 * n * (n - 1.0) * std::pow(2.0 * (1.0 - lam) - mu, 2);
        out.block_squares = {t1, 0.0, t3, t4, 0.0, t6};
        out.riemann_normsq = 2.0 * out.breve_xixi + t1 + 2.0 * t3 + 4.0 * t4 + t6;
    } else {
        out.breve_xixi = 4.0 * n * (k * k - mu * mu * k);
        const double t3 = 2.0 * n * (n - 1.0) * k * k;
        const double t4 = n * n * k * k;
        out.block_squares = {0.0, 0.0, t3, t4, 0.0, 0.0};
        out.riemann_normsq = 4.0 * n * ((2.0 * n + 1.0) * k * k - 2.0 * mu * mu * k);
    }
    return out;
}

// Both sides of the adapted-frame norm partition (Greek = 1..n,
// capital = n+1..2n), plus the Weyl-tensor analogue.
struct LemmaResiduals {
    double curvature_partition = 0.0;
    double weyl_partition = 0.0;
};

inline LemmaResiduals lemma_decomposition_residual(const CurvatureTensor& t, int n) {
    const int d = 2 * n + 1;
    if (t.dim() != d) throw std::invalid_argument("lemma_decomposition_residual: dim mismatch");
    auto greek = [n](int i) { return i >= 1 && i <= n; };
    auto capital = [n, d](int i) { return i > n && i < d; };
    auto partition = [&](const CurvatureTensor& r) {
        double b00 = 0.0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) b00 += r(0, i, j, k) * r(0, i, j, k);
        double acc = 2.0 * b00;
        for (int i = 1; i < d; ++i)
            for (int j = 1; j < d; ++j)
                for (int k = 1; k < d; ++k)
                    for (int l = 1; l < d; ++l) {
                        const double v2 = r(i, j, k, l) * r(i, j, k, l);
                        if (greek(i) && greek(j) && greek(k) && greek(l))
                            acc += v2;
                        else if (greek(i) && greek(j) && greek(k) && capital(l))
                            acc += 4.0 * v2;
                        else if (greek(i) && greek(j) && capital(k) && capital(l))
                            acc += 2.0 * v2;
                        else if (greek(i) && capital(j) && greek(k) && capital(l))
                            acc += 4.0 * v2;
                        else if (capital(i) && capital(j) && greek(k) && capital(l))
                            acc += 4.0 * v2;
                        else if (capital(i) && capital(j) && capital(k) && capital(l))
                            acc += v2;
                    }
        return std::abs(r.norm_sq() - acc);
    };
    LemmaResiduals res;
    res.curvature_partition = partition(t);
    const CurvatureInvariants inv = invariants_of(t);
    // |W|^2 = 2 sum W_{ija0}^2 + sum W_{dcab}^2
    double wja0 = 0.0, wdcab = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int a = 1; a < d; ++a) wja0 += inv.weyl(i, j, a, 0) * inv.weyl(i, j, a, 0);
    for (int i = 1; i < d; ++i)
        for (int j = 1; j < d; ++j)
            for (int a = 1; a < d; ++a)
                for (int b = 1; b < d; ++b) wdcab += inv.weyl(i, j, a, b) * inv.weyl(i, j, a, b);
    res.weyl_partition = std::abs(inv.record.weyl_normsq - (2.0 * wja0 + wdcab));
    return res;
}

// Blockwise squared sums of an adapted-frame tensor, in the same order as
// ClosedFormInvariants::block_squares.
inline std::array<double, 6> block_squares_of(const CurvatureTensor& t, int n) {
    const int d = 2 * n + 1;
    if (t.dim() != d) throw std::invalid_argument("block_squares_of: dim mismatch");
    auto greek = [n](int i) { return i >= 1 && i <= n; };
    auto capital = [n, d](int i) { return i > n && i < d; };
    std::array<double, 6> s{};
    for (int i = 1; i < d; ++i)
        for (int j = 1; j < d; ++j)
            for (int k = 1; k < d; ++k)
                for (int l = 1; l < d; ++l) {
                    const double v2 = t(i, j, k, l) * t(i, j, k, l);
                    if (greek(i) && greek(j) && greek(k) && greek(l)) s[0] += v2;
                    else if (greek(i) && greek(j) && greek(k) && capital(l)) s[1] += v2;
                    else if (greek(i) && greek(j) && capital(k) && capital(l)) s[2] += v2;
                    else if (greek(i) && capital(j) && greek(k) && capital(l)) s[3] += v2;
                    else if (capital(i) && capital(j) && greek(k) && capital(l)) s[4] += v2;
                    else if (capital(i) && capital(j) && capital(k) && capital(l)) s[5] += v2;
                }
    return s;
}

// The scalar solvability conditions extracted from the xi-xi component of
// the weakly Einstein equation.
struct WeaklyEinsteinPolynomials {
    double primary = 0.0;      // contact: LHS-RHS of the quadratic relation;
                               // cosymplectic: the xi-xi residual closed form
    double eq18_diff = 0.0;    // contact only: kappa-form LHS-RHS
    double factored_n1 = 0.0;  // contact, n=1 only: (mu+2) mu kappa
};

inline WeaklyEinsteinPolynomials weakly_einstein_polynomials(const KappaMuParams& p) {
    p.validate();
    const double n = p.n, k = p.kappa, mu = p.mu;
    WeaklyEinsteinPolynomials out;
    if (p.family == Family::contact) {
        const double lam2 = 1.0 - k;
        out.primary = -(2.0 * n - 1.0) * mu * mu * k -
                      ((n - 1.0) * (4.0 * (1.0 + lam2) + mu * mu - 4.0 * mu) -
                       2.0 * (n - 2.0) * k * mu);
        out.eq18_diff =
            (-mu * mu * (2.0 * n - 1.0) + 2.0 * mu * (n - 2.0) + 4.0 * (n - 1.0)) * k -
            (n - 1.0) * (4.0 + (mu - 2.0) * (mu - 2.0));
        if (p.n == 1) out.factored_n1 = -(mu + 2.0) * mu * k;
    } else {
        out.primary = -4.0 * n * mu * mu * k * (2.0 * n - 1.0) / (2.0 * n + 1.0);
    }
    return out;
}

struct MuBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// Roots of -mu^2(2n-1) + 2 mu(n-2) + 4(n-1) = 0: outside (lower, upper)
// the quadratic is negative, which the kappa<0 case requires.
inline MuBounds mu_admissible_bounds(int n) {
    if (n < 2) throw std::invalid_argument("mu_admissible_bounds: n must be >= 2");
    const double rad = std::sqrt(9.0 * n * n - 16.0 * n + 8.0);
    return MuBounds{(n - 2.0 - rad) / (2.0 * n - 1.0), (n - 2.0 + rad) / (2.0 * n - 1.0)};
}

inline double boeckx_invariant(double kappa, double mu) {
    if (!(kappa < 1.0)) throw std::invalid_argument("boeckx_invariant: kappa must be < 1");
    return (1.0 - mu / 2.0) / std::sqrt(1.0 - kappa);
}

// 3-dim branch label by the signs of 1 +- lambda - mu/2, lambda = sqrt(1-kappa).
inline std::string classify_3dim(double kappa, double mu, double tol = 1e-9) {
    if (kappa > 1.0) throw std::invalid_argument("classify_3dim: kappa must be <= 1");
    if (std::abs(kappa - 1.0) < tol) return "Sasakian";
    const double lam = std::sqrt(1.0 - kappa);
    const double x = 1.0 - lam - mu / 2.0;
    const double y = 1.0 + lam - mu / 2.0;
    if (std::abs(x) < tol)
        return (std::abs(mu) < tol && std::abs(kappa) < tol) ? "E(2)-type-flat" : "E(2)-type";
    if (std::abs(y) < tol) return "E(1,1)-type";
    if (x > 0.0) return "SU(2)-type";
    return "SL(2,R)-type";
}

}  // namespace curvlab
