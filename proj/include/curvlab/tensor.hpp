#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Dense frame-component tensor algebra in an orthonormal frame. The metric
// is the identity, so index raising/lowering is free and all contractions
// are plain sums.
//
// Conventions used throughout:
//   R(X,Y)Z = grad_X grad_Y Z - grad_Y grad_X Z - grad_[X,Y] Z
//   R[i][j][k][l] = g(R(e_i,e_j)e_k, e_l)
//   Ric[j][k] = sum_i R[i][j][k][i],  s = trace(Ric)
// With these, a space of constant curvature c has
//   R[i][j][k][l] = c*(d_il d_jk - d_ik d_jl)
// and the unit sphere satisfies R(X,Y)Z = g(Y,Z)X - g(X,Z)Y.

namespace curvlab {

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {}

    int dim() const { return dim_; }
    double& operator()(int i, int j) { return a_[idx(i, j)]; }
    double operator()(int i, int j) const { return a_[idx(i, j)]; }

    static Matrix identity(int dim) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < dim_; ++i) t += a_[idx(i, i)];
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    double frobenius_sq() const {
        double t = 0.0;
        for (double v : a_) t += v * v;
        return t;
    }

    std::vector<double> apply(const std::vector<double>& v) const {
        std::vector<double> out(dim_, 0.0);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Matrix multiply(const Matrix& o) const {
        Matrix out(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                double acc = 0.0;
                for (int j = 0; j < dim_; ++j) acc += (*this)(i, j) * o(j, k);
                out(i, k) = acc;
            }
        return out;
    }

    // Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps. Plenty for
    // the d <= 13 matrices that occur here.
    std::vector<double> symmetric_eigenvalues() const {
        Matrix a = *this;
        const int d = dim_;
        for (int sweep = 0; sweep < 64; ++sweep) {
            double off = 0.0;
            for (int p = 0; p < d; ++p)
                for (int q = p + 1; q < d; ++q) off += a(p, q) * a(p, q);
            if (off < 1e-28) break;
            for (int p = 0; p < d; ++p)
                for (int q = p + 1; q < d; ++q) {
                    if (std::abs(a(p, q)) < 1e-300) continue;
                    const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                    const double t = (theta >= 0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;
                    for (int k = 0; k < d; ++k) {
                        const double akp = a(k, p), akq = a(k, q);
                        a(k, p) = c * akp - s * akq;
                        a(k, q) = s * akp + c * akq;
                    }
                    for (int k = 0; k < d; ++k) {
                        const double apk = a(p, k), aqk = a(q, k);
                        a(p, k) = c * apk - s * aqk;
                        a(q, k) = s * apk + c * aqk;
                    }
                }
        }
        std::vector<double> ev(d);
        for (int i = 0; i < d; ++i) ev[i] = a(i, i);
        std::sort(ev.begin(), ev.end());
        return ev;
    }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }
    int dim_ = 0;
    std::vector<double> a_;
};

// Rank-3 array; used for structure constants and connection coefficients.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int dim)
        : dim_(dim), a_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {}

    int dim() const { return dim_; }
    double& operator()(int i, int j, int k) { return a_[idx(i, j, k)]; }
    double operator()(int i, int j, int k) const { return a_[idx(i, j, k)]; }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
    }
    int dim_ = 0;
    std::vector<double> a_;
};

class CurvatureTensor {
public:
    CurvatureTensor() = default;
    explicit CurvatureTensor(int dim)
        : dim_(dim), a_(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0) {
        if (dim < 2) throw std::invalid_argument("CurvatureTensor: dim must be >= 2");
    }

    int dim() const { return dim_; }
    double& operator()(int i, int j, int k, int l) { return a_[idx(i, j, k, l)]; }
    double operator()(int i, int j, int k, int l) const { return a_[idx(i, j, k, l)]; }

    double norm_sq() const {
        double t = 0.0;
        for (double v : a_) t += v * v;
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    // Components in a new orthonormal frame whose basis vectors are the
    // columns of B (expressed in the old frame).
    CurvatureTensor rotate(const Matrix& basis) const {
        const int d = dim_;
        if (basis.dim() != d) throw std::invalid_argument("rotate: basis dim mismatch");
        // contract one index at a time: O(d^5)
        auto contract_first = [d](const std::vector<double>& in, const Matrix& b) {
            std::vector<double> out(in.size(), 0.0);
            const std::size_t stride = static_cast<std::size_t>(d) * d * d;
            for (int p = 0; p < d; ++p)
                for (int i = 0; i < d; ++i) {
                    const double w = b(i, p);
                    if (w == 0.0) continue;
                    const std::size_t src = static_cast<std::size_t>(i) * stride;
                    const std::size_t dst = static_cast<std::size_t>(p) * stride;
                    for (std::size_t r = 0; r < stride; ++r) out[dst + r] += w * in[src + r];
                }
            return out;
        };
        // rotate index 0, then cycle indices so each one takes its turn in front
        std::vector<double> cur = a_;
        for (int pass = 0; pass < 4; ++pass) {
            cur = contract_first(cur, basis);
            // cyclic transpose (i,j,k,l) -> (j,k,l,i)
            std::vector<double> cyc(cur.size());
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k)
                        for (int l = 0; l < d; ++l)
                            cyc[((static_cast<std::size_t>(j) * d + k) * d + l) * d + i] =
                                cur[((static_cast<std::size_t>(i) * d + j) * d + k) * d + l];
            cur = std::move(cyc);
        }
        CurvatureTensor out(d);
        out.a_ = std::move(cur);
        return out;
    }

private:
    std::size_t idx(int i, int j, int k, int l) const {
        return ((static_cast<std::size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l;
    }
    int dim_ = 0;
    std::vector<double> a_;
};

struct SymmetryReport {
    double max_antisym = 0.0;  // both index pairs
    double max_pair = 0.0;
    double max_bianchi = 0.0;

    bool valid(double tol) const {
        return max_antisym < tol && max_pair < tol && max_bianchi < tol;
    }
    double worst() const { return std::max({max_antisym, max_pair, max_bianchi}); }
};

inline SymmetryReport validate_symmetries(const CurvatureTensor& t) {
    const int d = t.dim();
    SymmetryReport rep;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const double v = t(i, j, k, l);
                    rep.max_antisym = std::max(rep.max_antisym, std::abs(v + t(j, i, k, l)));
                    rep.max_antisym = std::max(rep.max_antisym, std::abs(v + t(i, j, l, k)));
                    rep.max_pair = std::max(rep.max_pair, std::abs(v - t(k, l, i, j)));
                    rep.max_bianchi = std::max(
                        rep.max_bianchi, std::abs(v + t(j, k, i, l) + t(k, i, j, l)));
                }
    return rep;
}

inline CurvatureTensor constant_curvature(int dim, double c) {
    if (dim < 2) throw std::invalid_argument("constant_curvature: dim must be >= 2");
    CurvatureTensor t(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            t(i, j, j, i) = c;
            t(i, j, i, j) = -c;
        }
    return t;
}

inline Matrix ricci_of(const CurvatureTensor& t) {
    const int d = t.dim();
    Matrix ric(d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            double acc = 0.0;
            for (int i = 0; i < d; ++i) acc += t(i, j, k, i);
            ric(j, k) = acc;
        }
    return ric;
}

inline Matrix breve_of(const CurvatureTensor& t) {
    const int d = t.dim();
    Matrix b(d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            double acc = 0.0;
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q)
                    for (int r = 0; r < d; ++r) acc += t(i, p, q, r) * t(j, p, q, r);
            b(i, j) = acc;
            b(j, i) = acc;
        }
    return b;
}

// Totally trace-free part of the curvature (undefined for dim < 3).
inline CurvatureTensor weyl_of(const CurvatureTensor& t, const Matrix& ric, double s) {
    const int d = t.dim();
    if (d < 3) throw std::invalid_argument("weyl_of: dim must be >= 3");
    CurvatureTensor w(d);
    const double sc = s / (static_cast<double>(d - 1) * (d - 2));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    double v = t(i, j, k, l);
                    v += ((i == k ? ric(j, l) : 0.0) - (i == l ? ric(j, k) : 0.0) -
                          (j == k ? ric(i, l) : 0.0) + (j == l ? ric(i, k) : 0.0)) /
                         (d - 2);
                    v -= sc * ((j == l && i == k ? 1.0 : 0.0) - (i == l && j == k ? 1.0 : 0.0));
                    w(i, j, k, l) = v;
                }
    return w;
}

struct InvariantRecord {
    double scalar = 0.0;          // s
    double ricci_normsq = 0.0;    // |Ric|^2
    double traceless_normsq = 0.0;  // |Ric0|^2
    double weyl_normsq = 0.0;     // |W|^2
    double riemann_normsq = 0.0;  // |R|^2
    double breve_xixi = 0.0;      // Breve[0][0]
};

struct CurvatureInvariants {
    InvariantRecord record;
    Matrix ricci;
    Matrix breve;
    CurvatureTensor weyl;
};

inline CurvatureInvariants invariants_of(const CurvatureTensor& t) {
    const int d = t.dim();
    if (d < 3) throw std::invalid_argument("invariants_of: dim must be >= 3");
    CurvatureInvariants inv;
    inv.ricci = ricci_of(t);
    inv.breve = breve_of(t);
    const double s = inv.ricci.trace();
    inv.weyl = weyl_of(t, inv.ricci, s);
    inv.record.scalar = s;
    inv.record.ricci_normsq = inv.ricci.frobenius_sq();
    inv.record.traceless_normsq = inv.record.ricci_normsq - s * s / d;
    inv.record.weyl_normsq = inv.weyl.norm_sq();
    inv.record.riemann_normsq = t.norm_sq();
    inv.record.breve_xixi = inv.breve(0, 0);
    return inv;
}

// Max contraction of W over any index pair; < tol for a genuine Weyl tensor.
inline double weyl_trace_residual(const CurvatureTensor& w) {
    const int d = w.dim();
    double worst = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            double t13 = 0.0, t14 = 0.0, t34 = 0.0;
            for (int i = 0; i < d; ++i) {
                t13 += w(i, a, i, b);
                t14 += w(i, a, b, i);
                t34 += w(a, b, i, i);
            }
            worst = std::max({worst, std::abs(t13), std::abs(t14), std::abs(t34)});
        }
    return worst;
}

struct WeaklyEinsteinResidual {
    double full = 0.0;  // max_ij |Breve_ij - (|R|^2/d) delta_ij|
    double xixi = 0.0;  // |Breve_00 - |R|^2/d|
};

inline WeaklyEinsteinResidual weakly_einstein_residual(const CurvatureTensor& t) {
    const int d = t.dim();
    const Matrix b = breve_of(t);
    const double target = t.norm_sq() / d;
    WeaklyEinsteinResidual r;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double dev = std::abs(b(i, j) - (i == j ? target : 0.0));
            r.full = std::max(r.full, dev);
        }
    r.xixi = std::abs(b(0, 0) - target);
    return r;
}

// | |R|^2 - 2s^2/(d(d-1)) - 4|Ric0|^2/(d-2) - |W|^2 | ; vanishes for every
// tensor with the Riemann symmetries.
inline double norm_decomposition_residual(const CurvatureTensor& t) {
    const int d = t.dim();
    if (d < 3) throw std::invalid_argument("norm_decomposition_residual: dim must be >= 3");
    const CurvatureInvariants inv = invariants_of(t);
    const auto& rec = inv.record;
    const double rhs = 2.0 * rec.scalar * rec.scalar / (static_cast<double>(d) * (d - 1)) +
                       4.0 * rec.traceless_normsq / (d - 2) + rec.weyl_normsq;
    return std::abs(rec.riemann_normsq - rhs);
}

}  // namespace curvlab
