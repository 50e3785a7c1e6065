#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvlab/tensor.hpp"

// Left-invariant geometry of a metric Lie algebra with an almost contact
// structure. The basis is orthonormal for the model metric; brackets are
// [e_i, e_j] = sum_k c[i][j][k] e_k. Curvature comes from the orthonormal
// Koszul formula, so this path is independent of the synthetic assemblers
// and serves as the oracle for them.

namespace curvlab {

struct LieModel {
    int dim = 0;
    Tensor3 bracket;  // c[i][j][k]
    Matrix phi;       // phi(:,j) = phi e_j
    int xi_index = 0;
    std::string name;

    std::vector<double> eta() const {
        std::vector<double> e(dim, 0.0);
        e[xi_index] = 1.0;
        return e;
    }
};

inline double bracket_antisym_residual(const LieModel& m) {
    double worst = 0.0;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            for (int k = 0; k < m.dim; ++k)
                worst = std::max(worst, std::abs(m.bracket(i, j, k) + m.bracket(j, i, k)));
    return worst;
}

inline double jacobi_residual(const LieModel& m) {
    const auto& c = m.bracket;
    const int d = m.dim;
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    double acc = 0.0;
                    for (int p = 0; p < d; ++p)
                        acc += c(i, j, p) * c(p, k, l) + c(j, k, p) * c(p, i, l) +
                               c(k, i, p) * c(p, j, l);
                    worst = std::max(worst, std::abs(acc));
                }
    return worst;
}

// phi^2 = -I + eta (x) xi, phi xi = 0, eta o phi = 0, and metric
// compatibility phi^T phi = I - eta (x) eta.
inline double almost_contact_residual(const LieModel& m) {
    const int d = m.dim;
    const int x = m.xi_index;
    double worst = 0.0;
    const Matrix p2 = m.phi.multiply(m.phi);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double target = -(i == j ? 1.0 : 0.0) + (i == x && j == x ? 1.0 : 0.0);
            worst = std::max(worst, std::abs(p2(i, j) - target));
            double ptp = 0.0;
            for (int k = 0; k < d; ++k) ptp += m.phi(k, i) * m.phi(k, j);
            const double gtarget = (i == j ? 1.0 : 0.0) - (i == x && j == x ? 1.0 : 0.0);
            worst = std::max(worst, std::abs(ptp - gtarget));
        }
    for (int i = 0; i < d; ++i) {
        worst = std::max(worst, std::abs(m.phi(i, x)));  // phi xi = 0
        worst = std::max(worst, std::abs(m.phi(x, i)));  // eta o phi = 0
    }
    return worst;
}

inline void validate_model(const LieModel& m, double tol = 1e-9) {
    if (m.dim < 3 || m.dim % 2 == 0)
        throw std::invalid_argument("LieModel: dim must be odd and >= 3");
    if (m.xi_index < 0 || m.xi_index >= m.dim)
        throw std::invalid_argument("LieModel: xi_index out of range");
    if (m.bracket.dim() != m.dim || m.phi.dim() != m.dim)
        throw std::invalid_argument("LieModel: array dims inconsistent with dim");
    if (bracket_antisym_residual(m) > tol)
        throw std::invalid_argument("LieModel: bracket not antisymmetric");
    if (jacobi_residual(m) > tol)
        throw std::invalid_argument("LieModel: Jacobi identity violated");
    if (almost_contact_residual(m) > tol)
        throw std::invalid_argument("LieModel: almost contact axioms violated");
}

// 2 Gamma[i][j][k] = c[i][j][k] - c[j][k][i] + c[k][i][j]
inline Tensor3 koszul_connection(const LieModel& m) {
    const int d = m.dim;
    const auto& c = m.bracket;
    Tensor3 g(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                g(i, j, k) = 0.5 * (c(i, j, k) - c(j, k, i) + c(k, i, j));
    return g;
}

inline CurvatureTensor curvature_of(const LieModel& m) {
    const int d = m.dim;
    const Tensor3 g = koszul_connection(m);
    const auto& c = m.bracket;
    CurvatureTensor r(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    double acc = 0.0;
                    for (int p = 0; p < d; ++p)
                        acc += g(j, k, p) * g(i, p, l) - g(i, k, p) * g(j, p, l) -
                               c(i, j, p) * g(p, k, l);
                    r(i, j, k, l) = acc;
                }
    return r;
}

// h e_j = 1/2 ([xi, phi e_j] - phi [xi, e_j])
inline Matrix h_operator(const LieModel& m) {
    const int d = m.dim;
    const int x = m.xi_index;
    Matrix h(d);
    for (int j = 0; j < d; ++j) {
        std::vector<double> v(d, 0.0);
        for (int q = 0; q < d; ++q) {
            const double w = m.phi(q, j);
            if (w == 0.0) continue;
            for (int k = 0; k < d; ++k) v[k] += w * m.bracket(x, q, k);
        }
        std::vector<double> bj(d, 0.0);
        for (int k = 0; k < d; ++k) bj[k] = m.bracket(x, j, k);
        const std::vector<double> pb = m.phi.apply(bj);
        for (int k = 0; k < d; ++k) h(k, j) = 0.5 * (v[k] - pb[k]);
    }
    return h;
}

struct StructureClass {
    std::string label;  // contact-metric | almost-cosymplectic | cosymplectic | other
    bool normal = false;
    double deta_minus_omega = 0.0;
    double deta = 0.0;
    double domega = 0.0;
    double nijenhuis = 0.0;
};

// Left-invariant forms with the 1/2 convention:
//   deta(X,Y)   = -1/2 eta([X,Y])
//   domega(X,Y,Z) = -1/2 sum_cyc omega([X,Y],Z),  omega(X,Y) = g(phi X, Y)
// Normality via N1(X,Y) = [phi,phi](X,Y) + 2 deta(X,Y) xi.
inline StructureClass exterior_and_classify(const LieModel& m, double tol = 1e-9) {
    const int d = m.dim;
    const int x = m.xi_index;
    Matrix omega(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) omega(i, j) = m.phi(j, i);  // g(phi e_i, e_j)
    Matrix deta(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) deta(i, j) = -0.5 * m.bracket(i, j, x);

    StructureClass sc;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            sc.deta = std::max(sc.deta, std::abs(deta(i, j)));
            sc.deta_minus_omega = std::max(sc.deta_minus_omega, std::abs(deta(i, j) - omega(i, j)));
        }
    auto om = [&](const std::vector<double>& u, int k) {
        double acc = 0.0;
        for (int p = 0; p < d; ++p) acc += u[p] * omega(p, k);
        return acc;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                std::vector<double> bij(d), bjk(d), bki(d);
                for (int p = 0; p < d; ++p) {
                    bij[p] = m.bracket(i, j, p);
                    bjk[p] = m.bracket(j, k, p);
                    bki[p] = m.bracket(k, i, p);
                }
                const double v = -0.5 * (om(bij, k) + om(bjk, i) + om(bki, j));
                sc.domega = std::max(sc.domega, std::abs(v));
            }
    // [phi,phi](e_i,e_j) = phi^2[e_i,e_j] + [phi e_i, phi e_j]
    //                      - phi[phi e_i, e_j] - phi[e_i, phi e_j]
    const Matrix phi2 = m.phi.multiply(m.phi);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<double> n1(d, 0.0);
            std::vector<double> bij(d);
            for (int p = 0; p < d; ++p) bij[p] = m.bracket(i, j, p);
            const std::vector<double> t1 = phi2.apply(bij);
            for (int p = 0; p < d; ++p) n1[p] += t1[p];
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) {
                    const double w = m.phi(p, i) * m.phi(q, j);
                    if (w == 0.0) continue;
                    for (int k = 0; k < d; ++k) n1[k] += w * m.bracket(p, q, k);
                }
            std::vector<double> mixed(d, 0.0);
            for (int p = 0; p < d; ++p) {
                const double wi = m.phi(p, i);
                const double wj = m.phi(p, j);
                for (int k = 0; k < d; ++k) {
                    if (wi != 0.0) mixed[k] += wi * m.bracket(p, j, k);
                    if (wj != 0.0) mixed[k] += wj * m.bracket(i, p, k);
                }
            }
            const std::vector<double> pm = m.phi.apply(mixed);
            for (int k = 0; k < d; ++k) n1[k] -= pm[k];
            n1[x] += 2.0 * deta(i, j);
            for (int k = 0; k < d; ++k) sc.nijenhuis = std::max(sc.nijenhuis, std::abs(n1[k]));
        }

    sc.normal = sc.nijenhuis < tol;
    if (sc.deta_minus_omega < tol)
        sc.label = "contact-metric";
    else if (sc.deta < tol && sc.domega < tol)
        sc.label = sc.normal ? "cosymplectic" : "almost-cosymplectic";
    else
        sc.label = "other";
    return sc;
}

struct KappaMuFit {
    double kappa = 0.0;
    double mu = 0.0;
    bool mu_determined = false;
    double residual = 0.0;
    bool ok(double tol) const { return residual < tol; }
};

// Least-squares fit of the xi-components R[i][j][xi][l] against
//   kappa (d_il eta_j - eta_i d_jl) - mu (h_il eta_j - eta_i h_jl)
// over all index triples; mu is unidentifiable when h vanishes.
inline KappaMuFit detect_kappa_mu(const CurvatureTensor& t, const Matrix& h, int xi_index,
                                  double tol = 1e-9) {
    const int d = t.dim();
    const int x = xi_index;
    auto apat = [&](int i, int j, int l) {
        return (i == l ? 1.0 : 0.0) * (j == x ? 1.0 : 0.0) -
               (i == x ? 1.0 : 0.0) * (j == l ? 1.0 : 0.0);
    };
    auto bpat = [&](int i, int j, int l) {
        return h(i, l) * (j == x ? 1.0 : 0.0) - (i == x ? 1.0 : 0.0) * h(j, l);
    };
    double aa = 0.0, ab = 0.0, bb = 0.0, at = 0.0, bt = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                const double a = apat(i, j, l);
                const double b = bpat(i, j, l);
                const double v = t(i, j, x, l);
                aa += a * a;
                ab += a * b;
                bb += b * b;
                at += a * v;
                bt += b * v;
            }
    KappaMuFit fit;
    if (h.max_abs() < 1e-10) {
        fit.kappa = at / aa;
        fit.mu_determined = false;
    } else {
        // normal equations for T ~ kappa*A - mu*B
        const double det = aa * (-bb) - (-ab) * ab;
        fit.kappa = (at * (-bb) - (-ab) * bt) / det;
        fit.mu = (aa * bt - ab * at) / det;
        fit.mu_determined = true;
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                const double fitval = fit.kappa * apat(i, j, l) -
                                      (fit.mu_determined ? fit.mu * bpat(i, j, l) : 0.0);
                fit.residual = std::max(fit.residual, std::abs(t(i, j, x, l) - fitval));
            }
    (void)tol;
    return fit;
}

// Dacko's solvable model: brackets [xi, X_i] = -lambda X_i, [xi, Y_i] = lambda Y_i,
// basis (xi, X_1..X_n, Y_1..Y_n), phi X_i = Y_i, phi Y_i = -X_i.
inline LieModel g_lambda_model(int n, double lambda) {
    if (n < 1) throw std::invalid_argument("g_lambda_model: n must be >= 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("g_lambda_model: lambda must be > 0");
    const int d = 2 * n + 1;
    LieModel m;
    m.dim = d;
    m.bracket = Tensor3(d);
    m.phi = Matrix(d);
    m.xi_index = 0;
    for (int i = 1; i <= n; ++i) {
        m.bracket(0, i, i) = -lambda;
        m.bracket(i, 0, i) = lambda;
        m.bracket(0, n + i, n + i) = lambda;
        m.bracket(n + i, 0, n + i) = -lambda;
        m.phi(n + i, i) = 1.0;
        m.phi(i, n + i) = -1.0;
    }
    {
        std::ostringstream os;
        os << "g-lambda:" << n << ":" << lambda;
        m.name = os.str();
    }
    return m;
}

// Milnor frame for a 3-dim unimodular algebra, 0-based with xi = e0:
//   [e1,e2] = c1 e0, [e2,e0] = c2 e1, [e0,e1] = c3 e2;  phi e1 = e2.
// The structure is contact-metric exactly when c1 equals the calibrated
// value milnor_contact_c1 (fixed by solving deta = omega once; tested).
inline constexpr double milnor_contact_c1 = -2.0;

inline LieModel milnor_model(double c1, double c2, double c3) {
    LieModel m;
    m.dim = 3;
    m.bracket = Tensor3(3);
    m.phi = Matrix(3);
    m.xi_index = 0;
    m.bracket(1, 2, 0) = c1;
    m.bracket(2, 1, 0) = -c1;
    m.bracket(2, 0, 1) = c2;
    m.bracket(0, 2, 1) = -c2;
    m.bracket(0, 1, 2) = c3;
    m.bracket(1, 0, 2) = -c3;
    m.phi(2, 1) = 1.0;
    m.phi(1, 2) = -1.0;
    {
        std::ostringstream os;
        os << "milnor:" << c1 << ":" << c2 << ":" << c3;
        m.name = os.str();
    }
    return m;
}

// Abelian algebra with the standard phi; the trivial cosymplectic model.
inline LieModel abelian_model(int n) {
    if (n < 1) throw std::invalid_argument("abelian_model: n must be >= 1");
    const int d = 2 * n + 1;
    LieModel m;
    m.dim = d;
    m.bracket = Tensor3(d);
    m.phi = Matrix(d);
    m.xi_index = 0;
    for (int i = 1; i <= n; ++i) {
        m.phi(n + i, i) = 1.0;
        m.phi(i, n + i) = -1.0;
    }
    m.name = "abelian";
    return m;
}

// ---- model-definition file format -------------------------------------
// Keyword/value text; '#' starts a comment. Fields:
//   name <token>              optional
//   dim <int>
//   xi_index <int>
//   phi <d*d reals>           row-major
//   brackets <count> followed by count lines "i j k c" (0-based)
// Reals are written with 17 significant digits by dump_model.

inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string dump_model(const LieModel& m) {
    std::ostringstream os;
    if (!m.name.empty()) os << "name " << m.name << "\n";
    os << "dim " << m.dim << "\n";
    os << "xi_index " << m.xi_index << "\n";
    os << "phi";
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) os << " " << format_real(m.phi(i, j));
    os << "\n";
    std::vector<std::array<double, 4>> entries;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            for (int k = 0; k < m.dim; ++k)
                if (m.bracket(i, j, k) != 0.0)
                    entries.push_back({static_cast<double>(i), static_cast<double>(j),
                                       static_cast<double>(k), m.bracket(i, j, k)});
    os << "brackets " << entries.size() << "\n";
    for (const auto& e : entries)
        os << static_cast<int>(e[0]) << " " << static_cast<int>(e[1]) << " "
           << static_cast<int>(e[2]) << " " << format_real(e[3]) << "\n";
    return os.str();
}

inline LieModel parse_model(const std::string& text) {
    // strip comments, then tokenize
    std::string clean;
    clean.reserve(text.size());
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '#') in_comment = true;
        if (ch == '\n') in_comment = false;
        clean.push_back(in_comment ? ' ' : ch);
    }
    std::istringstream is(clean);
    LieModel m;
    bool have_dim = false, have_xi = false, have_phi = false, have_brackets = false;
    std::string key;
    while (is >> key) {
        if (key == "name") {
            if (!(is >> m.name)) throw std::invalid_argument("model file: missing name value");
        } else if (key == "dim") {
            if (!(is >> m.dim) || m.dim < 3)
                throw std::invalid_argument("model file: bad dim");
            have_dim = true;
        } else if (key == "xi_index") {
            if (!(is >> m.xi_index)) throw std::invalid_argument("model file: bad xi_index");
            have_xi = true;
        } else if (key == "phi") {
            if (!have_dim) throw std::invalid_argument("model file: phi before dim");
            m.phi = Matrix(m.dim);
            for (int i = 0; i < m.dim; ++i)
                for (int j = 0; j < m.dim; ++j) {
                    double v;
                    if (!(is >> v)) throw std::invalid_argument("model file: phi truncated");
                    m.phi(i, j) = v;
                }
            have_phi = true;
        } else if (key == "brackets") {
            if (!have_dim) throw std::invalid_argument("model file: brackets before dim");
            std::size_t count;
            if (!(is >> count)) throw std::invalid_argument("model file: bad bracket count");
            m.bracket = Tensor3(m.dim);
            for (std::size_t e = 0; e < count; ++e) {
                int i, j, k;
                double c;
                if (!(is >> i >> j >> k >> c))
                    throw std::invalid_argument("model file: bracket entry truncated");
                if (i < 0 || i >= m.dim || j < 0 || j >= m.dim || k < 0 || k >= m.dim)
                    throw std::invalid_argument("model file: bracket index out of range");
                m.bracket(i, j, k) = c;
            }
            have_brackets = true;
        } else {
            throw std::invalid_argument("model file: unknown field '" + key + "'");
        }
    }
    if (!have_dim || !have_xi || !have_phi || !have_brackets)
        throw std::invalid_argument("model file: missing required field");
    validate_model(m);
    return m;
}

}  // namespace curvlab
