#pragma once

#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "curvlab/report.hpp"

// Property suites driven by `verify`. Each named check aggregates a family
// of grid/random evaluations into one max residual (or a boolean flag).
// Names are stable and listed in check_manifest(); the coverage of the
// manifest by `verify --suite all` is itself tested.

namespace curvlab {

namespace suites {

inline std::vector<double> linspace(double a, double b, int count) {
    std::vector<double> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(count == 1 ? a : a + (b - a) * i / (count - 1));
    return out;
}

inline void sasakian_suite(CheckCollector& c, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    double id_worst = 0.0, anti_worst = 0.0, rearrange_worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const SasakianRicciProfile p = random_profile(n, rng);
            id_worst = std::max(id_worst, weyl_xi_identity_residual(p));
            const Tensor3 w = weyl_xi_components(p);
            for (int i = 0; i < p.dim(); ++i)
                for (int j = 0; j < p.dim(); ++j)
                    for (int l = 0; l < p.dim(); ++l)
                        anti_worst = std::max(anti_worst, std::abs(w(i, j, l) + w(j, i, l)));
            if (n == 1) {
                // with no Weyl part, the trace identity rearranges to the
                // dim-3 relation between s and |Ric0|^2
                const double s = p.ricci.trace();
                const double r0 = p.ricci.frobenius_sq() - s * s / 3.0;
                const double lhs = 2.0 * s * s / 6.0 + 4.0 * r0 - 12.0;
                const double rhs = 4.0 * r0 - (12.0 - s * s / 3.0);
                rearrange_worst = std::max(rearrange_worst, std::abs(lhs - rhs));
            }
        }
    }
    c.add("sasakian/weyl-xi-identity", id_worst);
    c.add("sasakian/weyl-xi-antisymmetry", anti_worst);
    c.add("sasakian/dim3-rearrangement", rearrange_worst);

    double einstein_worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const SasakianRicciProfile p = einstein_profile(n);
        const Tensor3 w = weyl_xi_components(p);
        double m = 0.0;
        for (int i = 0; i < p.dim(); ++i)
            for (int j = 0; j < p.dim(); ++j)
                for (int l = 0; l < p.dim(); ++l) m = std::max(m, std::abs(w(i, j, l)));
        einstein_worst = std::max({einstein_worst, m, weyl_xi_identity_residual(p)});
    }
    c.add("sasakian/einstein-profile-weyl-xi-zero", einstein_worst);

    // bound arithmetic at hand-checked values
    double barith = 0.0;
    {
        const ScalarBounds b1 = scalar_bounds(1);
        barith = std::max(barith, std::abs(b1.lower + 6.0) + std::abs(b1.upper - 6.0));
        const ScalarBounds b2 = scalar_bounds(2);
        barith = std::max(barith, std::abs(b2.lower + 220.0 / 7.0) + std::abs(b2.upper - 20.0));
        const ScalarBounds b3 = scalar_bounds(3);
        barith = std::max(barith,
                          std::abs(b3.lower + 42.0 * 27.0 / 23.0) + std::abs(b3.upper - 42.0));
    }
    c.add("sasakian/scalar-bounds-arithmetic", barith);
    bool mono = true;
    for (int n = 1; n <= 6; ++n) {
        const ScalarBounds b = scalar_bounds(n);
        mono = mono && b.lower < 0.0 && 0.0 < b.upper;
    }
    c.add_flag("sasakian/scalar-bounds-signs", mono);

    double witness = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const CurvatureTensor t = sphere_sasakian_tensor(n);
        const CurvatureInvariants inv = invariants_of(t);
        const ScalarBounds b = scalar_bounds(n);
        witness = std::max({witness, std::abs(inv.record.scalar - b.upper),
                            inv.record.weyl_normsq, weakly_einstein_residual(t).full,
                            trace_identity_residual(t), sasakian_xi_pattern_residual(t)});
    }
    c.add("sasakian/sphere-witness", witness, 100.0);
}

struct GridResult {
    double symmetry = 0.0;
    double breve_rel = 0.0;
    double normsq_rel = 0.0;
    double blocks = 0.0;
    double partition_rel = 0.0;
    double decomposition_rel = 0.0;
    bool equivalence = true;  // xi-xi residual vanishes iff the polynomial does
};

inline GridResult km_grid(Family family, double zero_tol) {
    GridResult g;
    for (int n = 1; n <= 3; ++n) {
        const std::vector<double> kappas = family == Family::contact
                                               ? linspace(-2.0, 0.9, 11)
                                               : linspace(-3.0, -0.1, 11);
        for (const double kappa : kappas)
            for (int mi = -3; mi <= 3; ++mi) {
                KappaMuParams p;
                p.family = family;
                p.n = n;
                p.kappa = kappa;
                p.mu = mi;
                const CurvatureTensor t = assemble_km(p);
                g.symmetry = std::max(g.symmetry, validate_symmetries(t).worst());
                const CurvatureInvariants inv = invariants_of(t);
                const ClosedFormInvariants cf = closed_form_invariants(p);
                const double scale = std::max(1.0, std::abs(cf.riemann_normsq));
                g.breve_rel = std::max(g.breve_rel,
                                       std::abs(inv.record.breve_xixi - cf.breve_xixi) /
                                           std::max(1.0, std::abs(cf.breve_xixi)));
                g.normsq_rel = std::max(
                    g.normsq_rel, std::abs(inv.record.riemann_normsq - cf.riemann_normsq) / scale);
                const auto blocks = block_squares_of(t, n);
                for (int b = 0; b < 6; ++b)
                    g.blocks = std::max(g.blocks,
                                        std::abs(blocks[b] - cf.block_squares[b]) / scale);
                const LemmaResiduals lr = lemma_decomposition_residual(t, n);
                g.partition_rel = std::max(g.partition_rel, lr.curvature_partition / scale);
                g.decomposition_rel =
                    std::max(g.decomposition_rel, norm_decomposition_residual(t) / scale);
                const double xixi = weakly_einstein_residual(t).xixi;
                const double primary = weakly_einstein_polynomials(p).primary;
                const bool xz = xixi < zero_tol * scale;
                const bool pz = std::abs(primary) < zero_tol * scale;
                g.equivalence = g.equivalence && (xz == pz);
            }
    }
    return g;
}

inline void contact_suite(CheckCollector& c) {
    const GridResult g = km_grid(Family::contact, 1e-8);
    c.add("contact/grid-symmetries", g.symmetry, 10.0);
    c.add("contact/grid-breve-closed-form", g.breve_rel);
    c.add("contact/grid-normsq-closed-form", g.normsq_rel);
    c.add("contact/grid-block-squares", g.blocks);
    c.add("contact/grid-norm-partition", g.partition_rel);
    c.add("contact/grid-norm-decomposition", g.decomposition_rel);
    c.add_flag("contact/xixi-polynomial-equivalence", g.equivalence);

    // n=1: the xi-xi residual vanishes exactly on {kappa=0} u {mu=0} u {mu=-2}
    bool zero_set_ok = true;
    for (const double kappa : linspace(-2.0, 0.96, 38))  // includes 0 (index 25)
        for (const double mu : linspace(-3.0, 3.0, 25)) {  // includes -2, 0
            KappaMuParams p{Family::contact, 1, kappa, mu};
            const CurvatureTensor t = assemble_km(p);
            const double scale = std::max(1.0, t.norm_sq());
            const bool zero = weakly_einstein_residual(t).xixi < 1e-8 * scale;
            const bool expected =
                std::abs(kappa) < 1e-12 || std::abs(mu) < 1e-12 || std::abs(mu + 2.0) < 1e-12;
            zero_set_ok = zero_set_ok && (zero == expected);
        }
    c.add_flag("contact/n1-zero-set", zero_set_ok);

    // n=1 factored form matches the polynomial exactly
    double fact_worst = 0.0;
    for (const double kappa : linspace(-2.0, 0.9, 11))
        for (int mi = -3; mi <= 3; ++mi) {
            KappaMuParams p{Family::contact, 1, kappa, static_cast<double>(mi)};
            const WeaklyEinsteinPolynomials poly = weakly_einstein_polynomials(p);
            fact_worst = std::max(fact_worst, std::abs(poly.primary - poly.factored_n1));
        }
    c.add("contact/n1-factored-form", fact_worst, 100.0);

    // n >= 2, 0 < kappa < 1: the kappa-form equation has no zero; its
    // absolute value is bounded below by the positive quadratic minimum
    bool empty_ok = true;
    for (int n = 2; n <= 4; ++n) {
        double min_abs = 1e300, min_quad = 1e300;
        for (const double kappa : linspace(0.005, 0.995, 200))
            for (const double mu : linspace(-3.0, 3.0, 200)) {
                KappaMuParams p{Family::contact, n, kappa, mu};
                min_abs = std::min(min_abs, std::abs(weakly_einstein_polynomials(p).eq18_diff));
                min_quad = std::min(min_quad, (3.0 * n - 2.0) * mu * mu -
                                                  2.0 * (3.0 * n - 4.0) * mu + 4.0 * (n - 1.0));
            }
        empty_ok = empty_ok && min_quad > 0.0 && min_abs >= min_quad - 1e-9;
    }
    c.add_flag("contact/positive-kappa-emptiness", empty_ok);

    // threshold roots of the mu-quadratic
    double root_worst = 0.0;
    for (int n = 2; n <= 4; ++n) {
        const MuBounds b = mu_admissible_bounds(n);
        for (const double mu : {b.lower, b.upper})
            root_worst = std::max(root_worst,
                                  std::abs(-mu * mu * (2.0 * n - 1.0) + 2.0 * mu * (n - 2.0) +
                                           4.0 * (n - 1.0)));
        if (n == 2)
            root_worst = std::max(root_worst, std::abs(b.upper - 2.0 * std::sqrt(3.0) / 3.0) +
                                                  std::abs(b.lower + 2.0 * std::sqrt(3.0) / 3.0));
    }
    c.add("contact/mu-threshold-roots", root_worst);

    // kappa < 0: strictly between the thresholds the polynomial cannot vanish
    bool exclusion_ok = true;
    for (int n = 2; n <= 4; ++n) {
        const MuBounds b = mu_admissible_bounds(n);
        const double margin = 1e-3 * (b.upper - b.lower);
        for (const double kappa : linspace(-10.0, -0.01, 60))
            for (const double mu : linspace(b.lower + margin, b.upper - margin, 60)) {
                KappaMuParams p{Family::contact, n, kappa, mu};
                exclusion_ok = exclusion_ok && weakly_einstein_polynomials(p).eq18_diff < 0.0;
            }
    }
    c.add_flag("contact/negative-kappa-mu-exclusion", exclusion_ok);

    // below the lower threshold mu is negative, so the Boeckx invariant
    // exceeds -1 on the whole kappa < 0 range
    bool boeckx_ok = true;
    for (int n = 2; n <= 4; ++n) {
        const MuBounds b = mu_admissible_bounds(n);
        boeckx_ok = boeckx_ok && b.lower < 0.0;
        for (const double kappa : linspace(-10.0, -0.01, 60))
            for (const double mu : {b.lower - 1e-6, b.lower - 0.5, b.lower - 2.0})
                boeckx_ok = boeckx_ok && boeckx_invariant(kappa, mu) > -1.0;
    }
    c.add_flag("contact/boeckx-below-lower-threshold", boeckx_ok);
    c.add("contact/boeckx-values", std::abs(boeckx_invariant(0.0, 0.0) - 1.0) +
                                       std::abs(boeckx_invariant(0.0, -2.0) - 2.0));
}

inline void cosym_suite(CheckCollector& c) {
    const GridResult g = km_grid(Family::almost_cosymplectic, 1e-8);
    c.add("cosym/grid-symmetries", g.symmetry, 10.0);
    c.add("cosym/grid-breve-closed-form", g.breve_rel);
    c.add("cosym/grid-normsq-closed-form", g.normsq_rel);
    c.add("cosym/grid-block-squares", g.blocks);
    c.add("cosym/grid-norm-partition", g.partition_rel);
    c.add("cosym/grid-norm-decomposition", g.decomposition_rel);
    c.add_flag("cosym/xixi-polynomial-equivalence", g.equivalence);

    // the xi-xi residual factors exactly as mu^2 times a nonzero function
    // of (n, kappa), so it vanishes only at mu = 0
    bool mu_zero_ok = true;
    double factor_worst = 0.0;
    for (int n = 1; n <= 3; ++n)
        for (const double kappa : linspace(-4.0, -0.1, 20))
            for (int mi = -3; mi <= 3; ++mi) {
                KappaMuParams p{Family::almost_cosymplectic, n, kappa, static_cast<double>(mi)};
                const double primary = weakly_einstein_polynomials(p).primary;
                const double factored =
                    mi * mi * (-4.0 * n * kappa * (2.0 * n - 1.0) / (2.0 * n + 1.0));
                factor_worst = std::max(factor_worst, std::abs(primary - factored));
                mu_zero_ok = mu_zero_ok && ((std::abs(primary) < 1e-9) == (mi == 0));
            }
    c.add_flag("cosym/mu-zero-conclusion", mu_zero_ok);
    c.add("cosym/xixi-factorization", factor_worst, 100.0);

    // assembled xi-xi residual equals the closed form
    double resid_worst = 0.0;
    for (int n = 1; n <= 3; ++n)
        for (const double kappa : {-2.0, -1.0, -0.5})
            for (int mi = -2; mi <= 2; ++mi) {
                KappaMuParams p{Family::almost_cosymplectic, n, kappa, static_cast<double>(mi)};
                const CurvatureTensor t = assemble_km(p);
                const double xixi = weakly_einstein_residual(t).xixi;
                const double primary = std::abs(weakly_einstein_polynomials(p).primary);
                resid_worst =
                    std::max(resid_worst, std::abs(xixi - primary) / std::max(1.0, primary));
            }
    c.add("cosym/xixi-closed-form", resid_worst);
}

inline Matrix g_lambda_adapted_basis(const LieModel& m, int n) {
    // columns: xi, (X_i + Y_i)/sqrt(2), phi of that
    const int d = 2 * n + 1;
    Matrix basis(d);
    basis(0, 0) = 1.0;
    const double r = 1.0 / std::sqrt(2.0);
    for (int i = 1; i <= n; ++i) {
        basis(i, i) = r;
        basis(n + i, i) = r;
        for (int k = 0; k < d; ++k) {
            double acc = 0.0;
            for (int p = 0; p < d; ++p) acc += m.phi(k, p) * basis(p, i);
            basis(k, n + i) = acc;
        }
    }
    return basis;
}

inline void lie_suite(CheckCollector& c) {
    // solvable-model round trip and cross-validation with the assembler
    double fit_worst = 0.0, value_worst = 0.0, agree_worst = 0.0, we_worst = 0.0;
    bool class_ok = true;
    for (int n = 1; n <= 3; ++n)
        for (const double lam : {0.5, 1.0, 2.0}) {
            const LieModel m = g_lambda_model(n, lam);
            const CurvatureTensor t = curvature_of(m);
            const Matrix h = h_operator(m);
            const KappaMuFit fit = detect_kappa_mu(t, h, 0);
            fit_worst = std::max(fit_worst, fit.residual);
            value_worst = std::max({value_worst, std::abs(fit.kappa + lam * lam),
                                    fit.mu_determined ? std::abs(fit.mu) : 1.0});
            KappaMuParams p{Family::almost_cosymplectic, n, -lam * lam, 0.0};
            const CurvatureTensor assembled = assemble_cosymplectic_km(p);
            const CurvatureTensor rotated = t.rotate(g_lambda_adapted_basis(m, n));
            double diff = 0.0;
            const int d = 2 * n + 1;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k)
                        for (int l = 0; l < d; ++l)
                            diff = std::max(diff,
                                            std::abs(assembled(i, j, k, l) - rotated(i, j, k, l)));
            agree_worst = std::max(agree_worst, diff);
            class_ok = class_ok && exterior_and_classify(m).label == "almost-cosymplectic";
            we_worst = std::max(we_worst, weakly_einstein_residual(t).full /
                                              std::max(1.0, t.norm_sq()));
        }
    c.add("lie/g-lambda-round-trip", fit_worst, 20.0);
    c.add("lie/g-lambda-detected-values", value_worst, 20.0);
    c.add("lie/g-lambda-assembler-agreement", agree_worst, 20.0);
    c.add_flag("lie/g-lambda-classification", class_ok);
    c.add("lie/g-lambda-weakly-einstein", we_worst);

    // extended round-trip at n = 4
    {
        const LieModel m = g_lambda_model(4, 1.0);
        const KappaMuFit fit = detect_kappa_mu(curvature_of(m), h_operator(m), 0);
        c.add("lie/g-lambda-round-trip-n4",
              std::max(fit.residual, std::abs(fit.kappa + 1.0)));
    }

    // 3-dim catalog: contact calibration and the flat point
    {
        const LieModel flat = milnor_model(milnor_contact_c1, -2.0, 0.0);
        const StructureClass sc = exterior_and_classify(flat);
        const CurvatureTensor t = curvature_of(flat);
        const Matrix h = h_operator(flat);
        const KappaMuFit fit = detect_kappa_mu(t, h, 0);
        c.add_flag("lie/milnor-contact-calibration", sc.label == "contact-metric");
        c.add("lie/milnor-calibration-residual", sc.deta_minus_omega);
        c.add("lie/milnor-flat-point",
              std::max({t.max_abs(), std::abs(fit.kappa), std::abs(fit.mu)}));
        const auto ev = h.symmetric_eigenvalues();
        c.add("lie/milnor-flat-h-eigenvalues",
              std::abs(ev[0] + 1.0) + std::abs(ev[1]) + std::abs(ev[2] - 1.0));
        c.add_flag("lie/milnor-flat-label",
                   fit.ok(1e-9) && classify_3dim(fit.kappa, fit.mu) == "E(2)-type-flat");
    }
    {
        // degenerate-h point: normal contact structure
        const LieModel m = milnor_model(milnor_contact_c1, 0.0, 0.0);
        const StructureClass sc = exterior_and_classify(m);
        const CurvatureTensor t = curvature_of(m);
        const Matrix h = h_operator(m);
        const KappaMuFit fit = detect_kappa_mu(t, h, 0);
        c.add_flag("lie/milnor-sasakian-point",
                   sc.label == "contact-metric" && sc.normal && !fit.mu_determined &&
                       std::abs(fit.kappa - 1.0) < 1e-9 && fit.residual < 1e-9);
    }

    // branch labels across the probe set; expectations fixed from the
    // structure-constant sign classes of the underlying groups
    struct Probe {
        double c2, c3;
        const char* label;
    };
    const Probe probes[] = {
        {-1.0, -3.0, "SU(2)-type"}, {1.0, 3.0, "SL(2,R)-type"}, {0.0, 2.0, "E(1,1)-type"},
        {0.0, 4.0, "E(1,1)-type"},  {-4.0, 0.0, "E(2)-type"},   {-3.0, 1.0, "SL(2,R)-type"},
        {-1.0, 1.0, "SL(2,R)-type"}, {0.5, 2.5, "SL(2,R)-type"}};
    bool labels_ok = true;
    double heig_worst = 0.0;
    for (const Probe& pr : probes) {
        const LieModel m = milnor_model(milnor_contact_c1, pr.c2, pr.c3);
        const CurvatureTensor t = curvature_of(m);
        const Matrix h = h_operator(m);
        const KappaMuFit fit = detect_kappa_mu(t, h, 0);
        labels_ok = labels_ok && fit.ok(1e-9) && fit.mu_determined &&
                    classify_3dim(fit.kappa, fit.mu) == pr.label &&
                    exterior_and_classify(m).label == "contact-metric";
        // h eigenvalue vs sqrt(1 - kappa)
        const double lam_h = std::abs(pr.c3 - pr.c2) / 2.0;
        heig_worst = std::max(heig_worst, std::abs(lam_h * lam_h - (1.0 - fit.kappa)));
    }
    c.add_flag("lie/milnor-branch-labels", labels_ok);
    c.add("lie/milnor-h-eigenvalue-relation", heig_worst, 10.0);

    // h-operator algebra and connection/curvature backbone on the catalog
    double h_worst = 0.0, gamma_worst = 0.0, decomp_worst = 0.0, partition_worst = 0.0;
    std::vector<LieModel> catalog;
    catalog.push_back(g_lambda_model(1, 1.0));
    catalog.push_back(g_lambda_model(2, 0.5));
    catalog.push_back(milnor_model(-2.0, -1.0, -3.0));
    catalog.push_back(milnor_model(-2.0, 0.0, 2.0));
    catalog.push_back(milnor_model(-2.0, 0.0, 0.0));
    catalog.push_back(abelian_model(2));
    for (const LieModel& m : catalog) {
        const Matrix h = h_operator(m);
        const Matrix ph = m.phi.multiply(h);
        const Matrix hp = h.multiply(m.phi);
        h_worst = std::max(h_worst, std::abs(h.trace()));
        for (int i = 0; i < m.dim; ++i) {
            h_worst = std::max(h_worst, std::abs(h(i, m.xi_index)));
            for (int j = 0; j < m.dim; ++j)
                h_worst = std::max({h_worst, std::abs(h(i, j) - h(j, i)),
                                    std::abs(ph(i, j) + hp(i, j))});
        }
        const Tensor3 gamma = koszul_connection(m);
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j)
                for (int k = 0; k < m.dim; ++k)
                    gamma_worst = std::max(gamma_worst, std::abs(gamma(i, j, k) + gamma(i, k, j)));
        const CurvatureTensor t = curvature_of(m);
        const double scale = std::max(1.0, t.norm_sq());
        decomp_worst = std::max(decomp_worst, norm_decomposition_residual(t) / scale);
        const LemmaResiduals lr = lemma_decomposition_residual(t, (m.dim - 1) / 2);
        partition_worst = std::max(partition_worst,
                                   std::max(lr.curvature_partition, lr.weyl_partition) / scale);
    }
    c.add("lie/h-operator-algebra", h_worst);
    c.add("lie/koszul-metric-compatibility", gamma_worst);
    c.add("lie/norm-decomposition", decomp_worst);
    c.add("lie/norm-partition", partition_worst);

    {
        const LieModel ab = abelian_model(1);
        const StructureClass sc = exterior_and_classify(ab);
        c.add_flag("lie/abelian-cosymplectic",
                   sc.label == "cosymplectic" && sc.normal &&
                       curvature_of(ab).max_abs() < 1e-12);
    }
}

}  // namespace suites

inline const std::vector<std::string>& check_manifest() {
    static const std::vector<std::string> names = {
        "sasakian/weyl-xi-identity",
        "sasakian/weyl-xi-antisymmetry",
        "sasakian/dim3-rearrangement",
        "sasakian/einstein-profile-weyl-xi-zero",
        "sasakian/scalar-bounds-arithmetic",
        "sasakian/scalar-bounds-signs",
        "sasakian/sphere-witness",
        "contact/grid-symmetries",
        "contact/grid-breve-closed-form",
        "contact/grid-normsq-closed-form",
        "contact/grid-block-squares",
        "contact/grid-norm-partition",
        "contact/grid-norm-decomposition",
        "contact/xixi-polynomial-equivalence",
        "contact/n1-zero-set",
        "contact/n1-factored-form",
        "contact/positive-kappa-emptiness",
        "contact/mu-threshold-roots",
        "contact/negative-kappa-mu-exclusion",
        "contact/boeckx-below-lower-threshold",
        "contact/boeckx-values",
        "cosym/grid-symmetries",
        "cosym/grid-breve-closed-form",
        "cosym/grid-normsq-closed-form",
        "cosym/grid-block-squares",
        "cosym/grid-norm-partition",
        "cosym/grid-norm-decomposition",
        "cosym/xixi-polynomial-equivalence",
        "cosym/mu-zero-conclusion",
        "cosym/xixi-factorization",
        "cosym/xixi-closed-form",
        "lie/g-lambda-round-trip",
        "lie/g-lambda-detected-values",
        "lie/g-lambda-assembler-agreement",
        "lie/g-lambda-classification",
        "lie/g-lambda-weakly-einstein",
        "lie/g-lambda-round-trip-n4",
        "lie/milnor-contact-calibration",
        "lie/milnor-calibration-residual",
        "lie/milnor-flat-point",
        "lie/milnor-flat-h-eigenvalues",
        "lie/milnor-flat-label",
        "lie/milnor-sasakian-point",
        "lie/milnor-branch-labels",
        "lie/milnor-h-eigenvalue-relation",
        "lie/h-operator-algebra",
        "lie/koszul-metric-compatibility",
        "lie/norm-decomposition",
        "lie/norm-partition",
        "lie/abelian-cosymplectic",
    };
    return names;
}

inline json run_verify(const std::string& suite, double tol, unsigned long long seed,
                       bool& all_pass) {
    CheckCollector c(tol);
    if (suite == "sasakian" || suite == "all") suites::sasakian_suite(c, seed);
    if (suite == "contact-km" || suite == "all") suites::contact_suite(c);
    if (suite == "cosym-km" || suite == "all") suites::cosym_suite(c);
    if (suite == "lie-oracle" || suite == "all") suites::lie_suite(c);
    if (suite != "sasakian" && suite != "contact-km" && suite != "cosym-km" &&
        suite != "lie-oracle" && suite != "all")
        throw std::invalid_argument("unknown suite: " + suite);

    json summary = json::object();
    summary["suite"] = suite;
    summary["tolerance"] = tol;
    summary["seed"] = seed;
    summary["checks"] = json::object();
    for (auto& [name, val] : c.pass.items()) {
        json entry = {{"pass", val.get<bool>()}};
        if (c.residuals.contains(name)) entry["max_residual"] = c.residuals[name];
        summary["checks"][name] = entry;
    }
    if (suite == "all") {
        bool covered = true;
        for (const std::string& name : check_manifest())
            covered = covered && summary["checks"].contains(name);
        summary["manifest_covered"] = covered;
        c.all_pass = c.all_pass && covered;
    }
    summary["all_pass"] = c.all_pass;
    all_pass = c.all_pass;
    return summary;
}

// ---- parameter sweep --------------------------------------------------

inline json run_sweep(Family family, int n, double k0, double k1, double m0, double m1,
                      int steps) {
    if (n < 1) throw std::invalid_argument("sweep: n must be >= 1");
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (!(k0 < k1) || !(m0 <= m1)) throw std::invalid_argument("sweep: empty range");
    if (family == Family::contact && !(k1 < 1.0))
        throw std::invalid_argument("sweep: contact family requires kappa < 1");
    if (family == Family::almost_cosymplectic && !(k1 < 0.0))
        throw std::invalid_argument("sweep: almost-cosymplectic family requires kappa < 0");

    json out = json::object();
    out["family"] = family == Family::contact ? "contact" : "almost-cosymplectic";
    out["n"] = n;
    out["grid"] = {{"kappa", {k0, k1}}, {"mu", {m0, m1}}, {"steps", steps}};
    if (family == Family::contact && n >= 2) {
        const MuBounds b = mu_admissible_bounds(n);
        out["mu_thresholds"] = {{"lower", b.lower}, {"upper", b.upper}};
    }
    json points = json::array();
    const bool assemble = steps <= 120;  // keep large sweeps polynomial-only
    for (const double kappa : suites::linspace(k0, k1, steps))
        for (const double mu : suites::linspace(m0, m1, steps)) {
            KappaMuParams p{family, n, kappa, mu};
            const WeaklyEinsteinPolynomials poly = weakly_einstein_polynomials(p);
            json pt = {{"kappa", kappa}, {"mu", mu}, {"primary", poly.primary}};
            if (family == Family::contact) pt["eq_kappa_form"] = poly.eq18_diff;
            pt["primary_zero"] = std::abs(poly.primary) < 1e-9;
            if (assemble) {
                const CurvatureTensor t = assemble_km(p);
                const WeaklyEinsteinResidual we = weakly_einstein_residual(t);
                pt["we_full"] = we.full;
                pt["we_xixi"] = we.xixi;
            }
            points.push_back(pt);
        }
    out["points"] = points;
    return out;
}

}  // namespace curvlab
