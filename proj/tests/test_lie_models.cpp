#include <doctest.h>

#include "curvlab/kappa_mu.hpp"
#include "curvlab/lie_model.hpp"

using namespace curvlab;

TEST_CASE("abelian algebra: flat, zero connection, cosymplectic") {
    const LieModel m = abelian_model(1);
    CHECK(koszul_connection(m).max_abs() == 0.0);
    CHECK(curvature_of(m).max_abs() == 0.0);
    CHECK(h_operator(m).max_abs() == 0.0);
    const StructureClass sc = exterior_and_classify(m);
    CHECK(sc.label == "cosymplectic");
    CHECK(sc.normal);
}

TEST_CASE("solvable model connection components") {
    // grad_{X_1} X_1 = -lambda xi for the bracket [xi, X_1] = -X_1
    const LieModel m = g_lambda_model(1, 1.0);
    const Tensor3 g = koszul_connection(m);
    CHECK(g(1, 1, 0) == doctest::Approx(-1.0));
    CHECK(g(2, 2, 0) == doctest::Approx(1.0));
    // metric compatibility
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(g(i, j, k) == doctest::Approx(-g(i, k, j)));
}

TEST_CASE("solvable model structure checks") {
    const LieModel m = g_lambda_model(1, 1.0);
    CHECK(jacobi_residual(m) == 0.0);
    CHECK(almost_contact_residual(m) == 0.0);
    int nonzero = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (m.bracket(i, j, k) != 0.0) ++nonzero;
    CHECK(nonzero == 4);
    CHECK(jacobi_residual(g_lambda_model(2, 0.5)) == 0.0);
}

TEST_CASE("solvable model curvature and parameter detection") {
    const LieModel m = g_lambda_model(1, 1.0);
    const CurvatureTensor t = curvature_of(m);
    CHECK(validate_symmetries(t).valid(1e-12));
    CHECK(t(1, 0, 0, 1) == doctest::Approx(-1.0));
    const Matrix h = h_operator(m);
    // h swaps the two legs with weight lambda; eigenvalues +-lambda
    const auto ev = h.symmetric_eigenvalues();
    CHECK(ev[0] == doctest::Approx(-1.0));
    CHECK(ev[1] == doctest::Approx(0.0));
    CHECK(ev[2] == doctest::Approx(1.0));
    const KappaMuFit fit = detect_kappa_mu(t, h, 0);
    CHECK(fit.kappa == doctest::Approx(-1.0));
    CHECK(fit.mu_determined);
    CHECK(fit.mu == doctest::Approx(0.0));
    CHECK(fit.residual < 1e-12);
}

TEST_CASE("detection at n=2, lambda=1.5") {
    const LieModel m = g_lambda_model(2, 1.5);
    const KappaMuFit fit = detect_kappa_mu(curvature_of(m), h_operator(m), 0);
    CHECK(fit.kappa == doctest::Approx(-2.25));
    CHECK(fit.mu == doctest::Approx(0.0));
    CHECK(fit.residual < 1e-10);
}

TEST_CASE("solvable model is almost cosymplectic but not normal") {
    const StructureClass sc = exterior_and_classify(g_lambda_model(2, 1.0));
    CHECK(sc.label == "almost-cosymplectic");
    CHECK(sc.deta < 1e-12);
    CHECK(sc.domega < 1e-12);
    CHECK_FALSE(sc.normal);
}

TEST_CASE("constant curvature with h=0 detects kappa=1, mu undetermined") {
    const CurvatureTensor t = constant_curvature(5, 1.0);
    const Matrix h(5);
    const KappaMuFit fit = detect_kappa_mu(t, h, 0);
    CHECK(fit.kappa == doctest::Approx(1.0));
    CHECK_FALSE(fit.mu_determined);
    CHECK(fit.residual < 1e-12);
}

TEST_CASE("detection reports inconsistency as a residual") {
    CurvatureTensor t = constant_curvature(5, 1.0);
    t(1, 0, 0, 2) += 0.5;  // break the nullity pattern
    const Matrix h(5);
    const KappaMuFit fit = detect_kappa_mu(t, h, 0);
    CHECK(fit.residual > 0.1);
    CHECK_FALSE(fit.ok(1e-9));
}

TEST_CASE("three-dim frame model: bracket layout and single-bracket connection") {
    const LieModel m = milnor_model(1.5, 0.0, 0.0);
    CHECK(m.bracket(1, 2, 0) == doctest::Approx(1.5));
    CHECK(m.bracket(2, 1, 0) == doctest::Approx(-1.5));
    const Tensor3 g = koszul_connection(m);
    CHECK(g(1, 2, 0) == doctest::Approx(0.75));
}

TEST_CASE("three-dim frame model: h eigenvalues from the two free constants") {
    const LieModel m = milnor_model(-2.0, 1.0, 3.0);
    const Matrix h = h_operator(m);
    CHECK(h(1, 1) == doctest::Approx((3.0 - 1.0) / 2.0));
    CHECK(h(2, 2) == doctest::Approx((1.0 - 3.0) / 2.0));
    CHECK(h(0, 0) == 0.0);
    CHECK(h.trace() == doctest::Approx(0.0));
    // equal constants annihilate h
    CHECK(h_operator(milnor_model(-2.0, 2.0, 2.0)).max_abs() < 1e-12);
}

TEST_CASE("contact calibration of the three-dim catalog") {
    const StructureClass sc = exterior_and_classify(milnor_model(milnor_contact_c1, 1.0, 3.0));
    CHECK(sc.label == "contact-metric");
    CHECK(sc.deta_minus_omega < 1e-12);
    // any other first constant breaks the contact condition
    const StructureClass bad = exterior_and_classify(milnor_model(-1.0, 1.0, 3.0));
    CHECK(bad.label != "contact-metric");
}

TEST_CASE("flat point of the three-dim catalog") {
    const LieModel m = milnor_model(-2.0, -2.0, 0.0);
    const CurvatureTensor t = curvature_of(m);
    CHECK(t.max_abs() < 1e-12);
    const KappaMuFit fit = detect_kappa_mu(t, h_operator(m), 0);
    CHECK(fit.kappa == doctest::Approx(0.0));
    CHECK(fit.mu == doctest::Approx(0.0));
    CHECK(classify_3dim(fit.kappa, fit.mu) == "E(2)-type-flat");
}

TEST_CASE("degenerate-h point is normal with unit nullity constant") {
    const LieModel m = milnor_model(-2.0, 0.0, 0.0);
    CHECK(h_operator(m).max_abs() < 1e-12);
    const KappaMuFit fit = detect_kappa_mu(curvature_of(m), h_operator(m), 0);
    CHECK(fit.kappa == doctest::Approx(1.0));
    CHECK_FALSE(fit.mu_determined);
    const StructureClass sc = exterior_and_classify(m);
    CHECK(sc.label == "contact-metric");
    CHECK(sc.normal);
}

TEST_CASE("catalog probes recover the expected group branch labels") {
    struct Probe {
        double c2, c3, kappa, mu;
        const char* label;
    };
    // expectations fixed from the structure-constant sign classes
    const Probe probes[] = {
        {-1.0, -3.0, 0.0, -2.0, "SU(2)-type"},
        {1.0, 3.0, 0.0, 6.0, "SL(2,R)-type"},
        {0.0, 2.0, 0.0, 4.0, "E(1,1)-type"},
        {0.0, 4.0, -3.0, 6.0, "E(1,1)-type"},
        {-4.0, 0.0, -3.0, -2.0, "E(2)-type"},
        {-3.0, 1.0, -3.0, 0.0, "SL(2,R)-type"},
    };
    for (const Probe& p : probes) {
        const LieModel m = milnor_model(milnor_contact_c1, p.c2, p.c3);
        const KappaMuFit fit = detect_kappa_mu(curvature_of(m), h_operator(m), 0);
        CHECK(fit.residual < 1e-10);
        CHECK(fit.kappa == doctest::Approx(p.kappa));
        CHECK(fit.mu == doctest::Approx(p.mu));
        CHECK(classify_3dim(fit.kappa, fit.mu) == p.label);
    }
}

TEST_CASE("model file round trip is bit exact") {
    const LieModel m = g_lambda_model(2, 0.7);
    const std::string text = dump_model(m);
    const LieModel back = parse_model(text);
    CHECK(back.dim == m.dim);
    CHECK(back.xi_index == m.xi_index);
    CHECK(back.name == m.name);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) {
            CHECK(back.phi(i, j) == m.phi(i, j));
            for (int k = 0; k < m.dim; ++k) CHECK(back.bracket(i, j, k) == m.bracket(i, j, k));
        }
    CHECK(dump_model(back) == text);
}

TEST_CASE("model file parser rejects malformed input") {
    CHECK_THROWS_AS(parse_model("dim 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model("xi_index 0\nphi 1 2 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model("dim 3\nxi_index 0\nphi 0 0 0 0 0 -1 0 1 0\nbrackets 1\n9 0 0 1\n"),
                    std::invalid_argument);
    // comments are allowed
    const std::string ok = "# comment\n" + dump_model(milnor_model(-2, 0, 2));
    CHECK(parse_model(ok).dim == 3);
}

TEST_CASE("model validation guards") {
    LieModel m = g_lambda_model(1, 1.0);
    m.bracket(0, 1, 1) = 5.0;  // break antisymmetry
    CHECK_THROWS_AS(validate_model(m), std::invalid_argument);
    CHECK_THROWS_AS(g_lambda_model(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(g_lambda_model(1, -1.0), std::invalid_argument);
}
