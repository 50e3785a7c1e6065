#include <doctest.h>

#include "curvlab/kappa_mu.hpp"
#include "curvlab/lie_model.hpp"

using namespace curvlab;

TEST_CASE("parameter guards") {
    KappaMuParams p{Family::contact, 1, 1.5, 0.0};
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.kappa = 1.0 - 1e-14;  // adapted frame degenerates
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    KappaMuParams q{Family::almost_cosymplectic, 1, 0.5, 0.0};
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    CHECK_THROWS_AS(assemble_contact_km(q), std::invalid_argument);
    KappaMuParams ok{Family::contact, 2, 0.36, 1.0};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.lambda() == doctest::Approx(0.8));
}

TEST_CASE("flat contact point assembles to zero") {
    KappaMuParams p{Family::contact, 1, 0.0, 0.0};
    CHECK(assemble_contact_km(p).max_abs() == 0.0);
}

TEST_CASE("assembled contact tensor passes symmetries and round-trips") {
    for (const auto& [n, kappa, mu] :
         {std::tuple{1, 0.5, 1.0}, std::tuple{2, 0.5, 1.0}, std::tuple{3, -1.0, 0.7}}) {
        KappaMuParams p{Family::contact, n, kappa, mu};
        const CurvatureTensor t = assemble_contact_km(p);
        CHECK(validate_symmetries(t).valid(1e-12));
        const Matrix h = adapted_h(n, p.lambda());
        const KappaMuFit fit = detect_kappa_mu(t, h, 0);
        CHECK(fit.kappa == doctest::Approx(kappa));
        CHECK(fit.mu == doctest::Approx(mu));
        CHECK(fit.residual < 1e-12);
    }
}

TEST_CASE("contact closed forms at a hand-checked point") {
    KappaMuParams p{Family::contact, 2, 0.36, 1.0};
    const ClosedFormInvariants cf = closed_form_invariants(p);
    CHECK(cf.breve_xixi == doctest::Approx(6.1568));
    const CurvatureTensor t = assemble_contact_km(p);
    const CurvatureInvariants inv = invariants_of(t);
    CHECK(inv.record.breve_xixi == doctest::Approx(cf.breve_xixi));
    CHECK(inv.record.riemann_normsq == doctest::Approx(cf.riemann_normsq));
}

TEST_CASE("contact block squares match the published table") {
    KappaMuParams p{Family::contact, 2, 0.5, 1.0};
    const auto blocks = block_squares_of(assemble_contact_km(p), 2);
    const ClosedFormInvariants cf = closed_form_invariants(p);
    const double n = 2, kappa = 0.5, mu = 1.0;
    CHECK(cf.block_squares[3] ==
          doctest::Approx((kappa * kappa + mu * mu) * n * n + 2.0 * n * kappa * mu));
    for (int b = 0; b < 6; ++b) CHECK(blocks[b] == doctest::Approx(cf.block_squares[b]));
}

TEST_CASE("n=1 contact: eigenspace-pair blocks vanish by antisymmetry") {
    KappaMuParams p{Family::contact, 1, 0.3, 0.7};
    const auto blocks = block_squares_of(assemble_contact_km(p), 1);
    CHECK(blocks[0] == 0.0);  // one-dimensional eigenspaces
    CHECK(blocks[2] == 0.0);
    CHECK(blocks[5] == 0.0);
}

TEST_CASE("assembled cosymplectic tensor matches its closed forms") {
    KappaMuParams p{Family::almost_cosymplectic, 1, -1.0, 1.0};
    const CurvatureTensor t = assemble_cosymplectic_km(p);
    CHECK(validate_symmetries(t).valid(1e-12));
    const CurvatureInvariants inv = invariants_of(t);
    CHECK(inv.record.breve_xixi == doctest::Approx(8.0));
    CHECK(inv.record.riemann_normsq == doctest::Approx(20.0));
    // xi-xi deviation from the weakly Einstein value
    const WeaklyEinsteinResidual we = weakly_einstein_residual(t);
    CHECK(we.xixi == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("cosymplectic with mu=0 is weakly Einstein") {
    KappaMuParams p{Family::almost_cosymplectic, 1, -1.0, 0.0};
    const CurvatureTensor t = assemble_cosymplectic_km(p);
    CHECK(weakly_einstein_residual(t).full < 1e-10);
    // horizontal block magnitude lambda^2
    CHECK(std::abs(t(1, 2, 1, 2)) == doctest::Approx(1.0));
}

TEST_CASE("cosymplectic assembly equals the group oracle") {
    const LieModel m = g_lambda_model(1, 1.0);
    const CurvatureTensor oracle = curvature_of(m);
    KappaMuParams p{Family::almost_cosymplectic, 1, -1.0, 0.0};
    const CurvatureTensor assembled = assemble_cosymplectic_km(p);
    // the model frame diagonalizes h only after the 45-degree rotation
    Matrix basis(3);
    basis(0, 0) = 1.0;
    const double r = 1.0 / std::sqrt(2.0);
    basis(1, 1) = r;
    basis(2, 1) = r;
    basis(1, 2) = -r;  // phi of column 1
    basis(2, 2) = r;
    const CurvatureTensor rotated = oracle.rotate(basis);
    double diff = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    diff = std::max(diff, std::abs(assembled(i, j, k, l) - rotated(i, j, k, l)));
    CHECK(diff < 1e-12);
}

TEST_CASE("contact assembler reproduces the three-dim catalog componentwise") {
    // catalog entries with positive h-eigenvalue in slot 1 are already in
    // the adapted frame
    for (const auto& [c2, c3] : {std::pair{1.0, 3.0}, std::pair{0.0, 2.0}, std::pair{0.0, 4.0},
                                 std::pair{-3.0, 1.0}}) {
        const LieModel m = milnor_model(milnor_contact_c1, c2, c3);
        const CurvatureTensor oracle = curvature_of(m);
        const KappaMuFit fit = detect_kappa_mu(oracle, h_operator(m), 0);
        REQUIRE(fit.ok(1e-9));
        KappaMuParams p{Family::contact, 1, fit.kappa, fit.mu};
        const CurvatureTensor assembled = assemble_contact_km(p);
        double diff = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l)
                        diff = std::max(diff,
                                        std::abs(assembled(i, j, k, l) - oracle(i, j, k, l)));
        CHECK(diff < 1e-12);
    }
}

TEST_CASE("norm partition residuals vanish on assembled tensors") {
    {
        KappaMuParams p{Family::contact, 2, 0.5, 0.3};
        const LemmaResiduals lr = lemma_decomposition_residual(assemble_contact_km(p), 2);
        CHECK(lr.curvature_partition < 1e-10);
        CHECK(lr.weyl_partition < 1e-10);
    }
    {
        KappaMuParams p{Family::almost_cosymplectic, 2, -1.0, 0.7};
        const LemmaResiduals lr = lemma_decomposition_residual(assemble_cosymplectic_km(p), 2);
        CHECK(lr.curvature_partition < 1e-10);
        CHECK(lr.weyl_partition < 1e-10);
    }
    CHECK(lemma_decomposition_residual(CurvatureTensor(5), 2).curvature_partition == 0.0);
}

TEST_CASE("solvability polynomials") {
    // n=1: the condition factors as -(mu+2) mu kappa
    KappaMuParams p{Family::contact, 1, 0.5, -2.0};
    CHECK(weakly_einstein_polynomials(p).primary == doctest::Approx(0.0));
    p.mu = 0.5;
    p.kappa = 0.3;
    CHECK(weakly_einstein_polynomials(p).primary ==
          doctest::Approx(-(0.5 + 2.0) * 0.5 * 0.3));
    // cosymplectic: mu=0 kills the residual
    KappaMuParams q{Family::almost_cosymplectic, 3, -2.0, 0.0};
    CHECK(weakly_einstein_polynomials(q).primary == 0.0);
    q.mu = 1.0;
    CHECK(weakly_einstein_polynomials(q).primary ==
          doctest::Approx(-4.0 * 3 * 1.0 * (-2.0) * 5.0 / 7.0));
}

TEST_CASE("mu threshold arithmetic") {
    CHECK_THROWS_AS(mu_admissible_bounds(1), std::invalid_argument);
    const MuBounds b2 = mu_admissible_bounds(2);
    CHECK(b2.upper == doctest::Approx(2.0 * std::sqrt(3.0) / 3.0));
    CHECK(b2.lower == doctest::Approx(-2.0 * std::sqrt(3.0) / 3.0));
    const MuBounds b3 = mu_admissible_bounds(3);
    CHECK(b3.upper == doctest::Approx((1.0 + std::sqrt(41.0)) / 5.0));
    CHECK(b3.lower == doctest::Approx((1.0 - std::sqrt(41.0)) / 5.0));
    for (int n = 2; n <= 5; ++n) {
        const MuBounds b = mu_admissible_bounds(n);
        for (const double mu : {b.lower, b.upper})
            CHECK(std::abs(-mu * mu * (2 * n - 1.0) + 2 * mu * (n - 2.0) + 4 * (n - 1.0)) <
                  1e-12);
    }
}

TEST_CASE("scale invariant of non-Sasakian spaces") {
    CHECK(boeckx_invariant(0.0, 0.0) == doctest::Approx(1.0));
    CHECK(boeckx_invariant(0.0, -2.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(boeckx_invariant(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("three-dim branch classification") {
    CHECK(classify_3dim(0.0, 0.0) == "E(2)-type-flat");
    CHECK(classify_3dim(0.0, -2.0) == "SU(2)-type");
    CHECK(classify_3dim(1.0, 5.0) == "Sasakian");
    CHECK(classify_3dim(0.0, 6.0) == "SL(2,R)-type");
    CHECK(classify_3dim(0.0, 4.0) == "E(1,1)-type");
    CHECK(classify_3dim(-3.0, -2.0) == "E(2)-type");
    CHECK_THROWS_AS(classify_3dim(2.0, 0.0), std::invalid_argument);
}
