#pragma once

#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvlab/kappa_mu.hpp"
#include "curvlab/lie_model.hpp"
#include "curvlab/sasakian.hpp"
#include "curvlab/tensor.hpp"

// Report/verification layer: builds models from catalog specs or files,
// runs the identity suites, and emits deterministic JSON (nlohmann::json
// keeps object keys sorted; doubles serialize round-trip exactly).

namespace curvlab {

using json = nlohmann::json;

struct CheckCollector {
    double tol;
    json residuals = json::object();
    json pass = json::object();
    bool all_pass = true;

    explicit CheckCollector(double tol_) : tol(tol_) {}

    void add(const std::string& name, double residual, double scale = 1.0) {
        const bool ok = residual < tol * std::max(1.0, scale);
        residuals[name] = residual;
        pass[name] = ok;
        all_pass = all_pass && ok;
    }
    void add_flag(const std::string& name, bool ok) {
        pass[name] = ok;
        all_pass = all_pass && ok;
    }
};

// checks every produced tensor must satisfy
inline void add_tensor_checks(CheckCollector& c, const CurvatureTensor& t) {
    const SymmetryReport sym = validate_symmetries(t);
    c.add("symmetry-antisym", sym.max_antisym);
    c.add("symmetry-pair", sym.max_pair);
    c.add("symmetry-bianchi", sym.max_bianchi);
    if (t.dim() >= 3) {
        const double r2 = t.norm_sq();
        c.add("norm-decomposition", norm_decomposition_residual(t), r2);
        const CurvatureInvariants inv = invariants_of(t);
        c.add("breve-trace", std::abs(inv.breve.trace() - r2), r2);
        c.add("weyl-trace-free", weyl_trace_residual(inv.weyl), std::max(1.0, r2));
    }
}

// ---- catalog ----------------------------------------------------------

struct CatalogSpec {
    std::string kind;  // g-lambda | milnor | sphere | contact-km | cosym-km | file
    std::vector<double> args;
    std::string path;
};

inline CatalogSpec parse_catalog_spec(const std::string& spec) {
    CatalogSpec out;
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    if (head == "g-lambda" || head == "milnor" || head == "sphere" || head == "contact-km" ||
        head == "cosym-km") {
        out.kind = head;
        std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ':')) {
            try {
                std::size_t used = 0;
                const double v = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("");
                out.args.push_back(v);
            } catch (...) {
                throw std::invalid_argument("catalog spec: bad parameter '" + tok + "'");
            }
        }
        const std::size_t want = (out.kind == "sphere") ? 1 : (out.kind == "g-lambda" ? 2 : 3);
        if (out.args.size() != want)
            throw std::invalid_argument("catalog spec: '" + head + "' takes " +
                                        std::to_string(want) + " parameters");
    } else {
        out.kind = "file";
        out.path = spec;
    }
    return out;
}

inline int require_int(double v, const char* what) {
    const int i = static_cast<int>(std::lround(v));
    if (std::abs(v - i) > 1e-12) throw std::invalid_argument(std::string(what) + " must be an integer");
    return i;
}

inline void add_lie_model_report(CheckCollector& c, json& rep, const LieModel& m) {
    validate_model(m);
    rep["dim"] = m.dim;
    c.add("bracket-jacobi", jacobi_residual(m));
    c.add("almost-contact-axioms", almost_contact_residual(m));

    const Tensor3 gamma = koszul_connection(m);
    double metric_compat = 0.0;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            for (int k = 0; k < m.dim; ++k)
                metric_compat = std::max(metric_compat, std::abs(gamma(i, j, k) + gamma(i, k, j)));
    c.add("connection-metric-compat", metric_compat);

    const CurvatureTensor t = curvature_of(m);
    add_tensor_checks(c, t);
    const CurvatureInvariants inv = invariants_of(t);
    rep["invariants"] = {{"scalar", inv.record.scalar},
                         {"ricci_normsq", inv.record.ricci_normsq},
                         {"traceless_normsq", inv.record.traceless_normsq},
                         {"weyl_normsq", inv.record.weyl_normsq},
                         {"riemann_normsq", inv.record.riemann_normsq},
                         {"breve_xixi", inv.breve(m.xi_index, m.xi_index)}};

    const Matrix h = h_operator(m);
    double h_sym = 0.0, h_anti = 0.0;
    const Matrix ph = m.phi.multiply(h);
    const Matrix hp = h.multiply(m.phi);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) {
            h_sym = std::max(h_sym, std::abs(h(i, j) - h(j, i)));
            h_anti = std::max(h_anti, std::abs(ph(i, j) + hp(i, j)));
        }
    c.add("h-symmetric", h_sym);
    c.add("h-trace-free", std::abs(h.trace()));
    c.add("h-anticommutes-phi", h_anti);
    double h_xi = 0.0;
    for (int i = 0; i < m.dim; ++i) h_xi = std::max(h_xi, std::abs(h(i, m.xi_index)));
    c.add("h-annihilates-xi", h_xi);

    const StructureClass sc = exterior_and_classify(m, c.tol);
    rep["classification"] = {{"label", sc.label},
                             {"normal", sc.normal},
                             {"deta_minus_omega", sc.deta_minus_omega},
                             {"deta", sc.deta},
                             {"domega", sc.domega},
                             {"nijenhuis", sc.nijenhuis}};

    const KappaMuFit fit = detect_kappa_mu(t, h, m.xi_index, c.tol);
    json det = {{"kappa", fit.kappa}, {"fit_residual", fit.residual},
                {"mu_determined", fit.mu_determined}};
    if (fit.mu_determined) det["mu"] = fit.mu;
    if (fit.ok(c.tol)) {
        c.add("nullity-fit", fit.residual);
        if (fit.kappa < 1.0 - c.tol) {
            det["lambda"] = std::sqrt(1.0 - fit.kappa);
            rep["boeckx_invariant"] = boeckx_invariant(fit.kappa, fit.mu_determined ? fit.mu : 0.0);
        }
        if (m.dim == 3 && fit.kappa <= 1.0 + c.tol)
            rep["branch_label"] = classify_3dim(std::min(fit.kappa, 1.0),
                                                fit.mu_determined ? fit.mu : 0.0, 1e-6);
    }
    rep["detected"] = det;

    const WeaklyEinsteinResidual we = weakly_einstein_residual(t);
    rep["weakly_einstein"] = {{"full", we.full}, {"xixi", we.xixi}};
    if (m.xi_index == 0) {
        const LemmaResiduals lr = lemma_decomposition_residual(t, (m.dim - 1) / 2);
        c.add("norm-partition", lr.curvature_partition, t.norm_sq());
        c.add("weyl-norm-partition", lr.weyl_partition, std::max(1.0, t.norm_sq()));
    }
}

inline void add_assembled_report(CheckCollector& c, json& rep, const KappaMuParams& p) {
    p.validate();
    rep["dim"] = p.dim();
    rep["family"] = p.family == Family::contact ? "contact" : "almost-cosymplectic";
    rep["parameters"] = {{"n", p.n}, {"kappa", p.kappa}, {"mu", p.mu}, {"lambda", p.lambda()}};

    const CurvatureTensor t = assemble_km(p);
    add_tensor_checks(c, t);
    const CurvatureInvariants inv = invariants_of(t);
    rep["invariants"] = {{"scalar", inv.record.scalar},
                         {"ricci_normsq", inv.record.ricci_normsq},
                         {"traceless_normsq", inv.record.traceless_normsq},
                         {"weyl_normsq", inv.record.weyl_normsq},
                         {"riemann_normsq", inv.record.riemann_normsq},
                         {"breve_xixi", inv.record.breve_xixi}};

    const ClosedFormInvariants cf = closed_form_invariants(p);
    c.add("breve-xixi-closed-form", std::abs(inv.record.breve_xixi - cf.breve_xixi),
          std::abs(cf.breve_xixi));
    c.add("riemann-normsq-closed-form", std::abs(inv.record.riemann_normsq - cf.riemann_normsq),
          std::abs(cf.riemann_normsq));
    const auto blocks = block_squares_of(t, p.n);
    double worst = 0.0;
    for (int b = 0; b < 6; ++b)
        worst = std::max(worst, std::abs(blocks[b] - cf.block_squares[b]));
    c.add("block-squares", worst, std::max(1.0, cf.riemann_normsq));

    const Matrix h = adapted_h(p.n, p.lambda());
    const KappaMuFit fit = detect_kappa_mu(t, h, 0, c.tol);
    c.add("nullity-fit", fit.residual, std::max({1.0, std::abs(p.kappa), std::abs(p.mu)}));
    c.add("nullity-round-trip",
          std::max(std::abs(fit.kappa - p.kappa), std::abs(fit.mu - p.mu)),
          std::max({1.0, std::abs(p.kappa), std::abs(p.mu)}));

    const LemmaResiduals lr = lemma_decomposition_residual(t, p.n);
    c.add("norm-partition", lr.curvature_partition, t.norm_sq());
    c.add("weyl-norm-partition", lr.weyl_partition, std::max(1.0, t.norm_sq()));

    const WeaklyEinsteinResidual we = weakly_einstein_residual(t);
    rep["weakly_einstein"] = {{"full", we.full}, {"xixi", we.xixi}};
    const WeaklyEinsteinPolynomials poly = weakly_einstein_polynomials(p);
    json pj = {{"primary", poly.primary}};
    if (p.family == Family::contact) {
        pj["eq_kappa_form"] = poly.eq18_diff;
        if (p.n == 1) pj["factored_n1"] = poly.factored_n1;
        rep["boeckx_invariant"] = boeckx_invariant(p.kappa, p.mu);
        if (p.n == 1) rep["branch_label"] = classify_3dim(p.kappa, p.mu, 1e-6);
    }
    rep["polynomials"] = pj;
    rep["detected"] = {{"kappa", fit.kappa}, {"mu", fit.mu},
                       {"fit_residual", fit.residual}, {"mu_determined", fit.mu_determined}};
}

inline void add_sphere_report(CheckCollector& c, json& rep, int n) {
    const CurvatureTensor t = sphere_sasakian_tensor(n);
    rep["dim"] = 2 * n + 1;
    add_tensor_checks(c, t);
    const CurvatureInvariants inv = invariants_of(t);
    rep["invariants"] = {{"scalar", inv.record.scalar},
                         {"ricci_normsq", inv.record.ricci_normsq},
                         {"traceless_normsq", inv.record.traceless_normsq},
                         {"weyl_normsq", inv.record.weyl_normsq},
                         {"riemann_normsq", inv.record.riemann_normsq},
                         {"breve_xixi", inv.record.breve_xixi}};
    c.add("sasakian-xi-pattern", sasakian_xi_pattern_residual(t));
    c.add("trace-identity", trace_identity_residual(t, c.tol));
    const ScalarBounds b = scalar_bounds(n);
    c.add("scalar-upper-bound-saturation", std::abs(inv.record.scalar - b.upper),
          std::abs(b.upper));
    const WeaklyEinsteinResidual we = weakly_einstein_residual(t);
    rep["weakly_einstein"] = {{"full", we.full}, {"xixi", we.xixi}};
    c.add("weakly-einstein-full", we.full, inv.record.riemann_normsq);
    const LemmaResiduals lr = lemma_decomposition_residual(t, n);
    c.add("norm-partition", lr.curvature_partition, t.norm_sq());
    c.add("weyl-norm-partition", lr.weyl_partition, std::max(1.0, t.norm_sq()));
}

// Build the full report for a model spec (catalog or file path).
inline json model_report(const std::string& spec, double tol, bool& all_pass) {
    const CatalogSpec cs = parse_catalog_spec(spec);
    CheckCollector c(tol);
    json rep = json::object();
    rep["model_id"] = spec;
    rep["tolerance"] = tol;
    if (cs.kind == "g-lambda") {
        add_lie_model_report(c, rep,
                             g_lambda_model(require_int(cs.args[0], "n"), cs.args[1]));
    } else if (cs.kind == "milnor") {
        add_lie_model_report(c, rep, milnor_model(cs.args[0], cs.args[1], cs.args[2]));
    } else if (cs.kind == "sphere") {
        add_sphere_report(c, rep, require_int(cs.args[0], "n"));
    } else if (cs.kind == "contact-km" || cs.kind == "cosym-km") {
        KappaMuParams p;
        p.family = cs.kind == "contact-km" ? Family::contact : Family::almost_cosymplectic;
        p.n = require_int(cs.args[0], "n");
        p.kappa = cs.args[1];
        p.mu = cs.args[2];
        add_assembled_report(c, rep, p);
    } else {
        std::ifstream in(cs.path);
        if (!in) throw std::invalid_argument("cannot open model file: " + cs.path);
        std::stringstream buf;
        buf << in.rdbuf();
        add_lie_model_report(c, rep, parse_model(buf.str()));
    }
    rep["residuals"] = c.residuals;
    rep["pass"] = c.pass;
    rep["all_pass"] = c.all_pass;
    all_pass = c.all_pass;
    return rep;
}

}  // namespace curvlab
