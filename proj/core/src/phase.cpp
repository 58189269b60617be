#include "luka/phase.hpp"

#include <cmath>

#include "luka/resultant.hpp"

namespace luka {

namespace {

void require_nondegenerate(const ModelParams& params) {
    if (params.degenerate())
        throw DegenerateModel("(0,0) has no adsorption transition; R = 1/(1-az)");
}

// Interval image of the enclosure under the monotone map Gamma.
Interval gamma_interval(const GammaForm& g, const RootEnclosure& u) {
    // Gamma is strictly increasing on the bracket (positive coefficients,
    // and u < 1 for the rational form).
    return {g.eval(u.lo), g.eval(u.hi), u.exact};
}

}  // namespace

MultiPoly uc_polynomial(const ModelParams& params) {
    require_nondegenerate(params);
    const MultiPoly u = MultiPoly::variable(Var::u);
    if (params.infinite_ell()) {
        // sum_{j>=k} j u^(j+1) = u^(k+1) (k - (k-1)u) / (1-u)^2; cleared form.
        const int k = params.k;
        MultiPoly lin = MultiPoly(k) - MultiPoly(k - 1) * u;
        MultiPoly one_minus_u = MultiPoly(1) - u;
        return u.pow(k + 1) * lin - one_minus_u * one_minus_u;
    }
    MultiPoly f = MultiPoly(-1);
    for (int j = params.k; j <= *params.ell; ++j)
        f += MultiPoly(j) * u.pow(j + 1);
    return f;
}

CriticalPoint critical_point(const ModelParams& params, const mpq_class& tol) {
    require_nondegenerate(params);
    if (tol <= 0) throw DomainError("tolerance must be positive");
    const GammaForm g = gamma_form(params);
    const MultiPoly f = uc_polynomial(params);

    RootEnclosure u;
    if (!params.infinite_ell()) {
        // f(1) = sum j - 1 >= 0, with equality exactly for (0,1) and (1,1).
        mpq_class f1 = ZPoly::from_multipoly(f, Var::u).eval(mpq_class(1));
        if (f1 == 0)
            u = RootEnclosure{f, Var::u, 1, 1, true};
        else
            u = bisect_root(f, Var::u, 0, 1, tol);
    } else {
        u = bisect_root(f, Var::u, 0, 1, tol);
    }

    CriticalPoint cp;
    cp.params = params;
    for (;;) {
        Interval gi = gamma_interval(g, u);
        cp.z_c = {u.lo / (1 + gi.hi), u.hi / (1 + gi.lo), u.exact};
        cp.a_c = {1 + 1 / gi.hi, 1 + 1 / gi.lo, u.exact};
        cp.L_c = {1 + gi.lo, 1 + gi.hi, u.exact};
        if (u.exact || (cp.z_c.width() <= tol && cp.a_c.width() <= tol &&
                        cp.L_c.width() <= tol && u.width() <= tol))
            break;
        refine(u, u.width() / 16);
    }
    cp.u_c = u;
    return cp;
}

namespace {

// Indicial polynomial in z at fixed rational a; for ell = infinity the
// cleared rational form (a-1)(az)^(k+1) + az(a-1)^k - (a-1)^(k+1).
MultiPoly zplus_polynomial(const ModelParams& params) {
    if (!params.infinite_ell()) return indicial_coefficient(params);
    const int k = params.k;
    const MultiPoly a = MultiPoly::variable(Var::a);
    const MultiPoly az = a * MultiPoly::variable(Var::z);
    const MultiPoly am1 = a - MultiPoly(1);
    return am1 * az.pow(k + 1) + az * am1.pow(k) - am1.pow(k + 1);
}

}  // namespace

Interval zc_of_a(const ModelParams& params, const mpq_class& a, const mpq_class& tol) {
    require_nondegenerate(params);
    if (a < 1) throw DomainError("zc_of_a is defined for a >= 1");
    CriticalPoint cp = critical_point(params, tol);
    // Decide the branch: refine a_c until a is cleanly on one side.
    mpq_class t = tol;
    for (int round = 0; round < 64 && !cp.a_c.exact && cp.a_c.contains(a); ++round) {
        t /= 1024;
        cp = critical_point(params, t);
    }
    if (a <= cp.a_c.lo) return cp.z_c;

    MultiPoly p = zplus_polynomial(params).substitute_rational(Var::a, a);
    RootEnclosure r = isolate_positive_root(p, Var::z, tol, /*certify_unique=*/true);
    return {r.lo, r.hi, r.exact};
}

double free_energy(const ModelParams& params, const mpq_class& a, const mpq_class& tol) {
    const Interval z = zc_of_a(params, a, tol);
    return -std::log(z.midpoint().get_d());
}

MultiPoly crit_polynomial(const ModelParams& params) {
    if (params.infinite_ell()) throw InfiniteEll("crit polynomial requires finite ell");
    require_nondegenerate(params);
    const MultiPoly P1 = build_P1(params);
    const MultiPoly d1 = discriminant_monic(P1, Var::R);
    return sylvester_resultant(d1, indicial_coefficient(params), Var::z)
        .primitive_normalized();
}

MultiPoly crit_polynomial_gamma(const ModelParams& params) {
    if (params.infinite_ell()) throw InfiniteEll("crit polynomial requires finite ell");
    require_nondegenerate(params);
    const MultiPoly f = uc_polynomial(params);
    const GammaForm g = gamma_form(params);
    const MultiPoly am1 = MultiPoly::variable(Var::a) - MultiPoly(1);
    const MultiPoly h = am1 * g.num - MultiPoly(1);
    return sylvester_resultant(f, h, Var::u).primitive_normalized();
}

DiscriminantFactorization discriminant_factorization_check(const ModelParams& params) {
    if (params.infinite_ell()) throw InfiniteEll("discriminant check requires finite ell");
    const int l = *params.ell;
    DiscriminantFactorization out;
    out.expected_exponent = l * (l + 1);
    out.delta_p1 = discriminant_monic(build_P1(params), Var::R);
    out.delta_p2 = discriminant_monic(build_P2(params), Var::L);

    const MultiPoly pp1 = out.delta_p1.primitive_normalized();
    const MultiPoly pp2 = out.delta_p2.primitive_normalized();
    auto q = pp1.divide_exact(pp2);
    if (!q) {
        out.pass = false;
        return out;
    }
    out.ratio = *q;
    // Signed contents give the rational constant in Delta P1 = c * ratio * Delta P2.
    auto signed_content = [](const MultiPoly& p) {
        mpz_class c = p.content();
        return p.terms().rbegin()->second < 0 ? mpz_class(-c) : c;
    };
    out.constant = mpq_class(signed_content(out.delta_p1), signed_content(out.delta_p2));
    out.constant.canonicalize();

    Exponents want{};
    want[static_cast<int>(Var::a)] = out.expected_exponent;
    out.pass = out.ratio.is_monomial() && out.ratio.terms().begin()->first == want &&
               out.ratio.terms().begin()->second == 1;
    return out;
}

bool has_root_near(const MultiPoly& poly_in_a, const Interval& a_c, const mpq_class& tol) {
    ZPoly p = ZPoly::from_multipoly(poly_in_a, Var::a).squarefree_part();
    const mpq_class lo = a_c.lo - tol, hi = a_c.hi + tol;
    if (a_c.exact && p.eval(a_c.lo) == 0) return true;
    const int slo = sgn(p.eval(lo)), shi = sgn(p.eval(hi));
    return slo == 0 || shi == 0 || slo != shi;
}

std::vector<AcSweepRow> ac_sweep(int k, const std::vector<std::optional<int>>& ells,
                                 const mpq_class& tol) {
    std::vector<AcSweepRow> rows;
    rows.reserve(ells.size());
    for (const auto& l : ells)
        rows.push_back({l, critical_point(ModelParams(k, l), tol)});
    return rows;
}

PhaseCurve phase_curve(const ModelParams& params, const mpq_class& a_lo,
                       const mpq_class& a_hi, int steps, const mpq_class& tol) {
    if (steps < 1 || a_hi < a_lo) throw DomainError("bad a-grid");
    PhaseCurve curve;
    curve.params = params;
    curve.a_c = critical_point(params, tol).a_c;
    for (int i = 0; i <= steps; ++i) {
        mpq_class a = a_lo + (a_hi - a_lo) * i / steps;
        Interval z = zc_of_a(params, a, tol);
        curve.samples.push_back({a, z.midpoint(), -std::log(z.midpoint().get_d())});
    }
    return curve;
}

}  // namespace luka
