#include "luka/genfun.hpp"

#include "luka/resultant.hpp"

namespace luka {

SeriesInZ SeriesInZ::one(int order) {
    SeriesInZ s;
    s.order = order;
    s.c.assign(static_cast<std::size_t>(order) + 1, MultiPoly());
    s.c[0] = MultiPoly(1);
    return s;
}

SeriesInZ series_add(const SeriesInZ& x, const SeriesInZ& y) {
    SeriesInZ r = x;
    for (int n = 0; n <= r.order && n <= y.order; ++n)
        r.c[static_cast<std::size_t>(n)] += y[n];
    return r;
}

SeriesInZ series_mul(const SeriesInZ& x, const SeriesInZ& y) {
    SeriesInZ r;
    r.order = x.order;
    r.c.assign(static_cast<std::size_t>(r.order) + 1, MultiPoly());
    for (int i = 0; i <= x.order; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order && j <= y.order; ++j) {
            if (y[j].is_zero()) continue;
            r.c[static_cast<std::size_t>(i + j)].add_mul(x[i], y[j]);
        }
    }
    return r;
}

SeriesInZ series_shift_scale(const SeriesInZ& x, int shift, const MultiPoly& scale) {
    SeriesInZ r;
    r.order = x.order;
    r.c.assign(static_cast<std::size_t>(r.order) + 1, MultiPoly());
    for (int n = shift; n <= r.order; ++n)
        r.c[static_cast<std::size_t>(n)] = x[n - shift] * scale;
    return r;
}

SeriesInZ series_qshift(const SeriesInZ& x, int i) {
    SeriesInZ r = x;
    for (int n = 1; n <= r.order; ++n)
        r.c[static_cast<std::size_t>(n)] =
            r.c[static_cast<std::size_t>(n)] * MultiPoly::variable(Var::q, i * n);
    return r;
}

SeriesInZ series_eval_var(const SeriesInZ& x, Var v, const mpq_class& value) {
    SeriesInZ r = x;
    for (auto& coeff : r.c) coeff = coeff.substitute_rational(v, value);
    return r;
}

mpq_class GammaForm::eval(const mpq_class& u) const {
    std::map<Var, mpq_class> at{{Var::u, u}};
    mpq_class n = num.evaluate(at);
    if (!infinite) return n;
    mpq_class d = den.evaluate(at);
    if (d == 0) throw DomainError("Gamma_{k,inf} evaluated at u = 1");
    return n / d;
}

GammaForm gamma_form(const ModelParams& params) {
    GammaForm g;
    if (params.infinite_ell()) {
        g.infinite = true;
        g.num = MultiPoly::variable(Var::u, params.k + 1);
        g.den = MultiPoly(1) - MultiPoly::variable(Var::u);
    } else {
        g.infinite = false;
        for (int j = params.k; j <= *params.ell; ++j)
            g.num += MultiPoly::variable(Var::u, j + 1);
        g.den = MultiPoly(1);
    }
    return g;
}

MultiPoly build_P2(const ModelParams& params) {
    if (params.infinite_ell())
        throw InfiniteEll("P2 is not polynomial for ell = infinity");
    MultiPoly p = MultiPoly(1) - MultiPoly::variable(Var::L);
    for (int j = params.k; j <= *params.ell; ++j) {
        Exponents e{};
        e[static_cast<int>(Var::z)] = j + 1;
        e[static_cast<int>(Var::L)] = j + 1;
        p += MultiPoly::monomial(1, e);
    }
    return p;
}

MultiPoly build_P1(const ModelParams& params) {
    const MultiPoly p2 = build_P2(params);
    const MultiPoly a = MultiPoly::variable(Var::a);
    // L -> a L / (1 + (a-1) L), cleared by the denominator to degree l+1,
    // then renamed L -> R.
    MobiusMap map{a, MultiPoly(), a - MultiPoly(1), MultiPoly(1)};
    return mobius_substitute(p2, Var::L, map).rename(Var::L, Var::R).primitive_normalized();
}

MultiPoly indicial_coefficient(const ModelParams& params) {
    if (params.infinite_ell())
        throw InfiniteEll("indicial coefficient requires finite ell");
    const int l = *params.ell;
    const MultiPoly am1 = MultiPoly::variable(Var::a) - MultiPoly(1);
    MultiPoly p = am1.pow(l);
    const MultiPoly az = MultiPoly::variable(Var::a) * MultiPoly::variable(Var::z);
    for (int j = params.k; j <= l; ++j) p -= az.pow(j + 1) * am1.pow(l - j);
    return p;
}

AlgebraicSystem build_system(const ModelParams& params) {
    return {build_P2(params), build_P1(params), indicial_coefficient(params)};
}

namespace {

// sum_{m=0}^{order} W^m for a series W with zero constant term.
SeriesInZ geometric_sum(const SeriesInZ& W) {
    SeriesInZ acc = SeriesInZ::one(W.order);   // W^0
    SeriesInZ pw = SeriesInZ::one(W.order);
    for (int m = 1; m <= W.order; ++m) {
        pw = series_mul(pw, W);
        acc = series_add(acc, pw);
    }
    return acc;
}

SeriesInZ zL(const SeriesInZ& L) { return series_shift_scale(L, 1, MultiPoly(1)); }

}  // namespace

SeriesInZ series_L(const ModelParams& params, int order) {
    if (order < 0) throw DomainError("negative order");
    SeriesInZ L = SeriesInZ::one(order);
    for (int it = 0; it <= order; ++it) {
        const SeriesInZ W = zL(L);
        SeriesInZ T;  // sum_{j=k}^{l} W^(j+1)
        if (params.infinite_ell()) {
            SeriesInZ pw = W;  // W^(k+1)
            for (int i = 0; i < params.k; ++i) pw = series_mul(pw, W);
            T = series_mul(pw, geometric_sum(W));
        } else {
            SeriesInZ pw = SeriesInZ::one(order);
            for (int i = 0; i < params.k + 1; ++i) pw = series_mul(pw, W);
            T.order = order;
            T.c.assign(static_cast<std::size_t>(order) + 1, MultiPoly());
            for (int j = params.k; j <= *params.ell; ++j) {
                T = series_add(T, pw);
                if (j < *params.ell) pw = series_mul(pw, W);
            }
        }
        L = series_add(SeriesInZ::one(order), T);
    }
    return L;
}

SeriesInZ series_R(const ModelParams& params, int order) {
    if (order < 0) throw DomainError("negative order");
    const SeriesInZ L = series_L(params, order);
    const SeriesInZ W = zL(L);
    SeriesInZ S;  // sum_{j=k}^{l} W^j
    if (params.infinite_ell()) {
        SeriesInZ pw = SeriesInZ::one(order);
        for (int i = 0; i < params.k; ++i) pw = series_mul(pw, W);
        S = series_mul(pw, geometric_sum(W));
    } else {
        SeriesInZ pw = SeriesInZ::one(order);
        for (int i = 0; i < params.k; ++i) pw = series_mul(pw, W);
        S.order = order;
        S.c.assign(static_cast<std::size_t>(order) + 1, MultiPoly());
        for (int j = params.k; j <= *params.ell; ++j) {
            S = series_add(S, pw);
            if (j < *params.ell) pw = series_mul(pw, W);
        }
    }
    const SeriesInZ azS = series_shift_scale(S, 1, MultiPoly::variable(Var::a));
    SeriesInZ R = SeriesInZ::one(order);
    for (int it = 0; it <= order; ++it)
        R = series_add(SeriesInZ::one(order), series_mul(azS, R));
    return R;
}

}  // namespace luka
