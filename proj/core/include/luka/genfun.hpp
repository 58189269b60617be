#pragma once

#include <vector>

#include "luka/multipoly.hpp"
#include "luka/params.hpp"

namespace luka {

// Truncated formal power series in z with polynomial coefficients.
struct SeriesInZ {
    int order = 0;
    std::vector<MultiPoly> c;  // c[n] = coefficient of z^n, size order+1

    static SeriesInZ one(int order);
    const MultiPoly& operator[](int n) const { return c[static_cast<std::size_t>(n)]; }
    bool operator==(const SeriesInZ&) const = default;
};

SeriesInZ series_add(const SeriesInZ& x, const SeriesInZ& y);
SeriesInZ series_mul(const SeriesInZ& x, const SeriesInZ& y);
// Multiply by the monomial c * z^shift.
SeriesInZ series_shift_scale(const SeriesInZ& x, int shift, const MultiPoly& scale);
// Substitute z -> q^i z (multiplies c_n by q^(i*n)).
SeriesInZ series_qshift(const SeriesInZ& x, int i);
// Substitute every coefficient at a given variable value.
SeriesInZ series_eval_var(const SeriesInZ& x, Var v, const mpq_class& value);

// Gamma_{k,l}(u) = sum_{j=k}^{l} u^(j+1); for l = infinity the rational form
// u^(k+1) / (1 - u), valid as a formal object (numerically for |u| < 1).
struct GammaForm {
    bool infinite = false;
    MultiPoly num;  // finite: the polynomial itself; infinite: u^(k+1)
    MultiPoly den;  // finite: 1; infinite: 1 - u

    mpq_class eval(const mpq_class& u) const;
};

GammaForm gamma_form(const ModelParams& params);

// P2(L, z) = sum_{j=k}^{l} z^(j+1) L^(j+1) - L + 1   (finite l only)
MultiPoly build_P2(const ModelParams& params);

// P1(R, z, a): P2 with L -> aR/(1+(a-1)R), cleared by (1+(a-1)R)^(l+1) and
// primitive-normalized. Degree l+1 in R; the R^(l+1) coefficient is the
// indicial coefficient up to sign.
MultiPoly build_P1(const ModelParams& params);

// p_{k,l+1}(z,a) = (a-1)^l - sum_{j=k}^{l} (az)^(j+1) (a-1)^(l-j)
MultiPoly indicial_coefficient(const ModelParams& params);

struct AlgebraicSystem {
    MultiPoly P2;        // in (L, z)
    MultiPoly P1;        // in (R, z, a)
    MultiPoly indicial;  // in (z, a)
};

AlgebraicSystem build_system(const ModelParams& params);

// Unique formal power series solution of L = 1 + sum (zL)^(j+1), constant term 1.
SeriesInZ series_L(const ModelParams& params, int order);

// Series solution of R = 1 + az sum_j (zL)^j R; coefficient of z^n is the
// partition polynomial Z_n(a).
SeriesInZ series_R(const ModelParams& params, int order);

}  // namespace luka
