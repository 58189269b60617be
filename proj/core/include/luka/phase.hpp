#pragma once

#include <optional>
#include <vector>

#include "luka/genfun.hpp"
#include "luka/params.hpp"
#include "luka/roots.hpp"

namespace luka {

struct Interval {
    mpq_class lo, hi;
    bool exact = false;

    mpq_class midpoint() const { return (lo + hi) / 2; }
    mpq_class width() const { return hi - lo; }
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
    static Interval point(const mpq_class& x) { return {x, x, true}; }
};

// Critical data of the kernel analysis: u_c is the unique positive root of
// sum_{j=k}^{l} j u^(j+1) = 1, and
//   z_c = u_c / (1 + Gamma(u_c)),  a_c = 1 + 1/Gamma(u_c),  L_c = 1 + Gamma(u_c).
struct CriticalPoint {
    ModelParams params;
    RootEnclosure u_c;
    Interval z_c, a_c, L_c;
};

// The defining polynomial for u_c (the rational equation is cleared by
// (1-u)^2 for ell = infinity; root sought in (0,1)).
MultiPoly uc_polynomial(const ModelParams& params);

CriticalPoint critical_point(const ModelParams& params, const mpq_class& tol);

// Radius of convergence z_c(a): the constant z_c for 1 <= a <= a_c, and for
// a > a_c the unique positive root z_c^+(a) of 1/(a-1) = Gamma(az/(a-1)).
Interval zc_of_a(const ModelParams& params, const mpq_class& a, const mpq_class& tol);

// kappa(a) = -log z_c(a), from the certified enclosure midpoint.
double free_energy(const ModelParams& params, const mpq_class& a, const mpq_class& tol);

// Eliminates z between the discriminant of P1 and the indicial polynomial:
// resultant(Delta P1(z;a), p_{k,l+1}(z,a); z), primitive-normalized.
// Reproduces the closed form a^4 (2a-3)^2 for Motzkin paths.
MultiPoly crit_polynomial(const ModelParams& params);

// The equivalent elimination in the kernel variable: resultant of
// sum j u^(j+1) - 1 and (a-1) Gamma_{k,l}(u) - 1, primitive-normalized.
// Free of the extraneous factors the z-elimination carries; reproduces the
// published quintic for (2,4).
MultiPoly crit_polynomial_gamma(const ModelParams& params);

struct DiscriminantFactorization {
    MultiPoly delta_p1;   // monic-normalized discriminant of P1 in R
    MultiPoly delta_p2;   // monic-normalized discriminant of P2 in L
    MultiPoly ratio;      // primitive quotient pp(Delta P1) / pp(Delta P2)
    mpq_class constant;   // Delta P1 == constant * ratio * Delta P2
    int expected_exponent = 0;  // l(l+1)
    bool pass = false;    // ratio == +/- a^(l(l+1))
};

// Verifies Delta P1(z;a) = const * a^(l(l+1)) * Delta P2(z) exactly.
DiscriminantFactorization discriminant_factorization_check(const ModelParams& params);

// True iff the squarefree part of a polynomial in `a` vanishes inside
// [a_c - tol, a_c + tol] (exact evaluation / sign-change certificate).
bool has_root_near(const MultiPoly& poly_in_a, const Interval& a_c, const mpq_class& tol);

struct AcSweepRow {
    std::optional<int> ell;
    CriticalPoint cp;
};

std::vector<AcSweepRow> ac_sweep(int k, const std::vector<std::optional<int>>& ells,
                                 const mpq_class& tol);

struct PhaseSample {
    mpq_class a;
    mpq_class z_c;
    double kappa;
};

struct PhaseCurve {
    ModelParams params;
    std::vector<PhaseSample> samples;
    Interval a_c;
};

PhaseCurve phase_curve(const ModelParams& params, const mpq_class& a_lo,
                       const mpq_class& a_hi, int steps, const mpq_class& tol);

}  // namespace luka
