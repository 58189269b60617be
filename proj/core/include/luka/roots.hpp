#pragma once

#include <gmpxx.h>

#include "luka/multipoly.hpp"
#include "luka/upoly.hpp"

namespace luka {

// Certified enclosure of a single real root of a univariate polynomial.
// Either an exact rational root (lo == hi) or an interval on which the
// polynomial changes sign exactly once.
struct RootEnclosure {
    MultiPoly poly;
    Var var = Var::u;
    mpq_class lo, hi;
    bool exact = false;

    mpq_class midpoint() const { return (lo + hi) / 2; }
    mpq_class width() const { return hi - lo; }
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
};

// Descartes' bound on the number of positive real roots.
int descartes_sign_changes(const MultiPoly& p, Var v);

// Isolate a positive real root of a univariate polynomial by exact rational
// bisection. With certify_unique (default), Descartes' rule must report
// exactly one sign change, making the returned root the unique positive one;
// zero sign changes raises NoPositiveRoot, more raises MultipleSignChanges.
RootEnclosure isolate_positive_root(const MultiPoly& p, Var v, const mpq_class& tol,
                                    bool certify_unique = true);

// Bisect to width <= tol inside [lo, hi]; requires a sign change on the
// bracket (or an exact root at an endpoint).
RootEnclosure bisect_root(const MultiPoly& p, Var v, mpq_class lo, mpq_class hi,
                          const mpq_class& tol);

// Refine an existing enclosure to a tighter tolerance.
void refine(RootEnclosure& enc, const mpq_class& tol);

}  // namespace luka
