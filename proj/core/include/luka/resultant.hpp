#pragma once

#include "luka/multipoly.hpp"

namespace luka {

// Resultant of P and Q eliminating `x`, as the raw Sylvester determinant.
// Degree-0 conventions: res(P, c) = c^deg(P), res(c, Q) = c^deg(Q), res(c, d) = 1.
MultiPoly sylvester_resultant(const MultiPoly& P, const MultiPoly& Q, Var x);

// Raw discriminant: resultant(P, dP/dx; x). Carries the leading-coefficient
// factor of the Sylvester determinant.
MultiPoly discriminant(const MultiPoly& P, Var x);

// Normalized variant: raw discriminant divided exactly by the leading
// coefficient of P in x (the quadratic AR^2+BR+C yields +/- (B^2 - 4AC)).
MultiPoly discriminant_monic(const MultiPoly& P, Var x);

struct MobiusMap {
    MultiPoly alpha, beta, gamma, delta;  // x -> (alpha x + beta) / (gamma x + delta)
    MultiPoly determinant() const { return alpha * delta - beta * gamma; }
};

// Denominator-cleared substitution (gamma x + delta)^n P((alpha x + beta)/(gamma x + delta)),
// n = deg_x P. The map coefficients must not involve x.
MultiPoly mobius_substitute(const MultiPoly& P, Var x, const MobiusMap& map);

// Exact determinant of a square MultiPoly matrix. Entries with at most one
// variable are eliminated fraction-free (Bareiss); multivariate entries are
// handled by evaluating one variable at integer nodes and interpolating.
MultiPoly det_multipoly(std::vector<std::vector<MultiPoly>> m);

}  // namespace luka
