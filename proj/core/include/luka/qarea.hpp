#pragma once

#include <vector>

#include "luka/genfun.hpp"
#include "luka/params.hpp"
#include "luka/upoly.hpp"

namespace luka {

// Coefficients c_n(q) of H^{(k,l)}(z;q) = sum z^n c_n(q), from the recurrence
//   (q^n - 1) c_n(q) = sum_{j=k}^{l} q^(C(j+1,2) + (j+1)(n-j-1)) c_{n-j-1}(q),
// with c_0 = 1 and c_n = 0 for n < 0.
std::vector<RationalQFunction> c_table(const ModelParams& params, int order);

// H as a truncated series (the c-table itself, kept as a distinct entry point).
inline std::vector<RationalQFunction> H_series(const ModelParams& params, int order) {
    return c_table(params, order);
}

// Coefficient-wise check of the linear q-difference equation
//   H(qz;q) = H(z;q) + sum_j z^(j+1) q^C(j+1,2) H(q^(j+1) z; q).
bool h_satisfies_qdifference(const ModelParams& params, int order);

// (t; q)_n = prod_{j=0}^{n-1} (1 - t q^j) for t = q^s, base q^b.
ZPoly q_pochhammer(int s, int b, int n);

enum class ClosedFormKind {
    diagonal,  // (k,k):   H = sum q^C((k+1)n,2) (-z^(k+1))^n / (q^(k+1); q^(k+1))_n
    zero_inf,  // (0,inf): H = sum q^(n^2-n) (-z)^n / (q;q)_n
};

std::vector<RationalQFunction> closed_form_H(ClosedFormKind kind, int k, int order);

// Area-weighted generating functions by fixed-point iteration of the
// q-deformed pair; coefficients are exact polynomials in (a, q) and
// coefficient n of R equals partition_polynomial(params, n, with_area).
SeriesInZ l_series_q(const ModelParams& params, int order);
SeriesInZ r_series_q(const ModelParams& params, int order);

// Rational-function route: R = (1 - a + a H(z;q)/H(qz;q))^{-1}. Coefficients
// are polynomials in a over rational functions of q, kept as num/den pairs.
struct QRatPoly {
    MultiPoly num;  // in (a, q)
    ZPoly den;      // in q, positive leading coefficient

    bool operator==(const QRatPoly& o) const;
    // true iff this equals the polynomial p exactly
    bool equals_poly(const MultiPoly& p) const;
};

std::vector<QRatPoly> r_series_q_hratio(const ModelParams& params, int order);

// L reconstructed as H(qz)/H(z); each coefficient must reduce to the exact
// area polynomial (denominator 1).
std::vector<RationalQFunction> l_series_q_hratio(const ModelParams& params, int order);

struct QIdentityReport {
    int order = 0;
    bool h_substitution = false;  // H^{(1,1)}(z,q) == H^{(0,inf)}(qz^2, q^2)
    bool euler = false;           // H^{(0,0)} matches the Euler q-series
    bool closed_forms = false;    // recurrence c-tables == closed forms, (k,k) k<=3 and (0,inf)
    bool r00 = false;             // R^{(0,0)}(z;a,q) == 1/(1-az)
    bool pass() const { return h_substitution && euler && closed_forms && r00; }
};

QIdentityReport identity_checks(int order);

}  // namespace luka
