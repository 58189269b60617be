#include "luka/roots.hpp"

#include <algorithm>

namespace luka {

namespace {

int sign_at(const ZPoly& p, const mpq_class& x) {
    return sgn(p.eval(x));
}

RootEnclosure bisect_impl(const MultiPoly& poly, Var v, const ZPoly& p, mpq_class lo,
                          mpq_class hi, const mpq_class& tol) {
    int slo = sign_at(p, lo);
    int shi = sign_at(p, hi);
    if (slo == 0) return {poly, v, lo, lo, true};
    if (shi == 0) return {poly, v, hi, hi, true};
    if (slo == shi) throw Error("bisection bracket has no sign change");
    while (hi - lo > tol) {
        mpq_class mid = (lo + hi) / 2;
        const int sm = sign_at(p, mid);
        if (sm == 0) return {poly, v, mid, mid, true};
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return {poly, v, lo, hi, false};
}

}  // namespace

int descartes_sign_changes(const MultiPoly& p, Var v) {
    return ZPoly::from_multipoly(p, v).sign_changes();
}

RootEnclosure isolate_positive_root(const MultiPoly& p, Var v, const mpq_class& tol,
                                    bool certify_unique) {
    ZPoly zp = ZPoly::from_multipoly(p, v);
    if (zp.is_zero()) throw ZeroPolynomial("root isolation on zero polynomial");
    // Strip the x^m factor; it contributes no positive root.
    std::vector<mpz_class> c = zp.coeffs();
    std::size_t shift = 0;
    while (shift < c.size() && c[shift] == 0) ++shift;
    if (shift) c.erase(c.begin(), c.begin() + static_cast<long>(shift));
    ZPoly f{std::move(c)};
    if (f.degree() == 0) throw NoPositiveRoot("constant polynomial");

    const int changes = f.sign_changes();
    if (changes == 0) throw NoPositiveRoot("no sign change in coefficient sequence");
    if (certify_unique && changes > 1)
        throw MultipleSignChanges("cannot certify a unique positive root");

    // Cauchy bound: 1 + max |c_i| / |lead|
    mpq_class maxratio = 0;
    for (int i = 0; i < f.degree(); ++i) {
        mpq_class r(abs(f[static_cast<std::size_t>(i)]), abs(f.leading()));
        r.canonicalize();
        maxratio = std::max(maxratio, r);
    }
    mpq_class bound = 1 + maxratio;

    mpq_class lo = 0;
    if (sign_at(f, lo) == 0) throw Error("unexpected zero constant term");
    if (sign_at(f, bound) == 0) return {p, v, bound, bound, true};
    if (sign_at(f, lo) == sign_at(f, bound)) {
        // Even number of roots in (0, B); refine a grid until a bracket shows up.
        for (int depth = 1; depth <= 20; ++depth) {
            const long cells = 1L << depth;
            mpq_class prev = 0;
            int sprev = sign_at(f, prev);
            for (long i = 1; i <= cells; ++i) {
                mpq_class x = bound * i / cells;
                const int sx = sign_at(f, x);
                if (sx == 0) return {p, v, x, x, true};
                if (sx != sprev) return bisect_impl(p, v, f, prev, x, tol);
                prev = x;
                sprev = sx;
            }
        }
        throw NoPositiveRoot("no sign change found on (0, bound]");
    }
    return bisect_impl(p, v, f, lo, bound, tol);
}

RootEnclosure bisect_root(const MultiPoly& p, Var v, mpq_class lo, mpq_class hi,
                          const mpq_class& tol) {
    return bisect_impl(p, v, ZPoly::from_multipoly(p, v), std::move(lo), std::move(hi), tol);
}

void refine(RootEnclosure& enc, const mpq_class& tol) {
    if (enc.exact || enc.width() <= tol) return;
    enc = bisect_impl(enc.poly, enc.var, ZPoly::from_multipoly(enc.poly, enc.var), enc.lo,
                      enc.hi, tol);
}

}  // namespace luka
