#include "doctest.h"
#include "luka/roots.hpp"

using namespace luka;

namespace {
const MultiPoly U = MultiPoly::variable(Var::u);
const mpq_class tol = mpq_class(1) / mpz_class("1000000000000");  // 1e-12
}  // namespace

TEST_CASE("exact root detection") {
    RootEnclosure r = isolate_positive_root(U * U - MultiPoly(1), Var::u, tol);
    CHECK(r.exact);
    CHECK(r.lo == 1);
}

TEST_CASE("bisection to 1e-12: 2u^3 + u^2 - 1") {
    MultiPoly p = MultiPoly(2) * U.pow(3) + U * U - MultiPoly(1);
    RootEnclosure r = isolate_positive_root(p, Var::u, tol);
    CHECK(r.width() <= tol);
    CHECK(r.lo > mpq_class(65, 100));
    CHECK(r.hi < mpq_class(66, 100));
    // the enclosure brackets a genuine sign change of the exact polynomial
    ZPoly zp = ZPoly::from_multipoly(p, Var::u);
    CHECK(sgn(zp.eval(r.lo)) * sgn(zp.eval(r.hi)) < 0);
}

TEST_CASE("failure modes") {
    CHECK_THROWS_AS(isolate_positive_root(U * U + MultiPoly(1), Var::u, tol),
                    NoPositiveRoot);
    // (u-1)(u-2): two sign changes, uniqueness cannot be certified
    MultiPoly two_roots = U * U - MultiPoly(3) * U + MultiPoly(2);
    CHECK_THROWS_AS(isolate_positive_root(two_roots, Var::u, tol), MultipleSignChanges);
    // without certification a bracket is still found
    RootEnclosure r = isolate_positive_root(two_roots, Var::u, tol, false);
    ZPoly zp = ZPoly::from_multipoly(two_roots, Var::u);
    CHECK((r.exact || sgn(zp.eval(r.lo)) * sgn(zp.eval(r.hi)) < 0));
    CHECK_THROWS_AS(isolate_positive_root(MultiPoly(), Var::u, tol), ZeroPolynomial);
    CHECK_THROWS_AS(isolate_positive_root(U * U - MultiPoly::variable(Var::a), Var::u, tol),
                    VariableMismatch);
}

TEST_CASE("positive roots only: x^2(x - 3) style trailing powers") {
    MultiPoly p = U.pow(3) - MultiPoly(3) * U.pow(2);
    RootEnclosure r = isolate_positive_root(p, Var::u, tol);
    CHECK(r.contains(mpq_class(3)));
}

TEST_CASE("refine tightens an enclosure") {
    MultiPoly p = MultiPoly(2) * U.pow(3) + U * U - MultiPoly(1);
    RootEnclosure r = isolate_positive_root(p, Var::u, mpq_class(1, 4));
    mpq_class w0 = r.width();
    refine(r, tol);
    CHECK(r.width() <= tol);
    CHECK(r.width() < w0);
}

TEST_CASE("descartes counts") {
    CHECK(descartes_sign_changes(U * U - MultiPoly(1), Var::u) == 1);
    CHECK(descartes_sign_changes(U * U + MultiPoly(1), Var::u) == 0);
    CHECK(descartes_sign_changes(U * U - MultiPoly(3) * U + MultiPoly(2), Var::u) == 2);
}
