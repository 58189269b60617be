#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "luka/errors.hpp"
#include "luka/multipoly.hpp"

namespace luka {

// Dense univariate polynomial over Z. coeff[i] is the coefficient of x^i;
// invariant: empty (zero polynomial) or nonzero leading coefficient.
class ZPoly {
  public:
    ZPoly() = default;
    explicit ZPoly(long c) { if (c != 0) c_.assign(1, mpz_class(c)); }
    explicit ZPoly(const mpz_class& c) { if (c != 0) c_.assign(1, c); }
    explicit ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ZPoly monomial(const mpz_class& c, int e);
    static ZPoly from_multipoly(const MultiPoly& p, Var v);
    MultiPoly to_multipoly(Var v) const;

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const { return c_.back(); }

    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator-() const;
    ZPoly operator*(const mpz_class& s) const;
    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    ZPoly derivative() const;
    mpq_class eval(const mpq_class& x) const;
    mpz_class eval(const mpz_class& x) const;

    mpz_class content() const;   // >= 0
    ZPoly primitive_part() const;

    // Exact division; throws if the division is not exact over Z.
    ZPoly divide_exact(const ZPoly& d) const;

    // gcd over Z[x] via the primitive pseudo-remainder sequence (positive leading coeff).
    static ZPoly gcd(ZPoly f, ZPoly g);

    // p / gcd(p, p'): same roots, all simple.
    ZPoly squarefree_part() const;

    // Number of sign changes of the coefficient sequence (Descartes bound on
    // the number of positive real roots).
    int sign_changes() const;

    // Substitute x -> x^m (spreads coefficients).
    ZPoly compose_power(int m) const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
    std::vector<mpz_class> c_;
};

// Reduced ratio of integer polynomials in q. Invariants: gcd(num, den) is
// constant, the denominator is nonzero with positive leading coefficient.
class RationalQFunction {
  public:
    RationalQFunction() : num_(), den_(1) {}
    explicit RationalQFunction(long c) : num_(c), den_(1) {}
    RationalQFunction(ZPoly num, ZPoly den);

    static RationalQFunction monomial(int e) {
        return RationalQFunction(ZPoly::monomial(1, e), ZPoly(1));
    }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalQFunction operator+(const RationalQFunction& o) const;
    RationalQFunction operator-(const RationalQFunction& o) const;
    RationalQFunction operator*(const RationalQFunction& o) const;
    RationalQFunction operator/(const RationalQFunction& o) const;
    bool operator==(const RationalQFunction& o) const;

    // q -> q^m in both numerator and denominator.
    RationalQFunction compose_power(int m) const;

    std::string str() const;

  private:
    void reduce();
    ZPoly num_, den_;
};

}  // namespace luka
