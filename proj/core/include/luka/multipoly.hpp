#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "luka/errors.hpp"

namespace luka {

// The fixed variable universe used throughout: generating variables z (length),
// a (contacts), q (area), u (the kernel variable), and the two generating
// functions L, R treated as algebraic indeterminates.
enum class Var : int { z = 0, a = 1, q = 2, u = 3, L = 4, R = 5 };

inline constexpr int kNumVars = 6;

const char* var_name(Var v);

using Exponents = std::array<int, kNumVars>;

// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
// Invariant: no stored zero coefficients.
class MultiPoly {
  public:
    using TermMap = std::map<Exponents, mpz_class>;

    MultiPoly() = default;
    explicit MultiPoly(long c) { if (c != 0) terms_[Exponents{}] = c; }
    explicit MultiPoly(const mpz_class& c) { if (c != 0) terms_[Exponents{}] = c; }

    static MultiPoly variable(Var v, int exp = 1);
    static MultiPoly monomial(const mpz_class& coeff, const Exponents& e);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Degree in one variable; -1 for the zero polynomial.
    int degree(Var v) const;
    bool uses(Var v) const { return degree(v) > 0; }
    std::vector<Var> variables() const;

    // Coefficient of v^e, a polynomial in the remaining variables.
    MultiPoly coefficient_of(Var v, int e) const;
    MultiPoly leading_coefficient(Var v) const { return coefficient_of(v, degree(v)); }
    // Dense coefficient list [c_0, ..., c_deg] of this viewed as a polynomial in v.
    std::vector<MultiPoly> coefficients_in(Var v) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const { MultiPoly r = *this; return r += o; }
    MultiPoly operator-(const MultiPoly& o) const { MultiPoly r = *this; return r -= o; }
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly operator*(const mpz_class& c) const;
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    // this += f * g, without materialising the intermediate product.
    void add_mul(const MultiPoly& f, const MultiPoly& g);

    MultiPoly pow(int e) const;
    MultiPoly derivative(Var v) const;

    // Substitute an entire polynomial for a variable.
    MultiPoly substitute(Var v, const MultiPoly& value) const;
    // Substitute a rational value for v; the result is scaled by the positive
    // denominator power den^deg(v), so the zero set and signs are preserved.
    MultiPoly substitute_rational(Var v, const mpq_class& value) const;
    // Rename a variable (the target must not occur).
    MultiPoly rename(Var from, Var to) const;

    // Exact evaluation; every variable present must be assigned.
    mpq_class evaluate(const std::map<Var, mpq_class>& assignment) const;

    // Integer content (gcd of coefficients, positive), 0 for the zero polynomial.
    mpz_class content() const;
    // Divide by content and fix the sign of the lexicographically highest term.
    MultiPoly primitive_normalized() const;

    // Exact division: returns the quotient iff divisor * quotient == *this.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    // Canonical rendering: terms in descending exponent order, explicit signs.
    std::string str() const;

  private:
    void add_term(const Exponents& e, const mpz_class& c);
    TermMap terms_;
};

inline MultiPoly operator*(const mpz_class& c, const MultiPoly& p) { return p * c; }

}  // namespace luka
