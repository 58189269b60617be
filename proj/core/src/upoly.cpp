#include "luka/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace luka {

ZPoly ZPoly::monomial(const mpz_class& c, int e) {
    ZPoly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(e) + 1, mpz_class(0));
    p.c_.back() = c;
    return p;
}

ZPoly ZPoly::from_multipoly(const MultiPoly& p, Var v) {
    for (Var w : p.variables())
        if (w != v) throw VariableMismatch("polynomial is not univariate in the requested variable");
    ZPoly out;
    out.c_.assign(static_cast<std::size_t>(std::max(p.degree(v), 0)) + 1, mpz_class(0));
    const int i = static_cast<int>(v);
    for (const auto& [e, c] : p.terms()) out.c_[static_cast<std::size_t>(e[i])] = c;
    out.trim();
    return out;
}

MultiPoly ZPoly::to_multipoly(Var v) const {
    MultiPoly out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Exponents e{};
        e[static_cast<int>(v)] = static_cast<int>(i);
        out += MultiPoly::monomial(c_[i], e);
    }
    return out;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    ZPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

ZPoly ZPoly::operator*(const mpz_class& s) const {
    ZPoly r;
    if (s == 0) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x *= s;
    return r;
}

ZPoly ZPoly::derivative() const {
    ZPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
    r.trim();
    return r;
}

mpq_class ZPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + mpq_class(*it);
    return r;
}

mpz_class ZPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (leading() < 0) g = -g;
    ZPoly r = *this;
    for (auto& x : r.c_) x /= g;
    return r;
}

ZPoly ZPoly::divide_exact(const ZPoly& d) const {
    if (d.is_zero()) throw ZeroPolynomial("division by zero polynomial");
    ZPoly rem = *this;
    if (rem.is_zero()) return rem;
    if (rem.degree() < d.degree()) throw Error("inexact polynomial division");
    ZPoly quot;
    quot.c_.assign(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, mpz_class(0));
    mpz_class qc, r;
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.leading().get_mpz_t(),
                    d.leading().get_mpz_t());
        if (r != 0) throw Error("inexact polynomial division");
        const int shift = rem.degree() - d.degree();
        quot.c_[static_cast<std::size_t>(shift)] = qc;
        for (std::size_t i = 0; i < d.c_.size(); ++i)
            rem.c_[i + static_cast<std::size_t>(shift)] -= qc * d.c_[i];
        rem.trim();
    }
    if (!rem.is_zero()) throw Error("inexact polynomial division");
    quot.trim();
    return quot;
}

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
static ZPoly pseudo_rem(ZPoly f, const ZPoly& g) {
    const int dg = g.degree();
    while (!f.is_zero() && f.degree() >= dg) {
        const int shift = f.degree() - dg;
        const mpz_class flead = f.leading();
        std::vector<mpz_class> c(f.coeffs());
        for (auto& x : c) x *= g.leading();
        for (int i = 0; i <= dg; ++i)
            c[static_cast<std::size_t>(i + shift)] -= flead * g[static_cast<std::size_t>(i)];
        f = ZPoly(std::move(c));
    }
    return f;
}

ZPoly ZPoly::gcd(ZPoly f, ZPoly g) {
    if (f.is_zero()) return g.primitive_part() * g.content();  // normalize sign
    if (g.is_zero()) return f.primitive_part() * f.content();
    mpz_class cf = f.content(), cg = g.content(), cc;
    mpz_gcd(cc.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    f = f.primitive_part();
    g = g.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        ZPoly r = pseudo_rem(f, g).primitive_part();
        f = g;
        g = r;
    }
    ZPoly result = f * cc;
    if (result.leading() < 0) result = -result;
    return result;
}

ZPoly ZPoly::squarefree_part() const {
    if (is_zero()) throw ZeroPolynomial("squarefree part of zero polynomial");
    if (degree() == 0) return ZPoly(1);
    ZPoly g = gcd(*this, derivative());
    return divide_exact(g).primitive_part();
}

int ZPoly::sign_changes() const {
    int changes = 0, last = 0;
    for (const auto& x : c_) {
        const int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

ZPoly ZPoly::compose_power(int m) const {
    if (m <= 0) throw DomainError("compose_power requires m >= 1");
    if (is_zero() || m == 1) return *this;
    std::vector<mpz_class> c(static_cast<std::size_t>(degree() * m) + 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * static_cast<std::size_t>(m)] = c_[i];
    return ZPoly(std::move(c));
}

std::string ZPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        mpz_class abs = c < 0 ? mpz_class(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs != 1 || i == 0) os << abs.get_str();
        if (i > 0) {
            if (abs != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RationalQFunction::RationalQFunction(ZPoly num, ZPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroPolynomial("zero denominator");
    reduce();
}

void RationalQFunction::reduce() {
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    ZPoly g = ZPoly::gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalQFunction RationalQFunction::operator+(const RationalQFunction& o) const {
    return RationalQFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalQFunction RationalQFunction::operator-(const RationalQFunction& o) const {
    return RationalQFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalQFunction RationalQFunction::operator*(const RationalQFunction& o) const {
    return RationalQFunction(num_ * o.num_, den_ * o.den_);
}

RationalQFunction RationalQFunction::operator/(const RationalQFunction& o) const {
    if (o.num_.is_zero()) throw ZeroPolynomial("division by zero rational function");
    return RationalQFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalQFunction::operator==(const RationalQFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalQFunction RationalQFunction::compose_power(int m) const {
    return RationalQFunction(num_.compose_power(m), den_.compose_power(m));
}

std::string RationalQFunction::str() const {
    if (num_.is_zero()) return "0";
    if (den_.degree() == 0 && den_.leading() == 1) return num_.str("q");
    return "(" + num_.str("q") + ") / (" + den_.str("q") + ")";
}

}  // namespace luka
