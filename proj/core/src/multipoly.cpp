#include "luka/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace luka {

const char* var_name(Var v) {
    static constexpr const char* names[kNumVars] = {"z", "a", "q", "u", "L", "R"};
    return names[static_cast<int>(v)];
}

MultiPoly MultiPoly::variable(Var v, int exp) {
    MultiPoly p;
    if (exp < 0) throw DomainError("negative exponent");
    Exponents e{};
    e[static_cast<int>(v)] = exp;
    p.terms_[e] = 1;
    return p;
}

MultiPoly MultiPoly::monomial(const mpz_class& coeff, const Exponents& e) {
    MultiPoly p;
    if (coeff != 0) p.terms_[e] = coeff;
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

int MultiPoly::degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
}

std::vector<Var> MultiPoly::variables() const {
    std::vector<Var> out;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) { out.push_back(v); break; }
    }
    return out;
}

MultiPoly MultiPoly::coefficient_of(Var v, int k) const {
    MultiPoly out;
    const int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
        if (e[i] == k) {
            Exponents r = e;
            r[i] = 0;
            out.terms_[r] = c;
        }
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
    const int d = degree(v);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d, 0)) + 1);
    const int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
        Exponents r = e;
        r[i] = 0;
        out[static_cast<std::size_t>(e[i])].add_term(r, c);
    }
    return out;
}

void MultiPoly::add_term(const Exponents& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    r.add_mul(*this, o);
    return r;
}

void MultiPoly::add_mul(const MultiPoly& f, const MultiPoly& g) {
    mpz_class prod;
    for (const auto& [ef, cf] : f.terms_) {
        for (const auto& [eg, cg] : g.terms_) {
            Exponents e;
            for (int i = 0; i < kNumVars; ++i) e[i] = ef[i] + eg[i];
            prod = cf * cg;
            add_term(e, prod);
        }
    }
}

MultiPoly MultiPoly::operator*(const mpz_class& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw DomainError("negative exponent");
    MultiPoly r(1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly r;
    const int i = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, c * e[i]);
    }
    return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
    // Horner over the dense coefficient list in v.
    auto coeffs = coefficients_in(v);
    MultiPoly r;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        r = r * value;
        r += *it;
    }
    return r;
}

MultiPoly MultiPoly::substitute_rational(Var v, const mpq_class& value) const {
    const int d = degree(v);
    if (d <= 0) return *this;
    const mpz_class num = value.get_num();
    const mpz_class den = value.get_den();
    // sum_k coeff_k * num^k * den^(d-k)
    auto coeffs = coefficients_in(v);
    MultiPoly r;
    mpz_class np = 1;
    std::vector<mpz_class> numpow(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) { numpow[static_cast<std::size_t>(k)] = np; np *= num; }
    mpz_class dp = 1;
    for (int k = d; k >= 0; --k) {
        r += coeffs[static_cast<std::size_t>(k)] * (numpow[static_cast<std::size_t>(k)] * dp);
        dp *= den;
    }
    return r;
}

MultiPoly MultiPoly::rename(Var from, Var to) const {
    if (from == to) return *this;
    if (uses(to))
        throw VariableMismatch("rename target variable already present");
    MultiPoly r;
    const int i = static_cast<int>(from), j = static_cast<int>(to);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[j] = f[i];
        f[i] = 0;
        r.terms_[f] = c;
    }
    return r;
}

mpq_class MultiPoly::evaluate(const std::map<Var, mpq_class>& assignment) const {
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t(c);
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(static_cast<Var>(i));
            if (it == assignment.end())
                throw VariableMismatch(std::string("unassigned variable ") +
                                       var_name(static_cast<Var>(i)));
            mpq_class p = it->second;
            for (int k = 1; k < e[i]; ++k) p *= it->second;
            t *= p;
        }
        total += t;
    }
    return total;
}

mpz_class MultiPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

MultiPoly MultiPoly::primitive_normalized() const {
    if (is_zero()) throw ZeroPolynomial("primitive normalization of zero polynomial");
    mpz_class g = content();
    // sign fix: leading term = lexicographically highest exponent vector
    if (terms_.rbegin()->second < 0) g = -g;
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c / g;
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw ZeroPolynomial("division by zero polynomial");
    MultiPoly rem = *this;
    MultiPoly quot;
    const auto& dlead = *divisor.terms_.rbegin();
    mpz_class qc, r;
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exponents qe;
        for (int i = 0; i < kNumVars; ++i) {
            qe[i] = rlead.first[i] - dlead.first[i];
            if (qe[i] < 0) return std::nullopt;
        }
        mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rlead.second.get_mpz_t(),
                    dlead.second.get_mpz_t());
        if (r != 0) return std::nullopt;
        MultiPoly t = MultiPoly::monomial(qc, qe);
        quot += t;
        MultiPoly sub;
        sub.add_mul(t, divisor);
        rem -= sub;
    }
    return quot;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class abs = c < 0 ? mpz_class(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = e != Exponents{};
        if (abs != 1 || !any_var) os << abs.get_str();
        bool star = abs != 1;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << var_name(static_cast<Var>(i));
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

}  // namespace luka
