#include "luka/resultant.hpp"

#include <set>
#include <vector>

namespace luka {

namespace {

// Fraction-free Bareiss elimination for integer matrices.
mpz_class det_bareiss_int(std::vector<std::vector<mpz_class>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (m[r][r] == 0) {
            std::size_t p = r + 1;
            while (p < n && m[p][r] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[r], m[p]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[r][r] - m[i][r] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][r] = 0;
        }
        prev = m[r][r];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

// Bareiss over polynomial entries; exact divisions by the previous pivot.
MultiPoly det_bareiss_poly(std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly(1);
    int sign = 1;
    MultiPoly prev(1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (m[r][r].is_zero()) {
            std::size_t p = r + 1;
            while (p < n && m[p][r].is_zero()) ++p;
            if (p == n) return MultiPoly();
            std::swap(m[r], m[p]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j) {
                MultiPoly t = m[i][j] * m[r][r] - m[i][r] * m[r][j];
                auto q = t.divide_exact(prev);
                if (!q) throw Error("Bareiss division failure");
                m[i][j] = std::move(*q);
            }
            m[i][r] = MultiPoly();
        }
        prev = m[r][r];
    }
    MultiPoly d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

// Collect the variables appearing anywhere in the matrix.
std::vector<Var> matrix_vars(const std::vector<std::vector<MultiPoly>>& m) {
    std::set<int> seen;
    for (const auto& row : m)
        for (const auto& e : row)
            for (Var v : e.variables()) seen.insert(static_cast<int>(v));
    std::vector<Var> out;
    for (int i : seen) out.push_back(static_cast<Var>(i));
    return out;
}

// Newton interpolation through (nodes[i], values[i]); returns standard-form
// coefficients. Values and nodes are exact rationals.
std::vector<mpq_class> newton_interpolate(const std::vector<mpq_class>& nodes,
                                          std::vector<mpq_class> values) {
    const std::size_t n = nodes.size();
    // divided differences in place
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            values[i] = (values[i] - values[i - 1]) / (nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    // expand the Newton basis
    std::vector<mpq_class> coeff(n, mpq_class(0));
    std::vector<mpq_class> basis(n, mpq_class(0));
    basis[0] = 1;
    std::size_t basis_deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= basis_deg; ++j) coeff[j] += values[i] * basis[j];
        if (i + 1 < n) {
            // basis *= (x - nodes[i])
            ++basis_deg;
            for (std::size_t j = basis_deg; j > 0; --j)
                basis[j] = basis[j - 1] - nodes[i] * basis[j];
            basis[0] = -nodes[i] * basis[0];
        }
    }
    return coeff;
}

}  // namespace

MultiPoly det_multipoly(std::vector<std::vector<MultiPoly>> m) {
    auto vars = matrix_vars(m);
    if (vars.empty()) {
        std::vector<std::vector<mpz_class>> mi(m.size(), std::vector<mpz_class>(m.size()));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j)
                if (!m[i][j].is_zero()) mi[i][j] = m[i][j].terms().begin()->second;
        return MultiPoly(det_bareiss_int(mi));
    }
    if (vars.size() == 1 && m.size() <= 12) return det_bareiss_poly(m);

    // Evaluate the last variable at integer nodes and interpolate the result.
    const Var v = vars.back();
    int deg_bound = 0;
    for (const auto& row : m) {
        int rowmax = 0;
        for (const auto& e : row) rowmax = std::max(rowmax, std::max(e.degree(v), 0));
        deg_bound += rowmax;
    }
    const int npoints = deg_bound + 1;
    std::vector<mpq_class> nodes;
    std::vector<MultiPoly> dets;
    nodes.reserve(static_cast<std::size_t>(npoints));
    for (int t = 0; t < npoints; ++t) {
        // nodes 0, 1, -1, 2, -2, ...
        const long node = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
        nodes.emplace_back(node);
        std::vector<std::vector<MultiPoly>> me(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            me[i].reserve(m.size());
            for (const auto& e : m[i])
                me[i].push_back(e.substitute(v, MultiPoly(node)));
        }
        dets.push_back(det_multipoly(std::move(me)));
    }
    // Interpolate per monomial of the remaining variables.
    std::set<Exponents> monos;
    for (const auto& d : dets)
        for (const auto& [e, c] : d.terms()) monos.insert(e);
    MultiPoly result;
    for (const auto& e : monos) {
        std::vector<mpq_class> vals;
        vals.reserve(dets.size());
        for (const auto& d : dets) {
            auto it = d.terms().find(e);
            vals.emplace_back(it == d.terms().end() ? mpz_class(0) : it->second);
        }
        auto poly = newton_interpolate(nodes, std::move(vals));
        for (std::size_t p = 0; p < poly.size(); ++p) {
            if (poly[p] == 0) continue;
            if (poly[p].get_den() != 1) throw Error("interpolated determinant not integral");
            Exponents f = e;
            f[static_cast<int>(v)] = static_cast<int>(p);
            result += MultiPoly::monomial(poly[p].get_num(), f);
        }
    }
    return result;
}

MultiPoly sylvester_resultant(const MultiPoly& P, const MultiPoly& Q, Var x) {
    if (P.is_zero() || Q.is_zero()) throw ZeroPolynomial("resultant of zero polynomial");
    const int m = P.degree(x), n = Q.degree(x);
    if (m == 0 && n == 0) return MultiPoly(1);
    if (m == 0) return P.pow(n);
    if (n == 0) return Q.pow(m);
    auto pc = P.coefficients_in(x);
    auto qc = Q.coefficients_in(x);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j)
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
                pc[static_cast<std::size_t>(m - j)];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] =
                qc[static_cast<std::size_t>(n - j)];
    return det_multipoly(std::move(s));
}

MultiPoly discriminant(const MultiPoly& P, Var x) {
    if (P.is_zero()) throw ZeroPolynomial("discriminant of zero polynomial");
    if (P.degree(x) < 1) throw ZeroPolynomial("discriminant requires positive degree");
    if (P.degree(x) == 1) return MultiPoly(1);  // degree-1 convention
    return sylvester_resultant(P, P.derivative(x), x);
}

MultiPoly discriminant_monic(const MultiPoly& P, Var x) {
    MultiPoly raw = discriminant(P, x);
    if (P.degree(x) == 1) return raw;
    auto q = raw.divide_exact(P.leading_coefficient(x));
    if (!q) throw Error("discriminant not divisible by leading coefficient");
    return *q;
}

MultiPoly mobius_substitute(const MultiPoly& P, Var x, const MobiusMap& map) {
    if (P.is_zero()) throw ZeroPolynomial("Mobius substitution into zero polynomial");
    for (const MultiPoly* c : {&map.alpha, &map.beta, &map.gamma, &map.delta})
        if (c->uses(x)) throw VariableMismatch("Mobius coefficients must not involve the map variable");
    if (map.determinant().is_zero()) throw DegenerateMap("alpha*delta - beta*gamma vanishes");
    const int n = P.degree(x);
    auto coeffs = P.coefficients_in(x);
    const MultiPoly xv = MultiPoly::variable(x);
    const MultiPoly num = map.alpha * xv + map.beta;
    const MultiPoly den = map.gamma * xv + map.delta;
    // sum_k c_k num^k den^(n-k), via running powers
    std::vector<MultiPoly> numpow(static_cast<std::size_t>(n) + 1);
    numpow[0] = MultiPoly(1);
    for (int k = 1; k <= n; ++k)
        numpow[static_cast<std::size_t>(k)] = numpow[static_cast<std::size_t>(k - 1)] * num;
    MultiPoly result;
    MultiPoly dp(1);
    for (int k = n; k >= 0; --k) {
        result.add_mul(coeffs[static_cast<std::size_t>(k)] * numpow[static_cast<std::size_t>(k)], dp);
        if (k > 0) dp *= den;
    }
    return result;
}

}  // namespace luka
