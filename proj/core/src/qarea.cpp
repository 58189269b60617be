#include "luka/qarea.hpp"

namespace luka {

namespace {

long binom2(long m) { return m * (m - 1) / 2; }

RationalQFunction q_monomial(long e) {
    return RationalQFunction(ZPoly::monomial(1, static_cast<int>(e)), ZPoly(1));
}

}  // namespace

std::vector<RationalQFunction> c_table(const ModelParams& params, int order) {
    if (order < 0) throw DomainError("negative order");
    std::vector<RationalQFunction> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    c.emplace_back(1);
    for (int n = 1; n <= order; ++n) {
        const int top = params.ell ? std::min(*params.ell, n - 1) : n - 1;
        RationalQFunction s(0);
        for (int j = params.k; j <= top; ++j) {
            const long e = binom2(j + 1) + static_cast<long>(j + 1) * (n - j - 1);
            s = s + q_monomial(e) * c[static_cast<std::size_t>(n - j - 1)];
        }
        // divide by q^n - 1
        ZPoly qn1 = ZPoly::monomial(1, n) - ZPoly(1);
        c.push_back(s / RationalQFunction(qn1, ZPoly(1)));
    }
    return c;
}

bool h_satisfies_qdifference(const ModelParams& params, int order) {
    const auto c = c_table(params, order);
    for (int n = 0; n <= order; ++n) {
        // lhs: q^n c_n ; rhs: c_n + sum_j q^(C(j+1,2) + (j+1)(n-j-1)) c_{n-j-1}
        RationalQFunction lhs = q_monomial(n) * c[static_cast<std::size_t>(n)];
        RationalQFunction rhs = c[static_cast<std::size_t>(n)];
        const int top = params.ell ? std::min(*params.ell, n - 1) : n - 1;
        for (int j = params.k; j <= top; ++j) {
            const long e = binom2(j + 1) + static_cast<long>(j + 1) * (n - j - 1);
            rhs = rhs + q_monomial(e) * c[static_cast<std::size_t>(n - j - 1)];
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

ZPoly q_pochhammer(int s, int b, int n) {
    ZPoly p(1);
    for (int j = 0; j < n; ++j)
        p = p * (ZPoly(1) - ZPoly::monomial(1, s + b * j));
    return p;
}

std::vector<RationalQFunction> closed_form_H(ClosedFormKind kind, int k, int order) {
    std::vector<RationalQFunction> out(static_cast<std::size_t>(order) + 1,
                                       RationalQFunction(0));
    if (kind == ClosedFormKind::diagonal) {
        const int step = k + 1;
        for (int t = 0; step * t <= order; ++t) {
            ZPoly num = ZPoly::monomial(t % 2 == 0 ? 1 : -1,
                                        static_cast<int>(binom2(static_cast<long>(step) * t)));
            out[static_cast<std::size_t>(step * t)] =
                RationalQFunction(num, q_pochhammer(step, step, t));
        }
    } else {
        for (int n = 0; n <= order; ++n) {
            ZPoly num = ZPoly::monomial(n % 2 == 0 ? 1 : -1, n * n - n);
            out[static_cast<std::size_t>(n)] = RationalQFunction(num, q_pochhammer(1, 1, n));
        }
    }
    return out;
}

namespace {

// z q^i L(q^i z): coefficient n is q^(i*n) L[n-1].
SeriesInZ level_factor(const SeriesInZ& L, int i) {
    return series_shift_scale(series_qshift(L, i), 1, MultiPoly::variable(Var::q, i));
}

}  // namespace

SeriesInZ l_series_q(const ModelParams& params, int order) {
    if (order < 0) throw DomainError("negative order");
    SeriesInZ L = SeriesInZ::one(order);
    // products with more than order factors vanish under truncation
    const int top = params.ell ? std::min(*params.ell, order) : order;
    for (int it = 0; it <= order; ++it) {
        SeriesInZ next = SeriesInZ::one(order);
        if (top >= params.k) {
            SeriesInZ term = level_factor(L, 0);  // running product over i = 0..j
            for (int j = 0; j <= top; ++j) {
                if (j > 0) term = series_mul(term, level_factor(L, j));
                if (j >= params.k) next = series_add(next, term);
            }
        }
        L = next;
    }
    return L;
}

SeriesInZ r_series_q(const ModelParams& params, int order) {
    if (order < 0) throw DomainError("negative order");
    const SeriesInZ L = l_series_q(params, order);
    const int top = params.ell ? std::min(*params.ell, order) : order;
    // S = sum_{j=k}^{top} prod_{i=1}^{j} (z q^i L(q^i z)); the empty product is 1.
    SeriesInZ S;
    S.order = order;
    S.c.assign(static_cast<std::size_t>(order) + 1, MultiPoly());
    SeriesInZ term = SeriesInZ::one(order);
    for (int j = 0; j <= top; ++j) {
        if (j > 0) term = series_mul(term, level_factor(L, j));
        if (j >= params.k) S = series_add(S, term);
    }
    const SeriesInZ azS = series_shift_scale(S, 1, MultiPoly::variable(Var::a));
    SeriesInZ R = SeriesInZ::one(order);
    for (int it = 0; it <= order; ++it)
        R = series_add(SeriesInZ::one(order), series_mul(azS, R));
    return R;
}

bool QRatPoly::operator==(const QRatPoly& o) const {
    return num * o.den.to_multipoly(Var::q) == o.num * den.to_multipoly(Var::q);
}

bool QRatPoly::equals_poly(const MultiPoly& p) const {
    return num == p * den.to_multipoly(Var::q);
}

namespace {

QRatPoly qr_from(const RationalQFunction& r) {
    return {r.num().to_multipoly(Var::q), r.den()};
}

// light normalization: cancel the gcd of the denominator with the q-content
// of the numerator, plus any common integer content
void qr_reduce(QRatPoly& x) {
    if (x.num.is_zero()) {
        x.den = ZPoly(1);
        return;
    }
    ZPoly g = x.den;
    const int adeg = x.num.degree(Var::a);
    for (int i = 0; i <= adeg && (g.degree() > 0 || g.content() > 1); ++i) {
        MultiPoly ci = x.num.coefficient_of(Var::a, i);
        if (ci.is_zero()) continue;
        g = ZPoly::gcd(g, ZPoly::from_multipoly(ci, Var::q));
    }
    if (g.degree() > 0 || (g.degree() == 0 && g.leading() > 1)) {
        auto q = x.num.divide_exact(g.to_multipoly(Var::q));
        if (q) {
            x.num = *q;
            x.den = x.den.divide_exact(g);
        }
    }
    if (x.den.leading() < 0) {
        x.num = -x.num;
        x.den = -x.den;
    }
}

QRatPoly qr_add(const QRatPoly& x, const QRatPoly& y) {
    QRatPoly r{x.num * y.den.to_multipoly(Var::q) + y.num * x.den.to_multipoly(Var::q),
               x.den * y.den};
    qr_reduce(r);
    return r;
}

QRatPoly qr_mul(const QRatPoly& x, const QRatPoly& y) {
    QRatPoly r{x.num * y.num, x.den * y.den};
    qr_reduce(r);
    return r;
}

}  // namespace

std::vector<QRatPoly> r_series_q_hratio(const ModelParams& params, int order) {
    const auto c = c_table(params, order);
    // S = H(z)/H(qz), both with constant term 1
    std::vector<RationalQFunction> S(static_cast<std::size_t>(order) + 1);
    S[0] = RationalQFunction(1);
    for (int n = 1; n <= order; ++n) {
        RationalQFunction s = c[static_cast<std::size_t>(n)];
        for (int i = 0; i < n; ++i)
            s = s - S[static_cast<std::size_t>(i)] * (q_monomial(n - i) *
                                                      c[static_cast<std::size_t>(n - i)]);
        S[static_cast<std::size_t>(n)] = s;
    }
    // T = 1 - a + a S(z); T_0 = 1 since S_0 = 1
    const MultiPoly a = MultiPoly::variable(Var::a);
    std::vector<QRatPoly> T(static_cast<std::size_t>(order) + 1);
    T[0] = QRatPoly{MultiPoly(1), ZPoly(1)};
    for (int n = 1; n <= order; ++n) {
        QRatPoly t = qr_from(S[static_cast<std::size_t>(n)]);
        t.num = t.num * a;
        T[static_cast<std::size_t>(n)] = t;
    }
    // R = 1/T
    std::vector<QRatPoly> R(static_cast<std::size_t>(order) + 1);
    R[0] = QRatPoly{MultiPoly(1), ZPoly(1)};
    for (int n = 1; n <= order; ++n) {
        QRatPoly s{MultiPoly(), ZPoly(1)};
        for (int i = 1; i <= n; ++i)
            s = qr_add(s, qr_mul(T[static_cast<std::size_t>(i)],
                                 R[static_cast<std::size_t>(n - i)]));
        s.num = -s.num;
        R[static_cast<std::size_t>(n)] = s;
    }
    return R;
}

std::vector<RationalQFunction> l_series_q_hratio(const ModelParams& params, int order) {
    const auto c = c_table(params, order);
    // L = H(qz)/H(z)
    std::vector<RationalQFunction> L(static_cast<std::size_t>(order) + 1);
    L[0] = RationalQFunction(1);
    for (int n = 1; n <= order; ++n) {
        RationalQFunction s = q_monomial(n) * c[static_cast<std::size_t>(n)];
        for (int i = 0; i < n; ++i)
            s = s - L[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - i)];
        L[static_cast<std::size_t>(n)] = s;
    }
    return L;
}

QIdentityReport identity_checks(int order) {
    QIdentityReport rep;
    rep.order = order;

    // (i) H^{(1,1)}(z,q) == H^{(0,inf)}(qz^2, q^2), coefficient-wise:
    // even n: c_n^{(1,1)}(q) = q^(n/2) c_{n/2}^{(0,inf)}(q^2); odd n: 0.
    {
        const auto c11 = c_table(ModelParams::finite(1, 1), order);
        const auto c0i = c_table(ModelParams::unbounded(0), order);
        rep.h_substitution = true;
        for (int n = 0; n <= order; ++n) {
            RationalQFunction want(0);
            if (n % 2 == 0)
                want = q_monomial(n / 2) *
                       c0i[static_cast<std::size_t>(n / 2)].compose_power(2);
            if (!(c11[static_cast<std::size_t>(n)] == want)) {
                rep.h_substitution = false;
                break;
            }
        }
    }

    // (ii) H^{(0,0)} equals the Euler q-series (z;q)_inf term-wise.
    {
        const auto c00 = c_table(ModelParams::finite(0, 0), order);
        const auto euler = closed_form_H(ClosedFormKind::diagonal, 0, order);
        rep.euler = std::equal(c00.begin(), c00.end(), euler.begin());
    }

    // (iii) recurrence c-tables equal the closed forms for (k,k), k <= 3, and (0,inf).
    {
        rep.closed_forms = true;
        for (int k = 0; k <= 3 && rep.closed_forms; ++k) {
            const auto rec = c_table(ModelParams::finite(k, k), order);
            const auto closed = closed_form_H(ClosedFormKind::diagonal, k, order);
            rep.closed_forms = std::equal(rec.begin(), rec.end(), closed.begin());
        }
        if (rep.closed_forms) {
            const auto rec = c_table(ModelParams::unbounded(0), order);
            const auto closed = closed_form_H(ClosedFormKind::zero_inf, 0, order);
            rep.closed_forms = std::equal(rec.begin(), rec.end(), closed.begin());
        }
    }

    // (iv) R^{(0,0)}(z;a,q) == 1/(1-az): coefficient n is a^n.
    {
        const auto R = r_series_q_hratio(ModelParams::finite(0, 0), order);
        rep.r00 = true;
        for (int n = 0; n <= order; ++n) {
            if (!R[static_cast<std::size_t>(n)].equals_poly(
                    MultiPoly::variable(Var::a, n))) {
                rep.r00 = false;
                break;
            }
        }
    }
    return rep;
}

}  // namespace luka
