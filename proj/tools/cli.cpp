#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "luka/bijections.hpp"
#include "luka/genfun.hpp"
#include "luka/json_io.hpp"
#include "luka/paths.hpp"
#include "luka/phase.hpp"
#include "luka/qarea.hpp"

namespace luka::cli {

namespace {

using nlohmann::json;

struct Common {
    int k = 1;
    std::string l = "1";
    double tol = 1e-12;
    std::string out_path;
    std::string format = "text";

    ModelParams params() const {
        if (l == "inf" || l == "INF" || l == "infinity") return ModelParams::unbounded(k);
        return ModelParams::finite(k, std::stoi(l));
    }
    mpq_class tolerance() const {
        if (tol <= 0) throw DomainError("tol must be positive");
        return mpq_class(tol);
    }
};

void add_common(CLI::App* cmd, Common& c, bool with_tol = true) {
    cmd->add_option("--k", c.k, "lower jump bound k");
    cmd->add_option("--l", c.l, "upper jump bound l (integer or 'inf')");
    if (with_tol) cmd->add_option("--tol", c.tol, "enclosure tolerance");
    cmd->add_option("--out", c.out_path, "write output to a file instead of stdout");
    cmd->add_option("--format", c.format, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
}

// Buffered emission keeps byte-for-byte determinism regardless of how the
// computation was scheduled.
class Emitter {
  public:
    Emitter(const Common& c, std::ostream& fallback) : common_(c), fallback_(fallback) {}
    ~Emitter() {
        if (!common_.out_path.empty()) {
            std::ofstream f(common_.out_path);
            f << buf_.str();
        } else {
            fallback_ << buf_.str();
        }
    }
    std::ostream& stream() { return buf_; }

  private:
    const Common& common_;
    std::ostream& fallback_;
    std::ostringstream buf_;
};

std::string ell_str(const std::optional<int>& l) {
    return l ? std::to_string(*l) : std::string("inf");
}

int cmd_enumerate(const Common& c, int n, bool count_only, long long cap, std::ostream& os) {
    const ModelParams p = c.params();
    if (count_only) {
        os << count_paths(p, n, cap) << "\n";
        return 0;
    }
    auto paths = enumerate(p, n, cap);
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& path : paths) arr.push_back(path_to_json(path));
        os << arr.dump() << "\n";
    } else {
        for (const auto& path : paths) os << path_to_json(path).dump() << "\n";
    }
    return 0;
}

int cmd_series(const Common& c, int order, bool with_area, std::ostream& os) {
    const ModelParams p = c.params();
    std::vector<MultiPoly> coeffs;
    if (with_area) {
        SeriesInZ s = r_series_q(p, order);
        coeffs = s.c;
    } else {
        SeriesInZ s = series_R(p, order);
        coeffs = s.c;
    }
    if (c.format == "json") {
        json rows = json::array();
        for (int n = 0; n <= order; ++n)
            rows.push_back({{"n", n}, {"Z", weight_poly_to_json(coeffs[static_cast<std::size_t>(n)])}});
        os << rows.dump() << "\n";
    } else if (c.format == "csv") {
        os << "n,Z\n";
        for (int n = 0; n <= order; ++n)
            os << n << ",\"" << coeffs[static_cast<std::size_t>(n)].str() << "\"\n";
    } else {
        for (int n = 0; n <= order; ++n)
            os << "Z_" << n << " = " << coeffs[static_cast<std::size_t>(n)].str() << "\n";
    }
    return 0;
}

int cmd_critical(const Common& c, std::ostream& os) {
    const CriticalPoint cp = critical_point(c.params(), c.tolerance());
    if (c.format == "json") {
        os << critical_point_to_json(cp).dump() << "\n";
    } else if (c.format == "csv") {
        os << "k,l,u_c,z_c,a_c\n"
           << cp.params.k << "," << ell_str(cp.params.ell) << ","
           << format_numeric((cp.u_c.lo + cp.u_c.hi) / 2) << ","
           << format_numeric(cp.z_c.midpoint()) << ","
           << format_numeric(cp.a_c.midpoint()) << "\n";
    } else {
        auto line = [&](const char* name, const Interval& iv) {
            os << name << " = " << format_numeric(iv.midpoint());
            if (iv.exact) os << " (exact " << iv.lo.get_str() << ")";
            os << "\n";
        };
        Interval u{cp.u_c.lo, cp.u_c.hi, cp.u_c.exact};
        line("u_c", u);
        line("z_c", cp.z_c);
        line("a_c", cp.a_c);
        line("L_c", cp.L_c);
    }
    return 0;
}

int cmd_phase(const Common& c, double a_min, double a_max, int steps, std::ostream& os) {
    const PhaseCurve curve =
        phase_curve(c.params(), mpq_class(a_min), mpq_class(a_max), steps, c.tolerance());
    if (c.format == "json") {
        json rows = json::array();
        for (const auto& s : curve.samples)
            rows.push_back({{"a", format_numeric(s.a)},
                            {"z_c", format_numeric(s.z_c)},
                            {"kappa", format_numeric(s.kappa)}});
        os << json{{"a_c", format_numeric(curve.a_c.midpoint())}, {"curve", rows}}.dump()
           << "\n";
    } else {
        os << "a,z_c,kappa\n";
        for (const auto& s : curve.samples)
            os << format_numeric(s.a) << "," << format_numeric(s.z_c) << ","
               << format_numeric(s.kappa) << "\n";
    }
    return 0;
}

int cmd_ac_sweep(const Common& c, int l_from, int l_to, bool include_inf, std::ostream& os) {
    std::vector<std::optional<int>> ells;
    for (int l = std::max(l_from, std::max(1, c.k)); l <= l_to; ++l) ells.push_back(l);
    if (include_inf) ells.push_back(std::nullopt);
    const auto rows = ac_sweep(c.k, ells, c.tolerance());
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"ell", ell_str(r.ell)},
                           {"a_c", format_numeric(r.cp.a_c.midpoint())}});
        os << arr.dump() << "\n";
    } else {
        os << "ell,a_c\n";
        for (const auto& r : rows)
            os << ell_str(r.ell) << "," << format_numeric(r.cp.a_c.midpoint()) << "\n";
    }
    return 0;
}

int cmd_crit_poly(const Common& c, const std::string& route, std::ostream& os) {
    const ModelParams p = c.params();
    const MultiPoly crit =
        route == "gamma" ? crit_polynomial_gamma(p) : crit_polynomial(p);
    if (c.format == "json")
        os << poly_to_json(crit).dump() << "\n";
    else
        os << crit.str() << "\n";
    return 0;
}

int cmd_discriminant_check(const Common& c, std::ostream& os) {
    const auto rep = discriminant_factorization_check(c.params());
    if (c.format == "json") {
        os << json{{"expected_exponent", rep.expected_exponent},
                   {"ratio", poly_to_json(rep.ratio)},
                   {"constant", rep.constant.get_str()},
                   {"pass", rep.pass}}
                  .dump()
           << "\n";
    } else {
        os << "Delta P1 / Delta P2 = " << rep.constant.get_str() << " * " << rep.ratio.str()
           << "\n"
           << "expected a^" << rep.expected_exponent << ": " << (rep.pass ? "pass" : "FAIL")
           << "\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_bijection(const Common& c, const std::string& which, int n, long long cap,
                  std::ostream& os) {
    BijectionKind kind;
    ModelParams p = c.params();
    if (which == "rise") {
        kind = BijectionKind::rise;
    } else if (which == "motzkin") {
        kind = BijectionKind::motzkin;
        p = ModelParams::unbounded(1);
    } else if (which == "area") {
        kind = BijectionKind::area;
        p = ModelParams::unbounded(0);
    } else {
        throw DomainError("unknown bijection: " + which);
    }
    const BijectionReport rep = verify_bijection(kind, p, n, cap);
    if (c.format == "json")
        os << bijection_report_to_json(rep).dump() << "\n";
    else
        os << (rep.pass ? "pass" : "FAIL: " + rep.counterexample) << " (source "
           << rep.source_count << ", target " << rep.target_count << ")\n";
    return rep.pass ? 0 : 1;
}

int cmd_qseries(const Common& c, int order, const std::string& what, std::ostream& os) {
    const ModelParams p = c.params();
    if (what == "ctable" || what == "closed") {
        std::vector<RationalQFunction> table;
        if (what == "ctable") {
            table = c_table(p, order);
        } else {
            if (p.infinite_ell() && p.k == 0)
                table = closed_form_H(ClosedFormKind::zero_inf, 0, order);
            else if (!p.infinite_ell() && p.k == *p.ell)
                table = closed_form_H(ClosedFormKind::diagonal, p.k, order);
            else
                throw DomainError("closed forms exist for (k,k) and (0,inf) only");
        }
        if (c.format == "json") {
            json arr = json::array();
            for (int n = 0; n <= order; ++n)
                arr.push_back({{"n", n}, {"c", qfun_to_json(table[static_cast<std::size_t>(n)])}});
            os << arr.dump() << "\n";
        } else {
            for (int n = 0; n <= order; ++n)
                os << "c_" << n << " = " << table[static_cast<std::size_t>(n)].str() << "\n";
        }
        return 0;
    }
    if (what == "r-iter") return cmd_series(c, order, /*with_area=*/true, os);
    if (what == "r-hratio") {
        const auto R = r_series_q_hratio(p, order);
        for (int n = 0; n <= order; ++n) {
            const auto& r = R[static_cast<std::size_t>(n)];
            os << "R_" << n << " = (" << r.num.str() << ") / (" << r.den.str("q") << ")\n";
        }
        return 0;
    }
    throw DomainError("unknown qseries table: " + what);
}

int cmd_identity_check(const Common& c, int order, std::ostream& os) {
    const QIdentityReport rep = identity_checks(order);
    auto line = [&](const char* name, bool ok) {
        os << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    };
    if (c.format == "json") {
        os << json{{"order", rep.order},
                   {"h_substitution", rep.h_substitution},
                   {"euler", rep.euler},
                   {"closed_forms", rep.closed_forms},
                   {"r00", rep.r00},
                   {"pass", rep.pass()}}
                  .dump()
           << "\n";
    } else {
        line("H^(1,1)(z,q) == H^(0,inf)(qz^2,q^2)", rep.h_substitution);
        line("H^(0,0) matches the Euler q-series", rep.euler);
        line("c-tables match closed forms", rep.closed_forms);
        line("R^(0,0) == 1/(1-az)", rep.r00);
    }
    return rep.pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact machinery for (k,l)-restricted Lukasiewicz adsorption models"};
    app.require_subcommand(1);

    Common c;
    int n = 8, order = 10, steps = 20, l_from = 1, l_to = 8;
    long long cap = kDefaultPathCap;
    bool count_only = false, with_area = false, include_inf = false;
    double a_min = 1.0, a_max = 5.0;
    std::string which = "rise", what = "ctable", route = "z";

    auto* enumerate_cmd = app.add_subcommand("enumerate", "exhaustively list length-n paths");
    add_common(enumerate_cmd, c, false);
    enumerate_cmd->add_option("--n", n, "path length")->required();
    enumerate_cmd->add_flag("--count", count_only, "print only the path count");
    enumerate_cmd->add_option("--cap", cap, "enumeration cap");

    auto* series_cmd = app.add_subcommand("series", "partition-function table Z_0..Z_N");
    add_common(series_cmd, c, false);
    series_cmd->add_option("--n,--order", order, "truncation order");
    series_cmd->add_flag("--area", with_area, "track area (coefficient in a and q)");

    auto* critical_cmd = app.add_subcommand("critical", "critical point u_c, z_c, a_c");
    add_common(critical_cmd, c);

    auto* phase_cmd = app.add_subcommand("phase", "z_c(a) and kappa(a) over an a-grid");
    add_common(phase_cmd, c);
    phase_cmd->add_option("--a-min", a_min, "grid start");
    phase_cmd->add_option("--a-max", a_max, "grid end");
    phase_cmd->add_option("--steps", steps, "number of grid intervals");

    auto* sweep_cmd = app.add_subcommand("ac-sweep", "a_c for l = l-from..l-to at fixed k");
    add_common(sweep_cmd, c);
    sweep_cmd->add_option("--l-from", l_from, "first l");
    sweep_cmd->add_option("--l-to", l_to, "last l");
    sweep_cmd->add_flag("--include-inf", include_inf, "append the l = inf limit");

    auto* crit_cmd = app.add_subcommand("crit-poly", "critical polynomial crit_{k,l}(a)");
    add_common(crit_cmd, c, false);
    crit_cmd->add_option("--route", route, "elimination route: z (discriminant) or gamma")
        ->check(CLI::IsMember({"z", "gamma"}));

    auto* disc_cmd = app.add_subcommand("discriminant-check",
                                        "verify Delta P1 = const a^(l(l+1)) Delta P2");
    add_common(disc_cmd, c, false);

    auto* bij_cmd = app.add_subcommand("bijection", "exhaustively verify a bijection");
    add_common(bij_cmd, c, false);
    bij_cmd->add_option("--which", which, "rise, motzkin or area")
        ->check(CLI::IsMember({"rise", "motzkin", "area"}))
        ->required();
    bij_cmd->add_option("--n", n, "path length");
    bij_cmd->add_option("--cap", cap, "enumeration cap");
    bij_cmd->add_flag("--verify", "run the exhaustive verification (default action)");

    auto* q_cmd = app.add_subcommand("qseries", "area-weighted series and c-tables");
    add_common(q_cmd, c, false);
    q_cmd->add_option("--order", order, "truncation order");
    q_cmd->add_option("--what", what, "ctable, closed, r-iter or r-hratio")
        ->check(CLI::IsMember({"ctable", "closed", "r-iter", "r-hratio"}));

    auto* id_cmd = app.add_subcommand("identity-check", "verify the q-series identities");
    add_common(id_cmd, c, false);
    id_cmd->add_option("--order", order, "truncation order");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        const int code = app.exit(e, msg, msg);
        if (code == 0) {
            out << msg.str();
            return 0;
        }
        err << msg.str();
        return 2;
    }

    try {
        Emitter emit(c, out);
        std::ostream& os = emit.stream();
        if (enumerate_cmd->parsed()) return cmd_enumerate(c, n, count_only, cap, os);
        if (series_cmd->parsed()) return cmd_series(c, order, with_area, os);
        if (critical_cmd->parsed()) return cmd_critical(c, os);
        if (phase_cmd->parsed()) return cmd_phase(c, a_min, a_max, steps, os);
        if (sweep_cmd->parsed()) return cmd_ac_sweep(c, l_from, l_to, include_inf, os);
        if (crit_cmd->parsed()) return cmd_crit_poly(c, route, os);
        if (disc_cmd->parsed()) return cmd_discriminant_check(c, os);
        if (bij_cmd->parsed()) return cmd_bijection(c, which, n, cap, os);
        if (q_cmd->parsed()) return cmd_qseries(c, order, what, os);
        if (id_cmd->parsed()) return cmd_identity_check(c, order, os);
        err << "no subcommand\n";
        return 2;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace luka::cli
