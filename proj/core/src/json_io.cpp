#include "luka/json_io.hpp"

#include <cstdio>

namespace luka {

using nlohmann::json;

json path_to_json(const LukaPath& p) { return json(p.steps); }

LukaPath path_from_json(const ModelParams& params, const json& j) {
    return validate(params, j.get<std::vector<int>>());
}

json weight_poly_to_json(const MultiPoly& p) {
    json out = json::object();
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < kNumVars; ++i) {
            Var v = static_cast<Var>(i);
            if (v != Var::a && v != Var::q && e[i] != 0)
                throw VariableMismatch("weight polynomials use only a and q");
        }
        const std::string key = std::to_string(e[static_cast<int>(Var::a)]) + "," +
                                std::to_string(e[static_cast<int>(Var::q)]);
        if (!c.fits_slong_p())
            throw ResourceLimit("weight coefficient exceeds the JSON integer range");
        out[key] = c.get_si();
    }
    return out;
}

json poly_to_json(const MultiPoly& p) {
    json terms = json::object();
    std::vector<std::string> vars;
    std::vector<int> idx;
    for (Var v : p.variables()) {
        vars.push_back(var_name(v));
        idx.push_back(static_cast<int>(v));
    }
    for (const auto& [e, c] : p.terms()) {
        std::string key;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(e[static_cast<std::size_t>(idx[i])]);
        }
        terms[key.empty() ? "0" : key] = c.get_str();
    }
    return json{{"vars", vars}, {"terms", terms}};
}

json qfun_to_json(const RationalQFunction& f) {
    auto coeff_strings = [](const ZPoly& p) {
        std::vector<std::string> out;
        out.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) out.push_back(c.get_str());
        return out;
    };
    return json{{"num", coeff_strings(f.num())}, {"den", coeff_strings(f.den())}};
}

json bijection_report_to_json(const BijectionReport& r) {
    const char* kind = r.kind == BijectionKind::rise      ? "rise"
                       : r.kind == BijectionKind::motzkin ? "motzkin"
                                                          : "area";
    json out{{"kind", kind},
             {"params", {{"k", r.params.k},
                         {"l", r.params.ell ? json(*r.params.ell) : json("inf")}}},
             {"n", r.n},
             {"source_count", r.source_count},
             {"target_count", r.target_count},
             {"pass", r.pass}};
    if (!r.counterexample.empty()) out["counterexample"] = r.counterexample;
    return out;
}

json critical_point_to_json(const CriticalPoint& cp) {
    auto interval = [](const Interval& iv) {
        json j{{"value", format_numeric(iv.midpoint())}, {"exact", iv.exact}};
        if (iv.exact) j["rational"] = iv.lo.get_str();
        return j;
    };
    Interval u{cp.u_c.lo, cp.u_c.hi, cp.u_c.exact};
    return json{{"k", cp.params.k},
                {"l", cp.params.ell ? json(*cp.params.ell) : json("inf")},
                {"u_c", interval(u)},
                {"z_c", interval(cp.z_c)},
                {"a_c", interval(cp.a_c)},
                {"L_c", interval(cp.L_c)}};
}

std::string format_numeric(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string format_numeric(const mpq_class& x) { return format_numeric(x.get_d()); }

}  // namespace luka
