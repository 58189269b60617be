#include "luka/bijections.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace luka {

namespace {

std::vector<int> heights_of(const std::vector<int>& steps) {
    std::vector<int> h(steps.size() + 1, 0);
    for (std::size_t i = 0; i < steps.size(); ++i) h[i + 1] = h[i] + steps[i];
    return h;
}

}  // namespace

std::vector<int> DyckPath::heights() const { return heights_of(steps); }
std::vector<int> MotzkinPath::heights() const { return heights_of(steps); }

std::string DyckPath::str() const {
    std::string s;
    for (int x : steps) s += (x == 1 ? 'U' : 'D');
    return s;
}

std::string MotzkinPath::str() const {
    std::string s;
    for (int x : steps) s += (x == 1 ? 'U' : x == 0 ? 'H' : 'D');
    return s;
}

DyckPath validate_dyck(const std::vector<int>& steps) {
    int h = 0;
    for (int s : steps) {
        if (s != 1 && s != -1) throw StepOutOfRange("Dyck steps are +1/-1");
        h += s;
        if (h < 0) throw NegativeHeight("Dyck path below surface");
    }
    if (h != 0) throw NonzeroFinalHeight("Dyck path ends off the surface");
    return DyckPath{steps};
}

MotzkinPath validate_motzkin(const std::vector<int>& steps) {
    int h = 0;
    for (int s : steps) {
        if (s != 1 && s != 0 && s != -1) throw StepOutOfRange("Motzkin steps are +1/0/-1");
        h += s;
        if (h < 0) throw NegativeHeight("Motzkin path below surface");
    }
    if (h != 0) throw NonzeroFinalHeight("Motzkin path ends off the surface");
    return MotzkinPath{steps};
}

int contacts_of(const std::vector<int>& steps) {
    int h = 0, c = 0;
    for (int s : steps) {
        h += s;
        if (h == 0) ++c;
    }
    return c;
}

long long area_of(const std::vector<int>& steps) {
    int h = 0;
    long long area = 0;
    for (int s : steps) {
        h += s;
        area += h;
    }
    return area;
}

std::vector<Rise> rise_decompose(const DyckPath& d) {
    std::vector<Rise> rises;
    const int n = d.length();
    int i = 0;
    while (i < n) {
        if (d.steps[static_cast<std::size_t>(i)] == 1) {
            int j = i;
            while (j < n && d.steps[static_cast<std::size_t>(j)] == 1) ++j;
            // A maximal run of up steps in a Dyck path is always followed by
            // a down step (the path must come back down).
            rises.push_back(Rise{i, j - i, j});
            i = j + 1;  // skip the hook's down step
        } else {
            ++i;
        }
    }
    return rises;
}

DyckPath luka_to_rise_dyck(const LukaPath& l) {
    std::vector<int> out;
    out.reserve(2 * l.steps.size());
    for (int s : l.steps) {
        if (s == -1) {
            out.push_back(-1);
        } else {
            out.insert(out.end(), static_cast<std::size_t>(s) + 1, 1);
            out.push_back(-1);
        }
    }
    return validate_dyck(out);
}

LukaPath rise_dyck_to_luka(const DyckPath& d, const ModelParams& params) {
    std::vector<int> steps;
    const int n = d.length();
    int i = 0;
    while (i < n) {
        if (d.steps[static_cast<std::size_t>(i)] == 1) {
            int j = i;
            while (j < n && d.steps[static_cast<std::size_t>(j)] == 1) ++j;
            const int rise = j - i;
            if (rise - 1 < params.k || (params.ell && rise - 1 > *params.ell))
                throw RiseRestrictionViolated("rise of length " + std::to_string(rise) +
                                              " outside [k+1, l+1] for " + params.str());
            steps.push_back(rise - 1);
            i = j + 1;  // consume the hook's down step
        } else {
            steps.push_back(-1);
            ++i;
        }
    }
    return validate(params, steps);
}

std::vector<int> right_visible(const LukaPath& l, int jump_index) {
    const auto h = l.heights();
    const int n = l.length();
    if (jump_index < 0 || jump_index >= n || l.steps[static_cast<std::size_t>(jump_index)] < 0)
        throw NotAJumpStep("step " + std::to_string(jump_index) + " is not a jump");
    const int base = h[static_cast<std::size_t>(jump_index)];
    const int j = l.steps[static_cast<std::size_t>(jump_index)];
    std::vector<int> out;
    int target = base + j - 1;
    for (int t = jump_index + 1; t < n && target >= base; ++t) {
        if (l.steps[static_cast<std::size_t>(t)] == -1 &&
            h[static_cast<std::size_t>(t) + 1] == target) {
            out.push_back(t);
            --target;
        }
    }
    return out;
}

MotzkinPath motzkin_map(const ModelParams& params, const LukaPath& l, int n) {
    if (params.k != 1 || !params.infinite_ell())
        throw WrongModel("the Motzkin bijection is defined for (1,inf)");
    const int len = l.length();
    if (len != n && len != n + 1)
        throw DomainError("path length must be n or n+1");

    std::vector<int> out(l.steps.begin(), l.steps.end());
    std::vector<bool> erase(static_cast<std::size_t>(len), false);
    bool gamma_minus = (len == n + 1);
    for (int i = 0; i < len; ++i) {
        if (l.steps[static_cast<std::size_t>(i)] < 0) continue;
        const auto viz = right_visible(l, i);
        if (gamma_minus) {
            // leftmost jump: delete it, all visible down steps become horizontal
            erase[static_cast<std::size_t>(i)] = true;
            for (int t : viz) out[static_cast<std::size_t>(t)] = 0;
            gamma_minus = false;
        } else {
            out[static_cast<std::size_t>(i)] = 1;
            for (std::size_t v = 0; v + 1 < viz.size(); ++v)
                out[static_cast<std::size_t>(viz[v])] = 0;
        }
    }
    std::vector<int> steps;
    steps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < len; ++i)
        if (!erase[static_cast<std::size_t>(i)]) steps.push_back(out[static_cast<std::size_t>(i)]);
    return validate_motzkin(steps);
}

LukaPath motzkin_inverse(const MotzkinPath& m) {
    const auto h = m.heights();
    const int n = m.length();
    std::vector<int> out(m.steps.begin(), m.steps.end());

    // Surface horizontal steps fix the jump height of a prepended jump step.
    int surface = 0;
    for (int i = 0; i < n; ++i)
        if (m.steps[static_cast<std::size_t>(i)] == 0 && h[static_cast<std::size_t>(i)] == 0) {
            out[static_cast<std::size_t>(i)] = -1;
            ++surface;
        }

    for (int i = 0; i < n; ++i) {
        if (m.steps[static_cast<std::size_t>(i)] != 1) continue;
        const int level = h[static_cast<std::size_t>(i)] + 1;
        // count horizontals on this level up to the right-visible down step
        int c = 0;
        for (int t = i + 1; t < n; ++t) {
            if (h[static_cast<std::size_t>(t) + 1] < level - 1) break;  // unreachable before the down step
            if (m.steps[static_cast<std::size_t>(t)] == 0 && h[static_cast<std::size_t>(t)] == level) {
                ++c;
                out[static_cast<std::size_t>(t)] = -1;
            }
            if (m.steps[static_cast<std::size_t>(t)] == -1 &&
                h[static_cast<std::size_t>(t) + 1] == level - 1)
                break;
        }
        out[static_cast<std::size_t>(i)] = c + 1;
    }
    std::vector<int> steps;
    if (surface > 0) steps.push_back(surface);
    steps.insert(steps.end(), out.begin(), out.end());
    return validate(ModelParams::unbounded(1), steps);
}

DyckPath area_luka_to_dyck(const ModelParams& params, const LukaPath& l) {
    if (params.k != 0 || !params.infinite_ell())
        throw WrongModel("the area bijection is defined for (0,inf)");
    const int n = l.length();
    const auto h = l.heights();
    std::vector<int> steps(static_cast<std::size_t>(2 * n), 1);
    for (int i = 1; i <= n; ++i) {
        const int slot = 2 * i + h[static_cast<std::size_t>(i)] - 1;
        steps[static_cast<std::size_t>(slot)] = -1;
    }
    return validate_dyck(steps);
}

LukaPath area_dyck_to_luka(const DyckPath& d) {
    const int len = d.length();
    if (len % 2 != 0) throw DomainError("Dyck paths have even length");
    const int n = len / 2;
    const auto h = d.heights();
    std::vector<int> lh(static_cast<std::size_t>(n) + 1, 0);
    for (int t = 0; t < len; ++t) {
        if (d.steps[static_cast<std::size_t>(t)] != -1) continue;
        const int diff = t - h[static_cast<std::size_t>(t)];
        const int i = diff / 2 + 1;  // down step with start difference 2(i-1) -> vertex v_i
        lh[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(t)] - 1;
    }
    std::vector<int> steps(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        steps[static_cast<std::size_t>(i - 1)] =
            lh[static_cast<std::size_t>(i)] - lh[static_cast<std::size_t>(i - 1)];
    return validate(ModelParams::unbounded(0), steps);
}

std::vector<DyckPath> enumerate_dyck(int length) {
    std::vector<DyckPath> out;
    if (length % 2 != 0) return out;
    std::vector<int> steps;
    auto rec = [&](auto&& self, int h, int rem) -> void {
        if (rem == 0) {
            if (h == 0) out.push_back(DyckPath{steps});
            return;
        }
        if (h + 1 <= rem - 1) {
            steps.push_back(1);
            self(self, h + 1, rem - 1);
            steps.pop_back();
        }
        if (h >= 1) {
            steps.push_back(-1);
            self(self, h - 1, rem - 1);
            steps.pop_back();
        }
    };
    rec(rec, 0, length);
    return out;
}

std::vector<DyckPath> enumerate_rise_restricted_dyck(int length, int min_rise, int max_rise,
                                                     bool unbounded_max) {
    std::vector<DyckPath> out;
    for (auto& d : enumerate_dyck(length)) {
        bool ok = true;
        for (const Rise& r : rise_decompose(d))
            if (r.length < min_rise || (!unbounded_max && r.length > max_rise)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(d));
    }
    return out;
}

std::vector<MotzkinPath> enumerate_motzkin(int length) {
    std::vector<MotzkinPath> out;
    std::vector<int> steps;
    auto rec = [&](auto&& self, int h, int rem) -> void {
        if (rem == 0) {
            if (h == 0) out.push_back(MotzkinPath{steps});
            return;
        }
        for (int s : {1, 0, -1}) {
            if (s == -1 && h == 0) continue;
            if (h + s > rem - 1) continue;
            steps.push_back(s);
            self(self, h + s, rem - 1);
            steps.pop_back();
        }
    };
    rec(rec, 0, length);
    return out;
}

namespace {

std::string luka_str(const LukaPath& l) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < l.steps.size(); ++i)
        os << (i ? "," : "") << l.steps[i];
    os << "]";
    return os.str();
}

BijectionReport verify_rise(const ModelParams& params, int n, long long cap) {
    BijectionReport rep{BijectionKind::rise, params, n, 0, 0, true, ""};
    auto sources = enumerate(params, n, cap);
    rep.source_count = static_cast<long long>(sources.size());
    std::set<DyckPath> images;
    for (const auto& l : sources) {
        DyckPath d = luka_to_rise_dyck(l);
        if (d.length() != 2 * n) {
            rep.pass = false;
            rep.counterexample = luka_str(l) + " image has wrong length";
            return rep;
        }
        for (const Rise& r : rise_decompose(d)) {
            if (r.length < params.k + 1 || (params.ell && r.length > *params.ell + 1)) {
                rep.pass = false;
                rep.counterexample = luka_str(l) + " image violates the rise window";
                return rep;
            }
        }
        if (contacts_of(d.steps) != weights(l).contacts) {
            rep.pass = false;
            rep.counterexample = luka_str(l) + " contacts differ";
            return rep;
        }
        if (!(rise_dyck_to_luka(d, params) == l)) {
            rep.pass = false;
            rep.counterexample = luka_str(l) + " does not round-trip";
            return rep;
        }
        if (!images.insert(d).second) {
            rep.pass = false;
            rep.counterexample = "duplicate image " + d.str();
            return rep;
        }
    }
    auto targets = enumerate_rise_restricted_dyck(
        2 * n, params.k + 1, params.ell ? *params.ell + 1 : 0, params.infinite_ell());
    rep.target_count = static_cast<long long>(targets.size());
    if (rep.target_count != rep.source_count) {
        rep.pass = false;
        rep.counterexample = "image count != rise-restricted Dyck count";
    }
    return rep;
}

BijectionReport verify_motzkin(const ModelParams& params, int n, long long cap) {
    BijectionReport rep{BijectionKind::motzkin, params, n, 0, 0, true, ""};
    if (params.k != 1 || !params.infinite_ell()) throw WrongModel("expected (1,inf)");
    auto sources = enumerate(params, n, cap);
    auto longer = enumerate(params, n + 1, cap);
    sources.insert(sources.end(), longer.begin(), longer.end());
    rep.source_count = static_cast<long long>(sources.size());
    std::set<MotzkinPath> images;
    for (const auto& l : sources) {
        MotzkinPath m = motzkin_map(params, l, n);
        if (m.length() != n) {
            rep.pass = false;
            rep.counterexample = luka_str(l) + " image has wrong length";
            return rep;
        }
        // membership law: surface horizontals iff the source was in L_{n+1}
        bool has_surface_h = false;
        const auto h = m.heights();
        for (int i = 0; i < n; ++i)
            if (m.steps[static_cast<std::size_t>(i)] == 0 && h[static_cast<std::size_t>(i)] == 0)
                has_surface_h = true;
        if (has_surface_h != (l.length() == n + 1)) {
            rep.pass = false;
            rep.counterexample = luka_str(l) + " violates the surface-horizontal law";
            return rep;
        }
        if (!(motzkin_inverse(m) == l)) {
            rep.pass = false;
            rep.counterexample = luka_str(l) + " does not round-trip";
            return rep;
        }
        if (!images.insert(m).second) {
            rep.pass = false;
            rep.counterexample = "duplicate image " + m.str();
            return rep;
        }
    }
    rep.target_count = static_cast<long long>(enumerate_motzkin(n).size());
    if (rep.target_count != rep.source_count) {
        rep.pass = false;
        rep.counterexample = "|L_n u L_{n+1}| != M_n";
    }
    return rep;
}

BijectionReport verify_area(const ModelParams& params, int n, long long cap) {
    BijectionReport rep{BijectionKind::area, params, n, 0, 0, true, ""};
    if (params.k != 0 || !params.infinite_ell()) throw WrongModel("expected (0,inf)");
    auto sources = enumerate(params, n, cap);
    rep.source_count = static_cast<long long>(sources.size());
    std::set<DyckPath> images;
    for (const auto& l : sources) {
        DyckPath d = area_luka_to_dyck(params, l);
        const PathWeights w = weights(l);
        if (d.length() != 2 * n || contacts_of(d.steps) != w.contacts ||
            area_of(d.steps) != 2 * w.area + n) {
            rep.pass = false;
            rep.counterexample = luka_str(l) + " violates the length/contact/area law";
            return rep;
        }
        if (!(area_dyck_to_luka(d) == l)) {
            rep.pass = false;
            rep.counterexample = luka_str(l) + " does not round-trip";
            return rep;
        }
        if (!images.insert(d).second) {
            rep.pass = false;
            rep.counterexample = "duplicate image " + d.str();
            return rep;
        }
    }
    rep.target_count = static_cast<long long>(enumerate_dyck(2 * n).size());
    if (rep.target_count != rep.source_count) {
        rep.pass = false;
        rep.counterexample = "image count != Dyck path count";
    }
    return rep;
}

}  // namespace

BijectionReport verify_bijection(BijectionKind kind, const ModelParams& params, int n,
                                 long long cap) {
    switch (kind) {
        case BijectionKind::rise: return verify_rise(params, n, cap);
        case BijectionKind::motzkin: return verify_motzkin(params, n, cap);
        case BijectionKind::area: return verify_area(params, n, cap);
    }
    throw DomainError("unknown bijection kind");
}

}  // namespace luka
