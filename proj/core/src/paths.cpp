#include "luka/paths.hpp"

#include <string>

namespace luka {

std::vector<int> LukaPath::heights() const {
    std::vector<int> h(steps.size() + 1, 0);
    for (std::size_t i = 0; i < steps.size(); ++i) h[i + 1] = h[i] + steps[i];
    return h;
}

LukaPath validate(const ModelParams& params, const std::vector<int>& steps) {
    int h = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const int s = steps[i];
        if (s != -1 && (s < params.k || (params.ell && s > *params.ell)))
            throw StepOutOfRange("step " + std::to_string(s) + " at index " +
                                 std::to_string(i) + " outside {-1} u [k,ell] for " +
                                 params.str());
        h += s;
        if (h < 0)
            throw NegativeHeight("path dips below the surface at index " + std::to_string(i));
    }
    if (h != 0)
        throw NonzeroFinalHeight("path ends at height " + std::to_string(h));
    return LukaPath{steps};
}

PathWeights weights(const LukaPath& path) {
    PathWeights w;
    w.length = path.length();
    int h = 0;
    for (int s : path.steps) {
        h += s;
        if (h == 0) ++w.contacts;
        w.area += h;
    }
    return w;
}

namespace {

struct Enumerator {
    const ModelParams& params;
    int n;
    long long cap;
    long long produced = 0;
    std::vector<int> steps;
    const std::function<void(const LukaPath&, const PathWeights&)>& fn;

    void run() {
        steps.clear();
        descend(0, 0, 0, 0);
    }

    // height h after `depth` steps; contacts and area accumulated so far
    void descend(int depth, int h, int contacts, long long area) {
        if (depth == n) {
            if (h != 0) return;
            if (++produced > cap) throw ResourceLimit("enumeration cap exceeded");
            LukaPath p{steps};
            fn(p, PathWeights{n, contacts, area});
            return;
        }
        const int rem = n - depth - 1;  // steps remaining after this one
        // down step
        if (h >= 1) {
            steps.push_back(-1);
            descend(depth + 1, h - 1, contacts + (h == 1 ? 1 : 0), area + h - 1);
            steps.pop_back();
        }
        // jump steps: need j <= rem - h so the path can still return to zero
        const int top = params.max_jump(rem - h);
        for (int j = params.k; j <= top; ++j) {
            steps.push_back(j);
            descend(depth + 1, h + j, contacts + (h + j == 0 ? 1 : 0), area + h + j);
            steps.pop_back();
        }
    }
};

}  // namespace

void for_each_path(const ModelParams& params, int n,
                   const std::function<void(const LukaPath&, const PathWeights&)>& fn,
                   long long cap) {
    if (n < 0) throw DomainError("negative length");
    if (n == 0) {
        fn(LukaPath{}, PathWeights{});
        return;
    }
    Enumerator e{params, n, cap, 0, {}, fn};
    e.run();
}

std::vector<LukaPath> enumerate(const ModelParams& params, int n, long long cap) {
    std::vector<LukaPath> out;
    for_each_path(params, n, [&](const LukaPath& p, const PathWeights&) { out.push_back(p); },
                  cap);
    return out;
}

long long count_paths(const ModelParams& params, int n, long long cap) {
    long long c = 0;
    for_each_path(params, n, [&](const LukaPath&, const PathWeights&) { ++c; }, cap);
    return c;
}

MultiPoly partition_polynomial(const ModelParams& params, int n, bool with_area,
                               long long cap) {
    MultiPoly Z;
    for_each_path(params, n,
                  [&](const LukaPath&, const PathWeights& w) {
                      Exponents e{};
                      e[static_cast<int>(Var::a)] = w.contacts;
                      if (with_area) e[static_cast<int>(Var::q)] = static_cast<int>(w.area);
                      Z += MultiPoly::monomial(1, e);
                  },
                  cap);
    return Z;
}

}  // namespace luka
