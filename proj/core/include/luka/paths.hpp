#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "luka/multipoly.hpp"
#include "luka/params.hpp"

namespace luka {

// A validated (k,l)-restricted Lukasiewicz path: steps are -1 (down) or a
// jump j with k <= j <= l; heights never go negative and the path ends on
// the surface.
struct LukaPath {
    std::vector<int> steps;

    int length() const { return static_cast<int>(steps.size()); }
    // Heights y_0 .. y_n.
    std::vector<int> heights() const;
    bool operator==(const LukaPath&) const = default;
    bool operator<(const LukaPath& o) const { return steps < o.steps; }
};

struct PathWeights {
    int length = 0;
    int contacts = 0;   // vertices v_1..v_n at height zero
    long long area = 0; // sum of the heights of all vertices
    bool operator==(const PathWeights&) const = default;
};

LukaPath validate(const ModelParams& params, const std::vector<int>& steps);
PathWeights weights(const LukaPath& path);

inline constexpr long long kDefaultPathCap = 10'000'000;

// Exhaustive enumeration of all valid length-n paths, in lexicographic step
// order. Throws ResourceLimit beyond `cap` paths.
std::vector<LukaPath> enumerate(const ModelParams& params, int n,
                                long long cap = kDefaultPathCap);

// Visitor form; the callback sees each path with its weights.
void for_each_path(const ModelParams& params, int n,
                   const std::function<void(const LukaPath&, const PathWeights&)>& fn,
                   long long cap = kDefaultPathCap);

long long count_paths(const ModelParams& params, int n, long long cap = kDefaultPathCap);

// Partition function Z_n as an exact polynomial: sum over length-n paths of
// a^contacts (times q^area when with_area). Z_0 = 1.
MultiPoly partition_polynomial(const ModelParams& params, int n, bool with_area = false,
                               long long cap = kDefaultPathCap);

}  // namespace luka
