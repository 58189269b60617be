#pragma once

#include <string>
#include <vector>

#include "luka/params.hpp"
#include "luka/paths.hpp"

namespace luka {

struct DyckPath {
    std::vector<int> steps;  // +1 (U) or -1 (D)
    int length() const { return static_cast<int>(steps.size()); }
    std::vector<int> heights() const;
    bool operator==(const DyckPath&) const = default;
    bool operator<(const DyckPath& o) const { return steps < o.steps; }
    std::string str() const;  // e.g. "UUDD"
};

struct MotzkinPath {
    std::vector<int> steps;  // +1 (U), 0 (H), -1 (D)
    int length() const { return static_cast<int>(steps.size()); }
    std::vector<int> heights() const;
    bool operator==(const MotzkinPath&) const = default;
    bool operator<(const MotzkinPath& o) const { return steps < o.steps; }
    std::string str() const;  // e.g. "UHD"
};

DyckPath validate_dyck(const std::vector<int>& steps);
MotzkinPath validate_motzkin(const std::vector<int>& steps);

// Contacts (vertices after the first at height zero) and area (sum of all
// vertex heights), with the same conventions as Lukasiewicz paths.
int contacts_of(const std::vector<int>& steps);
long long area_of(const std::vector<int>& steps);

// A maximal rise r_{i,j} and its hook (the rise plus the closing down step).
struct Rise {
    int start = 0;
    int length = 0;
    int hook_end = 0;  // index of the down step of the peak
    bool operator==(const Rise&) const = default;
};

std::vector<Rise> rise_decompose(const DyckPath& d);

// Jump j step -> length j+2 hook (j+1 up steps and a down step); down steps
// pass through. Produces a (k+1,l+1)-rise-restricted Dyck path of length 2n
// with the same contacts.
DyckPath luka_to_rise_dyck(const LukaPath& l);

// Inverse of the above; throws RiseRestrictionViolated when a rise length
// falls outside [k+1, l+1].
LukaPath rise_dyck_to_luka(const DyckPath& d, const ModelParams& params);

// The down steps right-visible from the jump step at index i: the j steps
// that first return the path to heights h+j-1, ..., h.
std::vector<int> right_visible(const LukaPath& l, int jump_index);

// The Gamma_n map of the (1,inf) <-> Motzkin bijection: paths of length n map
// through Gamma-o on every jump step, paths of length n+1 through Gamma-minus
// on the leftmost jump and Gamma-o on the rest.
MotzkinPath motzkin_map(const ModelParams& params, const LukaPath& l, int n);

// Unique preimage in L_n u L_{n+1}; surface horizontal steps signal L_{n+1}.
LukaPath motzkin_inverse(const MotzkinPath& m);

// Area bijection for (0,inf): vertex v_i = (i, h_i) becomes the down step
// starting at Dyck vertex 2i + h_i - 1. Contacts are preserved and area m
// maps to 2m + n.
DyckPath area_luka_to_dyck(const ModelParams& params, const LukaPath& l);
LukaPath area_dyck_to_luka(const DyckPath& d);

enum class BijectionKind { rise, motzkin, area };

struct BijectionReport {
    BijectionKind kind;
    ModelParams params;
    int n = 0;
    long long source_count = 0;
    long long target_count = 0;
    bool pass = false;
    std::string counterexample;  // empty when pass
};

// Exhaustive verification at length n: well-definedness, injectivity,
// surjectivity (via counting the independently enumerated target set),
// round trips, and the weight laws of each bijection.
BijectionReport verify_bijection(BijectionKind kind, const ModelParams& params, int n,
                                 long long cap = kDefaultPathCap);

// Brute-force target-side enumerations (also used by tests).
std::vector<DyckPath> enumerate_dyck(int length);
std::vector<DyckPath> enumerate_rise_restricted_dyck(int length, int min_rise, int max_rise,
                                                     bool unbounded_max);
std::vector<MotzkinPath> enumerate_motzkin(int length);

}  // namespace luka
