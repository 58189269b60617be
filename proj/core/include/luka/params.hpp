#pragma once

#include <optional>
#include <string>

#include "luka/errors.hpp"

namespace luka {

// Model parameters (k, ell) restricting jump heights to k <= j <= ell.
// ell == nullopt stands for the unbounded model (ell = infinity).
struct ModelParams {
    int k = 0;
    std::optional<int> ell;

    ModelParams() = default;
    ModelParams(int k_, std::optional<int> ell_) : k(k_), ell(ell_) {
        if (k < 0 || (ell && *ell < 0))
            throw DomainError("model parameters must be non-negative");
        if (ell && k > *ell)
            throw DomainError("model requires k <= ell");
    }

    static ModelParams finite(int k, int ell) { return {k, ell}; }
    static ModelParams unbounded(int k) { return {k, std::nullopt}; }

    bool infinite_ell() const { return !ell.has_value(); }
    bool degenerate() const { return k == 0 && ell && *ell == 0; }

    // Largest admissible jump for a path with `budget` remaining down steps.
    int max_jump(int budget) const {
        return ell ? std::min(*ell, budget) : budget;
    }

    bool operator==(const ModelParams&) const = default;

    std::string str() const {
        return "(" + std::to_string(k) + "," + (ell ? std::to_string(*ell) : "inf") + ")";
    }
};

}  // namespace luka
