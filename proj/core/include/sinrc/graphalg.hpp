#pragma once

#include <span>
#include <vector>

#include "sinrc/conflict.hpp"

namespace sinrc {

struct Coloring {
    std::vector<int> color; // by link position
    int colors_used = 0;
};

struct WisSolution {
    std::vector<int> chosen; // link positions, ascending
    double total_weight = 0.0;
};

/// Greedy coloring in decreasing length order, so the already-colored
/// neighbors of each vertex are exactly its post-neighbors; assigns the
/// smallest free color. Uses at most B_f(L) colors.
Coloring greedy_color(const ConflictGraph& g);

/// Local-ratio weighted independent set along the increasing length order:
/// a forward pass maintains residual weights and pushes positive-residual
/// vertices, a backward pass pops the stack keeping vertices whose
/// neighborhood is still free.
WisSolution local_ratio_wis(const ConflictGraph& g, std::span<const double> weights);

/// Exact maximum-weight independent set by branch and bound; n <= 24.
WisSolution exact_wis(const ConflictGraph& g, std::span<const double> weights);

/// Exact chromatic number by branch and bound; n <= 16.
int exact_chromatic(const ConflictGraph& g);

bool is_proper(const ConflictGraph& g, const Coloring& c);
bool is_independent(const ConflictGraph& g, std::span<const int> set);

} // namespace sinrc
