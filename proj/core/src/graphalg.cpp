#include "sinrc/graphalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace sinrc {

Coloring greedy_color(const ConflictGraph& g) {
    const int n = g.size();
    Coloring out;
    out.color.assign(n, -1);
    const auto& order = g.order();
    std::vector<char> used;
    for (int r = n - 1; r >= 0; --r) {
        const int v = order[r];
        used.assign(n + 1, 0);
        for (int u : g.post_neighbors(v))
            if (out.color[u] >= 0) used[out.color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        out.color[v] = c;
        out.colors_used = std::max(out.colors_used, c + 1);
    }
    if (n == 0) out.colors_used = 0;
    return out;
}

WisSolution local_ratio_wis(const ConflictGraph& g, std::span<const double> weights) {
    const int n = g.size();
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("weight vector size mismatch");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");

    std::vector<double> residual(weights.begin(), weights.end());
    std::vector<int> stack;
    for (int v : g.order()) {
        if (residual[v] <= 0.0) continue;
        const double r = residual[v];
        stack.push_back(v);
        residual[v] = 0.0;
        for (int u : g.post_neighbors(v)) residual[u] -= r;
    }

    std::vector<char> chosen(n, 0);
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        const int v = *it;
        bool blocked = false;
        for (int u = 0; u < n && !blocked; ++u)
            if (chosen[u] && g.adjacent(v, u)) blocked = true;
        if (!blocked) chosen[v] = 1;
    }

    WisSolution out;
    for (int v = 0; v < n; ++v)
        if (chosen[v]) {
            out.chosen.push_back(v);
            out.total_weight += weights[v];
        }
    return out;
}

namespace {

struct WisSearch {
    const ConflictGraph& g;
    std::span<const double> w;
    std::vector<std::uint32_t> nbr;
    std::unordered_map<std::uint32_t, double> memo;

    double solve(std::uint32_t mask) {
        if (!mask) return 0.0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        // Branch on the max-degree vertex within the mask.
        int v = -1, best_deg = -1;
        for (std::uint32_t m = mask; m;) {
            const int u = std::countr_zero(m);
            m &= m - 1;
            const int deg = std::popcount(nbr[u] & mask);
            if (deg > best_deg) {
                best_deg = deg;
                v = u;
            }
        }
        double best = w[v] + solve(mask & ~nbr[v] & ~(1u << v));
        if (best_deg > 0) best = std::max(best, solve(mask & ~(1u << v)));
        memo.emplace(mask, best);
        return best;
    }
};

} // namespace

WisSolution exact_wis(const ConflictGraph& g, std::span<const double> weights) {
    const int n = g.size();
    if (n > 24) throw std::invalid_argument("exact_wis is limited to n <= 24");
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("weight vector size mismatch");

    WisSearch search{g, weights, {}, {}};
    search.nbr.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) search.nbr[i] |= 1u << j;

    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1u;
    WisSolution out;
    out.total_weight = search.solve(full);

    // Reconstruct by re-descending the memoized recursion.
    std::uint32_t mask = full;
    double target = out.total_weight;
    while (mask) {
        int v = -1, best_deg = -1;
        for (std::uint32_t m = mask; m;) {
            const int u = std::countr_zero(m);
            m &= m - 1;
            const int deg = std::popcount(search.nbr[u] & mask);
            if (deg > best_deg) {
                best_deg = deg;
                v = u;
            }
        }
        const std::uint32_t with = mask & ~search.nbr[v] & ~(1u << v);
        if (weights[v] + search.solve(with) >= target - 1e-12) {
            out.chosen.push_back(v);
            target -= weights[v];
            mask = with;
        } else {
            mask &= ~(1u << v);
        }
    }
    std::sort(out.chosen.begin(), out.chosen.end());
    return out;
}

namespace {

bool k_colorable(const std::vector<std::uint32_t>& nbr, const std::vector<int>& order, int k,
                 std::vector<int>& color, std::size_t pos, int max_used) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    // Symmetry break: at most one fresh color beyond those already in use.
    const int limit = std::min(k, max_used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (std::uint32_t m = nbr[v]; m && ok;) {
            const int u = std::countr_zero(m);
            m &= m - 1;
            if (color[u] == c) ok = false;
        }
        if (!ok) continue;
        color[v] = c;
        if (k_colorable(nbr, order, k, color, pos + 1, std::max(max_used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

} // namespace

int exact_chromatic(const ConflictGraph& g) {
    const int n = g.size();
    if (n > 16) throw std::invalid_argument("exact_chromatic is limited to n <= 16");
    if (n == 0) return 0;

    std::vector<std::uint32_t> nbr(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) nbr[i] |= 1u << j;

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return std::popcount(nbr[a]) > std::popcount(nbr[b]); });

    // Greedy clique through the high-degree prefix gives a lower bound.
    std::uint32_t clique = 0;
    int lower = 0;
    for (int v : order) {
        if ((nbr[v] & clique) == clique) {
            clique |= 1u << v;
            ++lower;
        }
    }

    for (int k = std::max(lower, 1); k <= n; ++k) {
        std::vector<int> color(n, -1);
        if (k_colorable(nbr, order, k, color, 0, 0)) return k;
    }
    return n;
}

bool is_proper(const ConflictGraph& g, const Coloring& c) {
    const int n = g.size();
    if (static_cast<int>(c.color.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        if (c.color[i] < 0 || c.color[i] >= std::max(c.colors_used, 1)) return false;
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j) && c.color[i] == c.color[j]) return false;
    }
    return true;
}

bool is_independent(const ConflictGraph& g, std::span<const int> set) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (g.adjacent(set[a], set[b])) return false;
    return true;
}

} // namespace sinrc
