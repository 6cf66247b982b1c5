#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sinrc/funclib.hpp"
#include "sinrc/types.hpp"

namespace sinrc {

/// Adjacent iff d(i,j) <= l_min * f(l_max / l_min); strict inequality means
/// f-independent. Boundary pairs are adjacent by convention.
bool f_adjacent(const LinkInstance& inst, const SublinearFn& f, int i, int j);

/// G_f(L): vertices are links sorted by the tie-broken length order,
/// adjacency from the f-adjacency predicate. Immutable and shareable.
class ConflictGraph {
public:
    ConflictGraph(const LinkInstance& inst, SublinearFn f);

    /// Test-oracle constructor from an explicit symmetric adjacency matrix
    /// (row-major, n*n); vertex order still follows the instance's lengths.
    ConflictGraph(const LinkInstance& inst, SublinearFn f, const std::vector<bool>& adjacency);

    const LinkInstance& instance() const { return *inst_; }
    const SublinearFn& fn() const { return f_; }
    int size() const { return n_; }

    bool adjacent(int i, int j) const {
        return i != j && (adj_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    /// Ascending tie-broken length order; rank() is its inverse.
    const std::vector<int>& order() const { return order_; }
    int rank(int i) const { return rank_[i]; }

    /// Neighbors of i that are longer under the tie-broken order.
    const std::vector<int>& post_neighbors(int i) const { return post_[i]; }

    int max_post_degree() const;
    long edge_count() const;

private:
    void finish();

    const LinkInstance* inst_;
    SublinearFn f_;
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<int> order_, rank_;
    std::vector<std::vector<int>> post_;
};

/// B_f(L) = max_i |{j : l_j >= l_i, d(i,j) <= l_i f(l_j/l_i)}|, taken
/// verbatim (raw lengths, non-strict, includes i itself via d(i,i)=0).
int b_measure(const LinkInstance& inst, const SublinearFn& f);

/// Outcome of the 60-degree sector clique-cover check around one link.
struct SectorCoverResult {
    struct Violation {
        int a = 0, b = 0; // non-adjacent pair found inside one cell
        int cell = 0;
    };
    std::vector<std::vector<int>> cliques; // at most 12 nonempty cells
    std::optional<Violation> violation;
    bool ok() const { return !violation.has_value(); }
};

/// Partitions i's longer neighbors by nearest endpoint (sender side vs
/// receiver side) and into six 60-degree sectors per side, then verifies
/// each cell is a clique in G_f. Euclidean dim-2 instances only; f must be
/// non-decreasing with f(x)/x non-increasing (every in-family function
/// qualifies).
SectorCoverResult sector_clique_cover(const ConflictGraph& g, int i);

} // namespace sinrc
