#include "sinrc/conflict.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sinrc {

bool f_adjacent(const LinkInstance& inst, const SublinearFn& f, int i, int j) {
    if (i == j) throw std::invalid_argument("f_adjacent requires i != j");
    const double li = inst.link(i).length;
    const double lj = inst.link(j).length;
    const double lmin = std::min(li, lj);
    const double lmax = std::max(li, lj);
    return inst.link_dist(i, j) <= lmin * f(lmax / lmin);
}

ConflictGraph::ConflictGraph(const LinkInstance& inst, SublinearFn f)
    : inst_(&inst), f_(std::move(f)), n_(inst.size()) {
    words_ = static_cast<std::size_t>((n_ + 63) / 64);
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (f_adjacent(inst, f_, i, j)) {
                adj_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= 1ull << (j & 63);
                adj_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= 1ull << (i & 63);
            }
        }
    }
    finish();
}

ConflictGraph::ConflictGraph(const LinkInstance& inst, SublinearFn f,
                             const std::vector<bool>& adjacency)
    : inst_(&inst), f_(std::move(f)), n_(inst.size()) {
    if (adjacency.size() != static_cast<std::size_t>(n_) * n_)
        throw std::invalid_argument("adjacency matrix size mismatch");
    words_ = static_cast<std::size_t>((n_ + 63) / 64);
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && (adjacency[static_cast<std::size_t>(i) * n_ + j] ||
                           adjacency[static_cast<std::size_t>(j) * n_ + i]))
                adj_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= 1ull << (j & 63);
    finish();
}

void ConflictGraph::finish() {
    order_ = inst_->length_order();
    rank_.assign(n_, 0);
    for (int r = 0; r < n_; ++r) rank_[order_[r]] = r;
    post_.assign(n_, {});
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (adjacent(i, j) && rank_[j] > rank_[i]) post_[i].push_back(j);
}

int ConflictGraph::max_post_degree() const {
    int best = 0;
    for (const auto& p : post_) best = std::max(best, static_cast<int>(p.size()));
    return best;
}

long ConflictGraph::edge_count() const {
    long total = 0;
    for (const auto& p : post_) total += static_cast<long>(p.size());
    return total;
}

int b_measure(const LinkInstance& inst, const SublinearFn& f) {
    if (inst.empty()) throw std::invalid_argument("b_measure of an empty instance");
    const int n = inst.size();
    int best = 0;
    for (int i = 0; i < n; ++i) {
        const double li = inst.link(i).length;
        int count = 0;
        for (int j = 0; j < n; ++j) {
            const double lj = inst.link(j).length;
            if (lj < li) continue;
            const double d = (i == j) ? 0.0 : inst.link_dist(i, j);
            if (d <= li * f(lj / li)) ++count;
        }
        best = std::max(best, count);
    }
    return best;
}

SectorCoverResult sector_clique_cover(const ConflictGraph& g, int i) {
    const LinkInstance& inst = g.instance();
    if (inst.metric().kind() != Metric::Kind::Euclidean || inst.metric().dim() != 2)
        throw std::invalid_argument("sector cover requires a euclidean dim-2 instance");
    if (!g.fn().ratio_nonincreasing())
        throw std::invalid_argument("sector cover requires f(x)/x non-increasing");

    const Link& li = inst.link(i);
    // 12 cells: side (0 = sender, 1 = receiver) x six 60-degree sectors.
    std::vector<std::vector<int>> cells(12);
    for (int j : g.post_neighbors(i)) {
        const Link& lj = inst.link(j);
        // Nearest endpoint of j to each side of i.
        double best = 0.0;
        int side = 0, endpoint = lj.sender;
        bool first = true;
        for (int anchor_side = 0; anchor_side < 2; ++anchor_side) {
            const int anchor = anchor_side == 0 ? li.sender : li.receiver;
            for (int p : {lj.sender, lj.receiver}) {
                const double d = inst.dist(anchor, p);
                if (first || d < best) {
                    best = d;
                    side = anchor_side;
                    endpoint = p;
                    first = false;
                }
            }
        }
        const int anchor = side == 0 ? li.sender : li.receiver;
        const auto& a = inst.metric().point(anchor);
        const auto& p = inst.metric().point(endpoint);
        const double dx = p[0] - a[0], dy = p[1] - a[1];
        int sector = 0;
        if (dx != 0.0 || dy != 0.0) {
            double angle = std::atan2(dy, dx); // (-pi, pi]
            if (angle < 0.0) angle += 2.0 * M_PI;
            sector = std::min(5, static_cast<int>(angle / (M_PI / 3.0)));
        }
        cells[side * 6 + sector].push_back(j);
    }

    SectorCoverResult result;
    for (int c = 0; c < 12; ++c) {
        const auto& cell = cells[c];
        for (std::size_t a = 0; a < cell.size() && !result.violation; ++a)
            for (std::size_t b = a + 1; b < cell.size(); ++b)
                if (!g.adjacent(cell[a], cell[b])) {
                    result.violation = SectorCoverResult::Violation{cell[a], cell[b], c};
                    break;
                }
        if (!cell.empty()) result.cliques.push_back(cell);
    }
    return result;
}

} // namespace sinrc
