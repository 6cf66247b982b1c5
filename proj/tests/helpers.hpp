#pragma once

#include <vector>

#include "sinrc/rng.hpp"
#include "sinrc/types.hpp"

namespace sinrc::testing {

/// Links on the real line, each of the given length, separated by `gap`.
/// Distinct lengths give a plain instance for graph-structure tests.
inline LinkInstance line_instance(const std::vector<double>& lengths, double gap = 100.0,
                                  SinrParams sinr = {}) {
    Metric m = Metric::euclidean(1);
    std::vector<std::pair<int, int>> nodes;
    double x = 0.0;
    for (double l : lengths) {
        const int s = m.add_point({x});
        const int r = m.add_point({x + l});
        nodes.emplace_back(s, r);
        x += l + gap;
    }
    LinkInstance inst(std::move(m), sinr);
    for (std::size_t i = 0; i < lengths.size(); ++i)
        inst.add_link(static_cast<int>(i + 1), nodes[i].first, nodes[i].second);
    return inst;
}

/// Two links in the plane from explicit endpoints.
inline LinkInstance pair_instance(double sx1, double sy1, double rx1, double ry1, double sx2,
                                  double sy2, double rx2, double ry2, SinrParams sinr = {}) {
    Metric m = Metric::euclidean(2);
    const int a = m.add_point({sx1, sy1});
    const int b = m.add_point({rx1, ry1});
    const int c = m.add_point({sx2, sy2});
    const int d = m.add_point({rx2, ry2});
    LinkInstance inst(std::move(m), sinr);
    inst.add_link(1, a, b);
    inst.add_link(2, c, d);
    return inst;
}

inline std::vector<int> all_links(const LinkInstance& inst) {
    std::vector<int> v(inst.size());
    for (int i = 0; i < inst.size(); ++i) v[i] = i;
    return v;
}

} // namespace sinrc::testing
