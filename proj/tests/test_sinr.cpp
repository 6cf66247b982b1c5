#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "sinrc/conflict.hpp"
#include "sinrc/generators.hpp"
#include "sinrc/sinr.hpp"

using namespace sinrc;
using namespace sinrc::testing;

namespace {

/// Coarse log-spaced grid probe for a feasible power triple.
bool grid_finds_power(const LinkInstance& inst, const std::vector<int>& S, double p) {
    const int steps = 18;
    std::vector<double> levels;
    for (int k = 0; k < steps; ++k) levels.push_back(std::pow(10.0, -3.0 + 6.0 * k / (steps - 1)));
    std::vector<double> P(S.size());
    const auto strictly_ok = [&]() {
        const MarginReport rep = is_P_feasible(inst, S, P, p);
        if (!rep.ok) return false;
        for (double m : rep.margins)
            if (m < 1.0 + 1e-6) return false;
        return true;
    };
    const auto try_all = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == S.size()) return strictly_ok();
        for (double v : levels) {
            P[idx] = v;
            if (self(self, idx + 1)) return true;
        }
        return false;
    };
    return try_all(try_all, 0);
}

LinkInstance random_pair(Rng& rng, SinrParams sinr) {
    const double l1 = rng.log_uniform(1.0, 32.0);
    const double l2 = rng.log_uniform(1.0, 32.0);
    const double dist = rng.log_uniform(0.5, 200.0);
    const double a1 = rng.uniform(0.0, 2.0 * M_PI);
    const double a2 = rng.uniform(0.0, 2.0 * M_PI);
    return pair_instance(0.0, 0.0, l1 * std::cos(a1), l1 * std::sin(a1), dist, 0.0,
                         dist + l2 * std::cos(a2), l2 * std::sin(a2), sinr);
}

} // namespace

TEST_CASE("influence") {
    SUBCASE("self influence is zero") {
        const LinkInstance inst = line_instance({1.0, 2.0});
        CHECK(influence(inst, 0, 0) == 0.0);
        CHECK(influence(inst, 1, 1) == 0.0);
    }
    SUBCASE("closed form") {
        const LinkInstance inst = line_instance({1.0, 1.0}, 2.0); // d = 2, alpha = 3
        CHECK(influence(inst, 0, 1) == doctest::Approx(0.125));
    }
    SUBCASE("zero distance reports infinity") {
        Metric m = Metric::euclidean(1);
        const int a = m.add_point({0.0}), b = m.add_point({1.0}), c = m.add_point({2.0});
        LinkInstance inst(std::move(m), {});
        inst.add_link(1, a, b);
        inst.add_link(2, b, c);
        CHECK(std::isinf(influence(inst, 0, 1)));
    }
    SUBCASE("report sums over shorter members only") {
        const LinkInstance inst = line_instance({1.0, 2.0}, 4.0);
        const auto all = all_links(inst);
        const InfluenceReport rep = influence_report(inst, all);
        CHECK(rep.per_link[0] == 0.0);
        CHECK(rep.per_link[1] > 0.0);
        CHECK(rep.aggregate == rep.per_link[1]);
        const InfluenceReport single = influence_report(inst, std::vector<int>{0});
        CHECK(single.aggregate == 0.0);
    }
    SUBCASE("additive extension") {
        const LinkInstance inst = line_instance({1.0, 1.0, 1.0}, 3.0);
        const std::vector<int> S{0, 1};
        CHECK(influence_on(inst, S, 2) ==
              doctest::Approx(influence(inst, 0, 2) + influence(inst, 1, 2)));
    }
}

TEST_CASE("sufficient condition threshold") {
    CHECK(kesselheim_threshold(3.0, 1.0) == doctest::Approx(1.0 / 324.0));
    const LinkInstance inst = line_instance({1.0});
    CHECK(kesselheim_sufficient(inst, std::vector<int>{0}));
}

TEST_CASE("pairwise closed form") {
    SUBCASE("boundary is infeasible") {
        // alpha = 4, p = 81: p^{2/alpha} = 9; unit links with d_ij = d_ji = 3
        // sit exactly on the boundary.
        const LinkInstance inst =
            pair_instance(0, 0, 0, 1, 3, 1, 3, 0, SinrParams{4.0, 1.0, 0.0});
        CHECK(inst.directed_dist(0, 1) == 3.0);
        CHECK(inst.directed_dist(1, 0) == 3.0);
        CHECK_FALSE(pairwise_feasible(inst, 0, 1, 81.0));
        CHECK(pairwise_feasible(inst, 0, 1, 80.9));
    }
    SUBCASE("distant pair is feasible") {
        const LinkInstance inst = line_instance({1.0, 1.0}, 1e6);
        CHECK(pairwise_feasible(inst, 0, 1, 1.0));
        CHECK_THROWS(pairwise_feasible(inst, 0, 0, 1.0));
    }
    SUBCASE("agrees with the spectral oracle") {
        Rng rng(13);
        int checked = 0;
        for (int t = 0; t < 2000; ++t) {
            const LinkInstance inst = random_pair(rng, SinrParams{3.0, 1.0, 0.0});
            const double p = inst.sinr().beta;
            const double lhs = inst.directed_dist(0, 1) * inst.directed_dist(1, 0);
            const double rhs =
                std::pow(p, 2.0 / 3.0) * inst.link(0).length * inst.link(1).length;
            if (std::abs(lhs - rhs) <= 1e-6 * std::max(lhs, rhs)) continue; // boundary
            const FeasibilityVerdict v = exact_feasible(inst, all_links(inst), p);
            REQUIRE(v.kind != FeasibilityVerdict::Kind::Unknown);
            CHECK(v.feasible() == pairwise_feasible(inst, 0, 1, p));
            ++checked;
        }
        CHECK(checked > 1500);
    }
}

TEST_CASE("exact feasibility oracle") {
    SUBCASE("singleton") {
        const LinkInstance inst = line_instance({1.0});
        const FeasibilityVerdict v = exact_feasible(inst, std::vector<int>{0});
        CHECK(v.feasible());
        CHECK(is_P_feasible(inst, std::vector<int>{0}, v.power, 1.0).ok);
    }
    SUBCASE("certificates pass the margin check") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const GenResult gen = random_planar(12, 64.0, seed);
            const FeasibilityVerdict v = exact_feasible(gen.instance, all_links(gen.instance));
            if (!v.feasible()) continue;
            const MarginReport rep =
                is_P_feasible(gen.instance, all_links(gen.instance), v.power, 1.0);
            CHECK(rep.ok);
            for (double m : rep.margins) CHECK(m >= 1.0);
        }
    }
    SUBCASE("three links against a power grid") {
        Rng rng(29);
        int grid_feasible = 0, grid_infeasible = 0;
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const GenResult gen = random_planar(3, 8.0, rng.next_u64());
            const auto S = all_links(gen.instance);
            const FeasibilityVerdict v = exact_feasible(gen.instance, S);
            if (grid_finds_power(gen.instance, S, 1.0)) {
                CHECK(v.feasible()); // a concrete certificate exists
                ++grid_feasible;
            } else if (v.spectral_radius > 1.05) {
                CHECK_FALSE(grid_finds_power(gen.instance, S, 1.0));
                ++grid_infeasible;
            }
        }
        CHECK(grid_feasible > 0);
    }
    SUBCASE("zero directed distance is infeasible") {
        Metric m = Metric::euclidean(1);
        const int a = m.add_point({0.0}), b = m.add_point({1.0}), c = m.add_point({2.0});
        LinkInstance inst(std::move(m), {});
        inst.add_link(1, a, b);
        inst.add_link(2, b, c); // s_2 = r_1
        CHECK(exact_feasible(inst, all_links(inst)).kind ==
              FeasibilityVerdict::Kind::Infeasible);
    }
    SUBCASE("identical links sit on the spectral boundary") {
        Metric m = Metric::euclidean(1);
        const int a = m.add_point({0.0}), b = m.add_point({1.0});
        LinkInstance inst(std::move(m), {});
        inst.add_link(1, a, b);
        inst.add_link(2, a, b);
        const FeasibilityVerdict v = exact_feasible(inst, all_links(inst));
        CHECK(v.kind == FeasibilityVerdict::Kind::Unknown);
        CHECK(v.spectral_radius == doctest::Approx(1.0));
    }
    SUBCASE("noise is covered by the certificate scaling") {
        const LinkInstance inst = line_instance({1.0, 2.0}, 50.0, SinrParams{3.0, 1.0, 0.5});
        const FeasibilityVerdict v = exact_feasible(inst, all_links(inst));
        REQUIRE(v.feasible());
        CHECK(is_P_feasible(inst, all_links(inst), v.power, 1.0).ok);
    }
}

TEST_CASE("margin check") {
    const LinkInstance inst = line_instance({1.0});
    const std::vector<double> P{2.0};
    const MarginReport rep = is_P_feasible(inst, std::vector<int>{0}, P, 1.0);
    CHECK(rep.ok);
    CHECK(std::isinf(rep.margins[0]));
    CHECK_THROWS(is_P_feasible(inst, std::vector<int>{0}, std::vector<double>{-1.0}, 1.0));
    CHECK_THROWS(is_P_feasible(inst, std::vector<int>{0}, std::vector<double>{}, 1.0));
}

TEST_CASE("no power assignment rescues a pairwise-infeasible pair") {
    const LinkInstance inst = line_instance({1.0, 1.0}, 0.1);
    REQUIRE_FALSE(pairwise_feasible(inst, 0, 1, 1.0));
    Rng rng(41);
    for (int t = 0; t < 1000; ++t) {
        const std::vector<double> P{rng.log_uniform(1e-6, 1e6), rng.log_uniform(1e-6, 1e6)};
        CHECK_FALSE(is_P_feasible(inst, all_links(inst), P, 1.0).ok);
    }
}

TEST_CASE("signal strengthening") {
    SUBCASE("identity cases") {
        const LinkInstance inst = line_instance({1.0, 1.0}, 100.0);
        const FeasibilityVerdict v = exact_feasible(inst, all_links(inst));
        REQUIRE(v.feasible());
        const StrengthenResult same =
            strengthen_partition(inst, all_links(inst), v.power, 1.0, 0.5);
        CHECK(same.slots.size() == 1);
        CHECK(same.within_bound);
    }
    SUBCASE("doubling the threshold stays within four slots") {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            const GenResult gen = random_planar(10, 32.0, seed);
            const auto S = all_links(gen.instance);
            const FeasibilityVerdict v = exact_feasible(gen.instance, S);
            if (!v.feasible()) continue;
            const StrengthenResult res = strengthen_partition(gen.instance, S, v.power, 1.0, 2.0);
            CHECK(res.bound == 4);
            CHECK(res.slots.size() <= 4);
            std::size_t members = 0;
            for (const auto& slot : res.slots) {
                members += slot.size();
                std::vector<double> pw;
                for (int i : slot)
                    for (std::size_t a = 0; a < S.size(); ++a)
                        if (S[a] == i) pw.push_back(v.power[a]);
                CHECK(is_P_feasible(gen.instance, slot, pw, 2.0).ok);
            }
            CHECK(members == S.size());
        }
    }
    SUBCASE("rejects infeasible input") {
        const LinkInstance inst = line_instance({1.0, 1.0}, 0.1);
        CHECK_THROWS(strengthen_partition(inst, all_links(inst),
                                          std::vector<double>{1.0, 1.0}, 1.0, 2.0));
    }
}

TEST_CASE("necessary condition check") {
    SUBCASE("singleton") {
        const LinkInstance inst = line_instance({1.0});
        const NecessaryReport rep = necessary_check(inst, std::vector<int>{0});
        CHECK(rep.feasible_3a);
        CHECK(rep.influence == 0.0);
        CHECK(rep.pass);
    }
    SUBCASE("refuses non-fading metrics") {
        std::vector<std::vector<double>> d{{0, 1}, {1, 0}};
        LinkInstance inst(Metric::matrix(d, 3.5), SinrParams{3.0, 1.0, 0.0});
        inst.add_link(1, 0, 1);
        CHECK_THROWS(necessary_check(inst, std::vector<int>{0}));
    }
    SUBCASE("feasible sampled sets stay bounded") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const GenResult gen = random_planar(8, 32.0, seed);
            const NecessaryReport rep = necessary_check(gen.instance, all_links(gen.instance));
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("scale invariance") {
    Rng rng(55);
    for (int t = 0; t < 50; ++t) {
        const GenResult gen = random_planar(8, 16.0, rng.next_u64());
        const LinkInstance& inst = gen.instance;
        const double s = rng.log_uniform(1e-3, 1e3);

        Metric scaled = Metric::euclidean(2);
        std::vector<std::pair<int, int>> nodes;
        for (int i = 0; i < inst.size(); ++i) {
            const auto& sp = inst.metric().point(inst.link(i).sender);
            const auto& rp = inst.metric().point(inst.link(i).receiver);
            nodes.emplace_back(scaled.add_point({sp[0] * s, sp[1] * s}),
                               scaled.add_point({rp[0] * s, rp[1] * s}));
        }
        LinkInstance copy(std::move(scaled), inst.sinr());
        for (int i = 0; i < inst.size(); ++i)
            copy.add_link(inst.link(i).id, nodes[i].first, nodes[i].second);

        const SublinearFn f = SublinearFn::tlog(1.0, 3.0, 2.0);
        for (int i = 0; i < inst.size(); ++i)
            for (int j = i + 1; j < inst.size(); ++j) {
                CHECK(f_adjacent(inst, f, i, j) == f_adjacent(copy, f, i, j));
                CHECK(pairwise_feasible(inst, i, j, 1.0) == pairwise_feasible(copy, i, j, 1.0));
                CHECK(influence(inst, j, i) ==
                      doctest::Approx(influence(copy, j, i)).epsilon(1e-9));
            }
        CHECK(exact_feasible(inst, all_links(inst)).feasible() ==
              exact_feasible(copy, all_links(copy)).feasible());
    }
}

TEST_CASE("pairwise feasibility implies graph-side separation") {
    Rng rng(61);
    for (int t = 0; t < 2000; ++t) {
        const LinkInstance inst = random_pair(rng, SinrParams{3.0, 1.0, 0.0});
        for (double gamma : {1.0, 2.0, 4.0}) {
            const double p = std::pow(gamma + 1.0, 3.0);
            if (!pairwise_feasible(inst, 0, 1, p)) continue;
            CHECK(inst.link_dist(0, 1) >
                  gamma * std::min(inst.link(0).length, inst.link(1).length));
        }
    }
}
