#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sinrc/conflict.hpp"
#include "sinrc/generators.hpp"

using namespace sinrc;
using namespace sinrc::testing;

TEST_CASE("adjacency predicate") {
    SUBCASE("unit links close together") {
        const LinkInstance inst = line_instance({1.0, 1.0}, 0.5);
        CHECK(f_adjacent(inst, SublinearFn::constant(1.0), 0, 1));
        CHECK_THROWS(f_adjacent(inst, SublinearFn::constant(1.0), 0, 0));
    }
    SUBCASE("log separation") {
        // l = 1 and 16 at distance 5: f(16) = 4 < 5, independent.
        const LinkInstance inst = line_instance({1.0, 16.0}, 5.0);
        CHECK_FALSE(f_adjacent(inst, SublinearFn::log2fn(), 0, 1));
        // At distance 4 the pair sits on the boundary and is adjacent.
        const LinkInstance tight = line_instance({1.0, 16.0}, 4.0);
        CHECK(f_adjacent(tight, SublinearFn::log2fn(), 0, 1));
    }
    SUBCASE("chain pairs are all adjacent") {
        const GenResult gen = chain_clique(4, SublinearFn::log2fn());
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                CHECK(f_adjacent(gen.instance, SublinearFn::log2fn(), i, j));
    }
}

TEST_CASE("graph construction") {
    SUBCASE("single vertex") {
        const LinkInstance inst = line_instance({1.0});
        const ConflictGraph g(inst, SublinearFn::constant(1.0));
        CHECK(g.size() == 1);
        CHECK(g.edge_count() == 0);
        CHECK(g.post_neighbors(0).empty());
    }
    SUBCASE("unit construction is edgeless") {
        const GenResult gen = unit_metric_clique(8, SublinearFn::constant(2.0));
        const ConflictGraph g(gen.instance, SublinearFn::constant(2.0));
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("chain is complete") {
        const GenResult gen = chain_clique(4, SublinearFn::log2fn());
        const ConflictGraph g(gen.instance, SublinearFn::log2fn());
        CHECK(g.edge_count() == 6);
        CHECK(g.max_post_degree() == 3);
    }
    SUBCASE("symmetry on a random instance") {
        const GenResult gen = random_planar(50, 128.0, 21);
        const ConflictGraph g(gen.instance, SublinearFn::tlog(1.0, 3.0, 2.0));
        for (int i = 0; i < g.size(); ++i)
            for (int j = 0; j < g.size(); ++j) CHECK(g.adjacent(i, j) == g.adjacent(j, i));
    }
    SUBCASE("post-neighbors are the longer neighbors") {
        const GenResult gen = random_planar(40, 64.0, 4);
        const ConflictGraph g(gen.instance, SublinearFn::tlog(1.0, 3.0, 2.0));
        const LinkInstance& inst = gen.instance;
        for (int i = 0; i < g.size(); ++i)
            for (int j : g.post_neighbors(i)) {
                CHECK(g.adjacent(i, j));
                CHECK(inst.shorter(i, j));
            }
    }
}

TEST_CASE("edges grow with f") {
    const GenResult gen = random_planar(60, 256.0, 8);
    const SublinearFn small = SublinearFn::constant(1.0);
    const SublinearFn big = SublinearFn::tlog(1.0, 3.0, 2.0); // >= 1 pointwise
    const ConflictGraph gs(gen.instance, small);
    const ConflictGraph gb(gen.instance, big);
    for (int i = 0; i < gs.size(); ++i)
        for (int j = 0; j < gs.size(); ++j)
            if (gs.adjacent(i, j)) CHECK(gb.adjacent(i, j));
}

TEST_CASE("B measure") {
    CHECK(b_measure(line_instance({1.0}), SublinearFn::constant(1.0)) == 1);
    SUBCASE("clique") {
        const GenResult gen = chain_clique(4, SublinearFn::log2fn());
        CHECK(b_measure(gen.instance, SublinearFn::log2fn()) == 4);
    }
    SUBCASE("edgeless") {
        const GenResult gen = unit_metric_clique(6, SublinearFn::constant(2.0));
        CHECK(b_measure(gen.instance, SublinearFn::constant(2.0)) == 1);
    }
    SUBCASE("matches one plus max post-degree for distinct lengths") {
        const GenResult gen = random_planar(50, 64.0, 17);
        const SublinearFn f = SublinearFn::tlog(1.0, 3.0, 2.0);
        const ConflictGraph g(gen.instance, f);
        CHECK(b_measure(gen.instance, f) == 1 + g.max_post_degree());
    }
    CHECK_THROWS(b_measure(LinkInstance(Metric::euclidean(1), {}), SublinearFn::constant(1.0)));
}

TEST_CASE("sector cover") {
    SUBCASE("no longer neighbors") {
        Metric m = Metric::euclidean(2);
        const int a = m.add_point({0.0, 0.0}), b = m.add_point({1.0, 0.0});
        LinkInstance planar(std::move(m), {});
        planar.add_link(1, a, b);
        const ConflictGraph g(planar, SublinearFn::constant(1.0));
        const auto res = sector_clique_cover(g, 0);
        CHECK(res.ok());
        CHECK(res.cliques.empty());
    }
    SUBCASE("dimension restriction") {
        const LinkInstance inst = line_instance({1.0, 2.0});
        const ConflictGraph g(inst, SublinearFn::constant(1.0));
        CHECK_THROWS(sector_clique_cover(g, 0));
    }
    SUBCASE("random planar instances produce clique covers") {
        const SublinearFn fams[] = {SublinearFn::tlog(1.0, 3.0, 2.0), SublinearFn::log2fn(),
                                    SublinearFn::power(0.5)};
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const GenResult gen = random_planar(60, 512.0, seed);
            for (const auto& f : fams) {
                const ConflictGraph g(gen.instance, f);
                for (int i = 0; i < g.size(); ++i) {
                    const auto res = sector_clique_cover(g, i);
                    CHECK(res.ok());
                    CHECK(res.cliques.size() <= 12);
                    std::size_t covered = 0;
                    for (const auto& c : res.cliques) covered += c.size();
                    CHECK(covered == g.post_neighbors(i).size());
                }
            }
        }
    }
}
