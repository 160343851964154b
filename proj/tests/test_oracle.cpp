#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <set>

#include "latpoly/error.hpp"
#include "latpoly/geometry.hpp"
#include "latpoly/oracle.hpp"

using namespace latpoly;

namespace {

LatticePolytope square() { return build_polytope({{1, 4}, {3, 2}}, {{3, 4}, {1, 2}}); }

LatticePolytope gap_witness() {
    return build_polytope({{1, 6}, {2, 8}, {3, 5}, {4, 7}}, {{1, 7}, {2, 5}, {3, 8}, {4, 6}});
}

LatticePresentation pres(std::initializer_list<std::pair<int, int>> arcs) {
    PointSet pts;
    for (auto [a, b] : arcs) {
        pts.push_back({a, b});
        pts.push_back({b, a});
    }
    return LatticePresentation(normalized(pts));
}

std::vector<LatticePresentation> matchings(int arcs) {
    std::vector<coord> vals;
    for (int v = 1; v <= 2 * arcs; ++v) vals.push_back(v);
    return enumerate_matchings(vals);
}

}  // namespace

TEST_CASE("oracle on elementary polytopes") {
    auto r = min_area_polytope(square());
    CHECK(r.cost == 4);
    CHECK(r.count == 1);
    CHECK(r.witness.moves.size() == 1);
    CHECK(sequence_area(r.witness).cost == 4);
    CHECK(r.witness.method == "oracle");

    auto id = build_polytope({{1, 3}, {2, 4}}, {{1, 3}, {2, 4}});
    auto z = min_area_polytope(id);
    CHECK(z.cost == 0);
    CHECK(z.count == 1);
    CHECK(z.witness.moves.empty());
    CHECK(count_min_sequences(square()) == 1);
    CHECK(count_min_sequences(id) == 1);
}

TEST_CASE("oracle witness replays to the goal at the reported cost, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : generate_instances(n)) {
            auto r = min_area_polytope(p);
            auto a = sequence_area(r.witness);
            CHECK(a.cost == r.cost);
            CHECK(r.cost >= area_abs(p));
            CHECK(r.count >= 1);
        }
}

TEST_CASE("search graph bookkeeping") {
    auto g = explore_polytope(gap_witness());
    REQUIRE(g.goal_reached);
    CHECK(g.dist[0] == 0);
    CHECK(g.states[0] == gap_witness().ver0());
    CHECK(g.states[g.goal] == gap_witness().ver1());
    for (const auto& a : g.minimal_arcs()) CHECK(g.dist[a.to] == g.dist[a.from] + a.cost);
    CHECK(g.count_minimal() == count_min_sequences(gap_witness()));
    coord sum = 0;
    for (const auto& m : g.witness()) sum += m.rect().area();
    CHECK(sum == g.dist[g.goal]);
}

TEST_CASE("strict gap above the area") {
    auto p = gap_witness();
    CHECK(area_abs(p) == 4);
    CHECK(min_area_polytope(p).cost == 6);
}

TEST_CASE("chord oracle") {
    auto d = pres({{1, 4}, {2, 3}});
    CHECK(min_area_chord(d, d).cost == 0);
    CHECK(count_min_sequences(d, d) == 1);
    auto c = pres({{1, 3}, {2, 4}});
    auto r = min_area_chord(d, c);
    CHECK(r.cost == 1);
    REQUIRE(r.witness.moves.size() == 1);
    CHECK(r.witness.moves[0].mirrored);
    CHECK(sequence_area(r.witness).cost == 1);
    CHECK(explore_chord(d, c).states.size() == 3);
    CHECK_THROWS_AS(min_area_chord(d, pres({{1, 5}, {2, 3}})), Error);
}

TEST_CASE("chord moves pair every rectangle with its mirror") {
    auto d = pres({{1, 4}, {2, 3}, {5, 6}});
    auto ms = chord_moves(d.points());
    CHECK(ms.size() == 6);
    for (const auto& m : ms) {
        CHECK(m.mirrored);
        CHECK(m.v.x < m.v.y);
        auto e = apply_mirrored(d, m);
        CHECK(e.points().size() == d.points().size());
    }
}

TEST_CASE("chord minimum respects the half-area bound, two arcs") {
    for (const auto& d : matchings(2))
        for (const auto& d2 : matchings(2)) {
            coord m = min_area_chord(d, d2).cost;
            coord half = area_abs(full_polytope(d, d2)) / 2;
            CHECK(m >= half);
        }
}

TEST_CASE("oracle minimum is invariant under symmetries, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : generate_instances(n)) {
            auto c = min_area_polytope(p).cost;
            CHECK(min_area_polytope(mirror(p)).cost == c);
            CHECK(min_area_polytope(reverse(p)).cost == c);
            auto [s0, s1] = sigma_pair(p);
            for (const auto& [a, b] : equivalence_orbit(s0, s1)) {
                auto q = polytope_from_sigmas(a, b);
                CHECK(min_area_polytope(q).cost == c);
                CHECK(count_min_sequences(q) == count_min_sequences(p));
            }
        }
}

TEST_CASE("generate_instances") {
    auto one = generate_instances(1);
    REQUIRE(one.size() == 1);
    CHECK(is_trivial(one[0]));
    CHECK(generate_instances(2).size() == 4);
    CHECK(generate_instances(3).size() == 36);
    InstanceFilter simple;
    simple.simple = true;
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : generate_instances(n, simple)) CHECK(is_simple(p));
    InstanceFilter dedup;
    dedup.dedup = true;
    auto classes = generate_instances(3, dedup);
    std::set<std::pair<Permutation, Permutation>> keys;
    for (const auto& p : classes) keys.insert(canonical_sigmas(p));
    CHECK(keys.size() == classes.size());
    std::set<std::pair<Permutation, Permutation>> all;
    for (const auto& p : generate_instances(3)) all.insert(canonical_sigmas(p));
    CHECK(all.size() == classes.size());
}

TEST_CASE("instance filters") {
    InstanceFilter f;
    f.connected = true;
    for (const auto& p : generate_instances(3, f)) CHECK(is_connected(p));
    f = {};
    f.condition1 = true;
    for (const auto& p : generate_instances(3, f)) CHECK(satisfies_condition1(p));
    f = {};
    f.disjoint_mirror = true;
    for (const auto& p : generate_instances(3, f)) CHECK(regions_disjoint(p.edges(), mirror(p).edges()));
}

TEST_CASE("instance keys") {
    CHECK(instance_key(square()) == "2,1|1,2");
    CHECK(instance_key(build_polytope({{1, 2}}, {{1, 2}})) == "1|1");
}

TEST_CASE("oracle bound from the environment") {
    setenv("LATPOLY_ORACLE_BOUND", "2", 1);
    CHECK(oracle_bound() == 2);
    try {
        min_area_polytope(gap_witness());
        FAIL("bound ignored");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource);
    }
    setenv("LATPOLY_ORACLE_BOUND", "abc", 1);
    CHECK_THROWS_AS(oracle_bound(), Error);
    unsetenv("LATPOLY_ORACLE_BOUND");
    CHECK(oracle_bound() == 6);
}

TEST_CASE("count_minimal uses divisions for polygons and the oracle elsewhere") {
    auto l = build_polytope({{1, 4}, {3, 5}, {2, 6}}, {{3, 4}, {2, 5}, {1, 6}});
    CHECK(count_minimal(l) == count_divisions(l));
    CHECK(count_minimal(gap_witness()) == count_min_sequences(gap_witness()));
}

TEST_CASE("census rows") {
    auto rows = census(2);
    CHECK(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK(r.oracle_min >= r.area_abs);
        CHECK(r.reduced_graph_empty == (r.oracle_min == r.area_abs));
    }
    auto t = census_table(rows);
    CHECK(t.rfind("n\tinstance_key\tarea_abs\thalf_area_abs_pair\toracle_min\tf_count\tcondition1\tcondition2\treduced_graph_empty\n", 0) == 0);
    CHECK(std::count(t.begin(), t.end(), '\n') == 5);
}

TEST_CASE("chord gap witness") {
    auto d = pres({{1, 3}, {2, 7}, {4, 6}, {5, 8}});
    auto d2 = pres({{1, 5}, {2, 4}, {3, 8}, {6, 7}});
    GapWitness w;
    REQUIRE(is_chord_gap_witness(d, d2, &w));
    CHECK(w.chord_min == 14);
    for (auto m : w.choice_minima) CHECK(m > 14);
    CHECK(std::count(w.choice_areas.begin(), w.choice_areas.end(), 14) >= 1);
    CHECK_FALSE(is_chord_gap_witness(d, d));
}
