#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latpoly/error.hpp"
#include "latpoly/geometry.hpp"
#include "latpoly/polytope.hpp"

using namespace latpoly;

namespace {

LatticePolytope square() { return build_polytope({{1, 4}, {3, 2}}, {{3, 4}, {1, 2}}); }

LatticePolytope figure_eight() {
    return build_polytope({{1, 5}, {2, 6}, {3, 8}, {4, 7}}, {{1, 6}, {2, 7}, {3, 5}, {4, 8}});
}

std::vector<LatticePolytope> all_instances(int n) {
    std::vector<LatticePolytope> out;
    for (const auto& s : all_permutations(n))
        for (const auto& t : all_permutations(n)) out.push_back(polytope_from_sigmas(s, t));
    return out;
}

// encoding of an arbitrary point set with distinct coordinates
Permutation encoding(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<coord> ys;
    for (auto p : pts) ys.push_back(p.y);
    std::sort(ys.begin(), ys.end());
    Permutation s;
    for (auto p : pts) s.push_back(static_cast<int>(std::lower_bound(ys.begin(), ys.end(), p.y) - ys.begin()) + 1);
    return s;
}

}  // namespace

TEST_CASE("four-cycle construction") {
    auto p = square();
    REQUIRE(p.cycles().size() == 1);
    CHECK(p.cycles()[0] == std::vector<Point>{{1, 2}, {1, 4}, {3, 4}, {3, 2}});
    CHECK(p.edges().size() == 4);
    CHECK(is_connected(p));
    CHECK(is_simple(p));
    CHECK(p.next({1, 4}) == Point{3, 4});
    CHECK(p.isolated().empty());
}

TEST_CASE("isolated vertex and rejected inputs") {
    auto p = build_polytope({{1, 2}}, {{1, 2}});
    CHECK(p.isolated() == PointSet{{1, 2}});
    CHECK(p.cycles().empty());
    CHECK(is_trivial(p));
    CHECK_FALSE(is_connected(p));
    CHECK_FALSE(is_simple(p));
    CHECK_THROWS_AS(build_polytope({{1, 2}}, {{2, 1}}), Error);
    CHECK_THROWS_AS(build_polytope({{1, 2}, {3, 4}}, {{1, 2}}), Error);
    CHECK_THROWS_AS(build_polytope({{1, 2}, {2, 3}}, {{1, 3}, {2, 2}}), Error);
}

TEST_CASE("connectivity and simplicity") {
    auto two = build_polytope({{1, 4}, {3, 2}, {5, 8}, {7, 6}}, {{3, 4}, {1, 2}, {7, 8}, {5, 6}});
    CHECK(two.cycles().size() == 2);
    CHECK_FALSE(is_connected(two));
    auto f8 = figure_eight();
    CHECK(is_connected(f8));
    CHECK(crossing_count(f8) == 1);
    CHECK_FALSE(is_simple(f8));
}

TEST_CASE("sigma encodings") {
    CHECK(sigma(square(), 0) == Permutation{2, 1});
    CHECK(sigma(build_polytope({{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}), 0) == Permutation{1, 2});
    auto p = build_polytope({{1, 6}, {2, 5}, {3, 4}}, {{1, 6}, {2, 5}, {3, 4}});
    CHECK(sigma(p, 0) == reversal_perm(3));
    CHECK_THROWS_AS(sigma(p, 2), Error);
}

TEST_CASE("symmetries are involutions") {
    for (const auto& p : all_instances(3)) {
        CHECK(mirror(mirror(p)) == p);
        CHECK(reverse(reverse(p)) == p);
        CHECK(build_polytope(p.ver0(), p.ver1()) == p);
    }
}

TEST_CASE("rotation of the four-cycle") {
    auto r = rotate(square());
    auto s = sigma(square(), 1);
    // the rotated polytope's terminal side comes from the original initial side
    CHECK(sigma(r, 1) == compose(inverse(sigma(square(), 0)), reversal_perm(2)));
    CHECK(sigma(r, 0) == compose(inverse(s), reversal_perm(2)));
    CHECK(area_signed(r) < 0);
    CHECK(is_simple(r));
}

TEST_CASE("point-set reflection and rotation encodings") {
    for (int n = 1; n <= 6; ++n) {
        auto pi = reversal_perm(n);
        for (const auto& s : all_permutations(n)) {
            std::vector<Point> pts, refl, rot;
            for (int j = 1; j <= n; ++j) {
                pts.push_back({j, s[j - 1]});
                refl.push_back({2 * (n + 1) - j, s[j - 1]});
                rot.push_back({-s[j - 1], j});
            }
            CHECK(encoding(pts) == s);
            CHECK(encoding(refl) == compose(s, pi));
            CHECK(encoding(rot) == compose(inverse(s), pi));
        }
    }
}

TEST_CASE("equivalence") {
    auto p = square();
    CHECK(equivalent(p, p));
    CHECK(equivalent(p, mirror(p)));
    auto a = polytope_from_sigmas({1, 2}, {1, 2});
    auto b = polytope_from_sigmas({1, 2}, {2, 1});
    CHECK_FALSE(equivalent(a, b));
    CHECK_THROWS_AS(equivalent(a, polytope_from_sigmas({1}, {1})), Error);
}

TEST_CASE("symmetries preserve the class") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : all_instances(n)) {
            CHECK(equivalent(p, mirror(p)));
            CHECK(equivalent(p, rotate(reverse(p))));
            CHECK(equivalent(p, reverse(rotate(p))));
            CHECK(canonical_sigmas(p) == canonical_sigmas(mirror(p)));
            CHECK(equivalence_orbit(sigma(p, 0), sigma(p, 1)).size() <= 16);
        }
}

TEST_CASE("associated polytopes") {
    LatticePresentation d({{1, 4}, {4, 1}, {2, 3}, {3, 2}});
    LatticePresentation d2({{1, 2}, {2, 1}, {3, 4}, {4, 3}});
    auto lex = associated_polytopes(d, d2, Strategy::lex);
    REQUIRE(lex.size() == 1);
    CHECK(lex[0].p.ver0() == PointSet{{1, 4}, {3, 2}});
    CHECK(lex[0].p.ver1() == PointSet{{1, 2}, {3, 4}});
    CHECK(lex[0].mirror == mirror(lex[0].p));
    CHECK(associated_polytopes(d, d2, Strategy::all).size() == 2);

    auto id = associated_polytopes(d, d, Strategy::lex);
    CHECK(id[0].p.isolated().size() == 2);
    CHECK(is_trivial(id[0].p));

    LatticePresentation other({{1, 5}, {5, 1}, {2, 3}, {3, 2}});
    CHECK_THROWS_AS(associated_polytopes(d, other, Strategy::lex), Error);
    CHECK_THROWS_AS(parse_strategy("best"), Error);
}

TEST_CASE("associated polytopes cover both presentations") {
    auto ms = enumerate_matchings({1, 2, 3, 4, 5, 6});
    for (const auto& d : ms)
        for (const auto& d2 : ms)
            for (const auto& pair : associated_polytopes(d, d2, Strategy::all)) {
                CHECK(pair.mirror == mirror(pair.p));
                auto u = union_of(pair.p, pair.mirror);
                CHECK(u.ver0() == d.points());
                CHECK(u.ver1() == d2.points());
            }
}
