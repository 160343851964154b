#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "latpoly/error.hpp"
#include "latpoly/geometry.hpp"
#include "latpoly/oracle.hpp"
#include "latpoly/transform.hpp"

using namespace latpoly;

namespace {

LatticePolytope square() { return build_polytope({{1, 4}, {3, 2}}, {{3, 4}, {1, 2}}); }

// (1,4) -> (3,4) -> (3,5) -> (2,5) -> (2,6) -> (1,6)
LatticePolytope l_shape() { return build_polytope({{1, 4}, {3, 5}, {2, 6}}, {{3, 4}, {2, 5}, {1, 6}}); }

LatticePolytope figure_eight() {
    return build_polytope({{1, 5}, {2, 6}, {3, 8}, {4, 7}}, {{1, 6}, {2, 7}, {3, 5}, {4, 8}});
}

std::vector<LatticePolytope> all_instances(int n) {
    std::vector<LatticePolytope> out;
    for (const auto& s : all_permutations(n))
        for (const auto& t : all_permutations(n)) out.push_back(polytope_from_sigmas(s, t));
    return out;
}

std::vector<coord> xs_of(const PointSet& a, const PointSet& b) {
    std::set<coord> s;
    for (auto p : a) s.insert(p.x);
    for (auto p : b) s.insert(p.x);
    return {s.begin(), s.end()};
}

std::vector<coord> ys_of(const PointSet& a, const PointSet& b) {
    std::set<coord> s;
    for (auto p : a) s.insert(p.y);
    for (auto p : b) s.insert(p.y);
    return {s.begin(), s.end()};
}

// cellwise winding of p on the grid spanned by every vertex value of p
std::vector<int> winding_grid(const LatticePolytope& p, const std::vector<coord>& xs, const std::vector<coord>& ys) {
    auto a = arrangement(p.edges(), xs, ys);
    REQUIRE(a.xs == xs);
    REQUIRE(a.ys == ys);
    return a.winding;
}

std::vector<int> rect_grid(const Rectangle& r, int s, const std::vector<coord>& xs, const std::vector<coord>& ys) {
    std::vector<int> w((xs.size() - 1) * (ys.size() - 1), 0);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        for (std::size_t j = 0; j + 1 < ys.size(); ++j)
            if (r.x0() <= xs[i] && xs[i + 1] <= r.x1() && r.y0() <= ys[j] && ys[j + 1] <= r.y1())
                w[i * (ys.size() - 1) + j] = s;
    return w;
}

int sign(coord v) { return (v > 0) - (v < 0); }

}  // namespace

TEST_CASE("apply_move swaps corners") {
    PointSet s{{1, 4}, {3, 2}};
    auto t = apply_move(s, {{1, 4}, {3, 2}});
    CHECK(t == PointSet{{1, 2}, {3, 4}});
    CHECK(apply_move(t, {{1, 2}, {3, 4}}) == s);
    CHECK_THROWS_AS(apply_move(s, {{1, 5}, {3, 2}}), Error);
    CHECK_THROWS_AS(apply_move({{1, 4}, {1, 2}}, {{1, 4}, {1, 2}}), Error);
}

TEST_CASE("apply_move conserves coordinate multisets") {
    PointSet s{{1, 6}, {2, 4}, {3, 5}};
    for (auto v : s)
        for (auto w : s) {
            if (v.x == w.x || v.y == w.y) continue;
            auto t = apply_move(s, {v, w});
            std::multiset<coord> a, b, c, d;
            for (auto p : s) a.insert(p.x), c.insert(p.y);
            for (auto p : t) b.insert(p.x), d.insert(p.y);
            CHECK(a == b);
            CHECK(c == d);
            Rectangle r{v, w};
            CHECK(apply_move(t, {r.v_tilde(), r.w_tilde()}) == s);
        }
}

TEST_CASE("apply_mirrored turns nesting into crossing") {
    LatticePresentation d(PointSet{{1, 4}, {4, 1}, {2, 3}, {3, 2}});
    auto e = apply_mirrored(d, {{1, 4}, {2, 3}, true});
    CHECK(e.points() == PointSet{{1, 3}, {2, 4}, {3, 1}, {4, 2}});
    auto up = e.upper();
    CHECK(classify_arc_pair({int(up[0].x), int(up[0].y)}, {int(up[1].x), int(up[1].y)}) == ArcPairClass::crossing);
    CHECK_THROWS_AS(apply_mirrored(d, {{1, 4}, {4, 1}, true}), Error);
}

TEST_CASE("apply_mirrored from crossing with corners on both sides") {
    LatticePresentation d(PointSet{{1, 3}, {3, 1}, {2, 4}, {4, 2}});
    auto e = apply_mirrored(d, {{1, 3}, {4, 2}, true});
    CHECK(e.points() == PointSet{{1, 2}, {2, 1}, {3, 4}, {4, 3}});
    auto up = e.upper();
    CHECK(classify_arc_pair({int(up[0].x), int(up[0].y)}, {int(up[1].x), int(up[1].y)}) == ArcPairClass::separated);
}

TEST_CASE("apply_polytope_move") {
    auto p = apply_polytope_move(square(), {{1, 4}, {3, 2}});
    CHECK(is_trivial(p));
    CHECK(p.isolated().size() == 2);

    auto id = build_polytope({{1, 5}, {2, 6}, {3, 7}, {4, 8}}, {{1, 5}, {2, 6}, {3, 7}, {4, 8}});
    CHECK(is_trivial(id));
    auto q = apply_polytope_move(id, {{1, 5}, {2, 6}});
    CHECK_FALSE(is_trivial(q));
    CHECK(q.cycles().size() == 1);
    CHECK(q.cycles()[0].size() == 4);
    CHECK(area_abs(q) == 1);
    CHECK_THROWS_AS(apply_polytope_move(square(), {{2, 4}, {3, 2}}), Error);
}

TEST_CASE("sequence_area") {
    TransformationSequence s{square().ver0(), square().ver1(), {{{1, 4}, {3, 2}}}, ""};
    auto a = sequence_area(s);
    CHECK(a.cost == 4);
    CHECK(a.signed_area == -4);
    CHECK(sequence_area({square().ver0(), square().ver0(), {}, ""}).cost == 0);
    s.terminal = square().ver0();
    CHECK_THROWS_AS(sequence_area(s), Error);
    TransformationSequence stale{square().ver0(), square().ver1(), {{{1, 4}, {3, 2}}, {{1, 4}, {3, 2}}}, ""};
    try {
        sequence_area(stale);
        FAIL("stale move accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("step 2") != std::string::npos);
    }
}

TEST_CASE("signed sum of any complete sequence equals the signed area, n <= 3") {
    // every walk of at most 4 moves through the move graph that ends at ver1
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : all_instances(n)) {
            std::vector<std::pair<PointSet, coord>> frontier{{p.ver0(), 0}};
            for (int len = 0; len <= 4; ++len) {
                std::vector<std::pair<PointSet, coord>> next;
                for (const auto& [s, sum] : frontier) {
                    if (s == p.ver1()) CHECK(sum == area_signed(p));
                    if (len == 4) continue;
                    for (auto v : s)
                        for (auto w : s)
                            if (v < w && v.x != w.x && v.y != w.y)
                                next.push_back({apply_move(s, {v, w}), sum + signed_rect_area(v, w)});
                }
                frontier = std::move(next);
            }
        }
}

TEST_CASE("used rectangles add up to the winding of the boundary") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : all_instances(n)) {
            auto seq = min_area_polytope(p).witness;
            auto xs = xs_of(p.ver0(), p.ver1()), ys = ys_of(p.ver0(), p.ver1());
            auto target = winding_grid(p, xs, ys);
            std::vector<int> sum(target.size(), 0);
            for (const auto& m : seq.moves) {
                auto r = rect_grid(m.rect(), sign(signed_rect_area(m.rect())), xs, ys);
                for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += r[k];
            }
            CHECK(sum == target);
        }
}

TEST_CASE("tight moves") {
    auto sq = square();
    CHECK(is_tight(sq, {{1, 4}, {3, 2}}));
    CHECK(tight_moves(sq).size() == 1);
    auto l = l_shape();
    auto tm = tight_moves(l);
    CHECK_FALSE(tm.empty());
    for (const auto& m : tm) CHECK(area_abs(apply_polytope_move(l, m)) == area_abs(l) - m.rect().area());
    for (auto v : l.ver0())
        for (auto w : l.ver0()) {
            if (v == w || v.x == w.x || v.y == w.y) continue;
            bool tight = std::find(tm.begin(), tm.end(), Move{std::min(v, w), std::max(v, w)}) != tm.end();
            CHECK(tight == is_tight(l, {v, w}));
        }
}

TEST_CASE("peel_rectangle on the square and the L-shape") {
    auto pe = peel_rectangle(square());
    CHECK(pe.rect.area() == 4);
    CHECK(pe.pieces.empty());

    auto l = l_shape();
    CHECK(area_abs(l) == 3);
    auto pl = peel_rectangle(l);
    CHECK(valid_peel(l, pl.rect));
    coord sum = pl.rect.area();
    for (const auto& q : pl.pieces) {
        CHECK(is_simple(q));
        sum += area_abs(q);
    }
    CHECK(sum == area_abs(l));
    CHECK_THROWS_AS(peel_rectangle(figure_eight()), Error);
}

TEST_CASE("valid_peel characterises moves leaving simple pieces of the remaining region, n <= 4") {
    bool saw_corner_only = false;
    for (int n = 1; n <= 4; ++n)
        for (const auto& q : all_instances(n)) {
            if (!is_simple(q)) continue;
            auto xs = xs_of(q.ver0(), q.ver1()), ys = ys_of(q.ver0(), q.ver1());
            auto wq = winding_grid(q, xs, ys);
            int s = sign(area_signed(q));
            auto iso = q.isolated();
            for (auto v : q.ver0())
                for (auto w : q.ver0()) {
                    if (!(v < w) || v.x == w.x || v.y == w.y) continue;
                    if (contains(iso, v) || contains(iso, w)) {
                        CHECK_FALSE(valid_peel(q, {v, w}));
                        continue;
                    }
                    Rectangle r{v, w};
                    auto after = apply_polytope_move(q, {v, w});
                    auto wa = winding_grid(after, xs, ys);
                    auto wr = rect_grid(r, s, xs, ys);
                    bool subtracts = true;
                    for (std::size_t k = 0; k < wq.size(); ++k) subtracts &= wa[k] == wq[k] - wr[k] && (wa[k] == 0 || wa[k] == s);
                    for (const auto& piece : component_polytopes(after)) subtracts &= is_simple(piece);
                    CHECK(valid_peel(q, r) == subtracts);
                    if (region_contains(q, r) && !boundary_interval_overlap(q, r)) {
                        saw_corner_only = true;
                        CHECK_FALSE(valid_peel(q, r));
                    }
                    if (!region_contains(q, r)) CHECK_FALSE(valid_peel(q, r));
                }
        }
    CHECK(saw_corner_only);
}

TEST_CASE("transform_simple") {
    auto s = transform_simple(square());
    CHECK(s.moves.size() == 1);
    CHECK(sequence_area(s).cost == 4);
    auto l = transform_simple(l_shape());
    CHECK(l.moves.size() == 2);
    CHECK(sequence_area(l).cost == area_abs(l_shape()));
    CHECK(l.terminal == l_shape().ver1());
    CHECK_THROWS_AS(transform_simple(figure_eight()), Error);
}

TEST_CASE("transform_simple matches the oracle on simple polytopes, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& q : all_instances(n)) {
            if (!is_simple(q)) continue;
            auto s = transform_simple(q);
            CHECK(sequence_area(s).cost == area_abs(q));
            CHECK(min_area_polytope(q).cost == area_abs(q));
            CHECK(s.moves.size() + 1 == q.cycles()[0].size() / 2);
        }
}

TEST_CASE("transform_with_holes") {
    auto outer = build_polytope({{1, 12}, {6, 7}}, {{6, 12}, {1, 7}});
    auto hole = build_polytope({{3, 9}, {4, 10}}, {{4, 9}, {3, 10}});
    auto s = transform_with_holes(outer, {hole});
    CHECK(sequence_area(s).cost == 25 - 1);
    auto ring = union_of(outer, hole);
    CHECK(min_area_polytope(ring).cost == 24);
    CHECK(transform_with_holes(square(), {}).moves.size() == 1);

    auto same = build_polytope({{3, 10}, {4, 9}}, {{4, 10}, {3, 9}});
    CHECK_THROWS_AS(transform_with_holes(outer, {same}), Error);
    auto outside = build_polytope({{8, 13}, {9, 14}}, {{9, 13}, {8, 14}});
    CHECK_THROWS_AS(transform_with_holes(outer, {outside}), Error);
}

TEST_CASE("transform_with_holes with two holes") {
    auto outer = build_polytope({{1, 20}, {9, 11}}, {{9, 20}, {1, 11}});
    auto h1 = build_polytope({{2, 13}, {4, 15}}, {{4, 13}, {2, 15}});
    auto h2 = build_polytope({{6, 16}, {7, 18}}, {{7, 16}, {6, 18}});
    auto s = transform_with_holes(outer, {h1, h2});
    coord expect = 8 * 9 - 4 - 2;
    CHECK(sequence_area(s).cost == expect);
    auto all = union_of(union_of(outer, h1), h2);
    CHECK(min_area_polytope(all).cost == expect);
}

TEST_CASE("condition 1") {
    CHECK(satisfies_condition1(square()));
    CHECK(satisfies_condition1(l_shape()));
    CHECK_FALSE(satisfies_condition1(figure_eight()));
    // 6x6 square around a 2x2 square, same orientation: winding 2 inside
    auto nested = build_polytope({{1, 12}, {6, 7}, {3, 10}, {4, 9}}, {{6, 12}, {1, 7}, {4, 10}, {3, 9}});
    CHECK(satisfies_condition1(nested));
    auto a = arrangement(nested.edges());
    int maxw = 0;
    for (int w : a.winding) maxw = std::max(maxw, std::abs(w));
    CHECK(maxw == 2);
    auto opposite = build_polytope({{1, 12}, {6, 7}, {3, 9}, {4, 10}}, {{6, 12}, {1, 7}, {4, 9}, {3, 10}});
    CHECK_FALSE(satisfies_condition1(opposite));
}

TEST_CASE("every simple polytope satisfies condition 1, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& q : all_instances(n))
            if (is_simple(q)) CHECK(satisfies_condition1(q));
}

TEST_CASE("embedded cycles and seifert circles of the figure-eight") {
    auto f = figure_eight();
    CHECK(embedded_cycles(f).size() == 2);
    auto circles = seifert_circles(f);
    CHECK(circles.size() == 2);
    std::set<int> signs;
    for (const auto& c : circles) signs.insert(sign(shoelace_area(c)));
    CHECK(signs == std::set<int>{-1, 1});
}

TEST_CASE("condition 2 on two squares touching at a crossing") {
    auto found = false;
    for (const auto& p : all_instances(3)) {
        if (!satisfies_condition2(p) || is_connected(p) == false) continue;
        auto s = minimal_transformation(p);
        CHECK(sequence_area(s).cost == area_abs(p));
        CHECK(min_area_polytope(p).cost == area_abs(p));
        found = true;
    }
    CHECK(found);
}

TEST_CASE("minimal_transformation") {
    auto s = minimal_transformation(square());
    CHECK(s.method == "peel");
    CHECK(sequence_area(s).cost == 4);
    auto gap = build_polytope({{1, 6}, {2, 8}, {3, 5}, {4, 7}}, {{1, 7}, {2, 5}, {3, 8}, {4, 6}});
    CHECK_THROWS_AS(minimal_transformation(gap), Error);

    bool one_crossing = false;
    for (const auto& p : all_instances(4)) {
        if (!satisfies_condition1(p) || crossing_count(p) != 1) continue;
        auto t = minimal_transformation(p);
        CHECK(sequence_area(t).cost == area_abs(p));
        CHECK(min_area_polytope(p).cost == area_abs(p));
        one_crossing = true;
    }
    CHECK(one_crossing);
}

TEST_CASE("divisions") {
    CHECK(count_divisions(square()) == 1);
    auto ds = enumerate_divisions(square());
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].size() == 1);
    auto l = l_shape();
    CHECK(count_divisions(l) == enumerate_divisions(l).size());
    CHECK(count_divisions(l) == count_min_sequences(l));
    for (const auto& d : enumerate_divisions(l)) {
        coord sum = 0;
        for (const auto& r : d) sum += r.area();
        CHECK(sum == area_abs(l));
    }
    CHECK_THROWS_AS(count_divisions(figure_eight()), Error);
}

TEST_CASE("division count equals the minimal sequence count, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& q : all_instances(n))
            if (is_simple(q) && q.isolated().empty()) CHECK(count_divisions(q) == count_min_sequences(q));
}

TEST_CASE("condition 2 rejects pieces touching in a ring") {
    // two crossing bars of opposite orientation: four arms around a zero-winding centre
    auto plus = build_polytope({{1, 6}, {2, 8}, {3, 5}, {4, 7}}, {{1, 7}, {2, 5}, {3, 8}, {4, 6}});
    CHECK(seifert_circles(plus).size() == 4);
    CHECK_FALSE(satisfies_condition2(plus));
    CHECK_FALSE(satisfies_condition1(plus));
    CHECK(min_area_polytope(plus).cost > area_abs(plus));
}

TEST_CASE("chord construction agrees with the chord oracle, three arcs") {
    std::vector<coord> vals{1, 2, 3, 4, 5, 6};
    auto ms = enumerate_matchings(vals);
    int built = 0;
    for (const auto& d : ms)
        for (const auto& d2 : ms) {
            auto s = construct_chord_transformation(d, d2);
            if (!s) continue;
            ++built;
            auto a = sequence_area(*s);
            CHECK(a.cost == min_area_chord(d, d2).cost);
            CHECK(2 * a.cost == area_abs(full_polytope(d, d2)));
        }
    CHECK(built > 0);
}
