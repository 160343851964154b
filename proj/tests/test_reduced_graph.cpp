#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "json.hpp"
#include "latpoly/error.hpp"
#include "latpoly/geometry.hpp"
#include "latpoly/oracle.hpp"
#include "latpoly/reduced_graph.hpp"

using namespace latpoly;

namespace {

LatticePolytope square() { return build_polytope({{1, 4}, {3, 2}}, {{3, 4}, {1, 2}}); }

LatticePolytope figure_eight() {
    return build_polytope({{1, 5}, {2, 6}, {3, 8}, {4, 7}}, {{1, 6}, {2, 7}, {3, 5}, {4, 8}});
}

LatticePolytope gap_witness() {
    return build_polytope({{1, 6}, {2, 8}, {3, 5}, {4, 7}}, {{1, 7}, {2, 5}, {3, 8}, {4, 6}});
}

std::vector<Point> box(coord x0, coord y0, coord x1, coord y1, bool ccw) {
    std::vector<Point> c{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    if (!ccw) std::reverse(c.begin(), c.end());
    return c;
}

ImmersedGraph rotated(const ImmersedGraph& g) {
    ImmersedGraph h;
    for (const auto& c : g.curves) {
        std::vector<Point> d;
        for (auto p : c) d.push_back({50 - p.y, p.x});
        h.curves.push_back(d);
    }
    for (auto m : g.marks) h.marks.push_back({50 - m.y, m.x});
    h.marks = normalized(h.marks);
    return h;
}

std::set<int> labels(const GraphAnalysis& an) { return {an.face_labels().begin(), an.face_labels().end()}; }

std::pair<std::size_t, std::size_t> measure(const ImmersedGraph& g) {
    GraphAnalysis an(g);
    return {an.crossings().size() + g.curves.size(), g.marks.size()};
}

}  // namespace

TEST_CASE("from_polytope on the square") {
    auto g = from_polytope(square());
    REQUIRE(g.curves.size() == 1);
    CHECK(g.marks.size() == 2);
    GraphAnalysis an(g);
    CHECK(an.crossings().empty());
    REQUIRE(an.arcs().size() == 1);
    CHECK(an.arcs()[0].closed);
    CHECK(an.arcs()[0].marks.size() == 2);
    CHECK(labels(an) == std::set<int>{-1, 0});
    CHECK(an.label(an.outer_face()) == 0);
    CHECK(an.labels_consistent());
}

TEST_CASE("from_polytope drops isolated vertices") {
    CHECK(from_polytope(build_polytope({{1, 3}, {2, 4}}, {{1, 3}, {2, 4}})).empty());
    auto g = from_polytope(build_polytope({{1, 6}, {2, 5}, {3, 4}}, {{3, 6}, {2, 5}, {1, 4}}));
    CHECK(g.curves.size() == 1);
    CHECK(g.marks.size() == 2);
}

TEST_CASE("from_polytope on the figure-eight") {
    GraphAnalysis an(from_polytope(figure_eight()));
    CHECK(an.crossings().size() == 1);
    CHECK(an.arcs().size() == 2);
    CHECK(labels(an) == std::set<int>{-1, 0, 1});
    CHECK(an.labels_consistent());
    for (const auto& a : an.arcs()) CHECK(a.pts.front() == an.crossings()[0].first);
}

TEST_CASE("deformation I keeps one mark") {
    ImmersedGraph g{{box(0, 0, 4, 4, true)}, normalized({{1, 0}, {4, 2}, {2, 4}})};
    GraphAnalysis an(g);
    auto sites = an.sites();
    Site s{Deformation::I, {0}, -1, 0};
    REQUIRE(std::find(sites.begin(), sites.end(), s) != sites.end());
    auto h = apply_deformation(g, s);
    CHECK(h.curves.size() == 1);
    CHECK(h.marks.size() == 1);
    CHECK(GraphAnalysis(h).labels_consistent());
}

TEST_CASE("deformation IV deletes a marked circle with a nonzero label") {
    ImmersedGraph g{{box(0, 0, 2, 2, true)}, {{1, 0}}};
    Site s{Deformation::IV, {}, 0, 0};
    CHECK(GraphAnalysis(g).check(s).empty());
    CHECK(apply_deformation(g, s).empty());

    ImmersedGraph bare{{box(0, 0, 2, 2, true)}, {}};
    CHECK(GraphAnalysis(bare).sites().empty());
}

TEST_CASE("deformation IV needs a nonzero label inside") {
    // inner circle of opposite orientation encloses label 0
    ImmersedGraph g{{box(0, 0, 6, 6, true), box(2, 2, 4, 4, false)}, {{3, 2}}};
    Site s{Deformation::IV, {}, 1, 0};
    auto why = GraphAnalysis(g).check(s);
    CHECK(why.find("(IV)") != std::string::npos);
    try {
        apply_deformation(g, s);
        FAIL("inapplicable deformation accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("nonzero") != std::string::npos);
    }
    CHECK_THROWS_AS(apply_deformation(g, {Deformation::I, {0}, -1, 0}), Error);
}

TEST_CASE("deformation III removes a marked monogon") {
    bool seen = false;
    for (const auto& p : generate_instances(4)) {
        auto g = from_polytope(p);
        GraphAnalysis an(g);
        for (const auto& s : an.sites()) {
            if (s.kind != Deformation::III) continue;
            auto h = apply_deformation(g, s);
            CHECK(GraphAnalysis(h).crossings().size() < an.crossings().size());
            CHECK(h.marks.size() <= g.marks.size());
            seen = true;
        }
    }
    CHECK(seen);
}

TEST_CASE("every deformation kind occurs up to n = 4") {
    std::set<Deformation> kinds;
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : generate_instances(n)) {
            auto r = reduce(from_polytope(p));
            kinds.insert(r.trace.begin(), r.trace.end());
        }
    CHECK(kinds.count(Deformation::I));
    CHECK(kinds.count(Deformation::II));
    CHECK(kinds.count(Deformation::III));
    CHECK(kinds.count(Deformation::IV));
}

TEST_CASE("reduce empties simple polygons and keeps the gap witness") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : generate_instances(n))
            if (is_simple(p)) CHECK(reduce(from_polytope(p)).graph.empty());
    CHECK(reduce(from_polytope(build_polytope({{1, 3}, {2, 4}}, {{1, 3}, {2, 4}}))).graph.empty());
    CHECK_FALSE(reduce(from_polytope(gap_witness())).graph.empty());
    CHECK_FALSE(minimal_achievable(gap_witness()));
    CHECK(minimal_achievable(square()));
    CHECK(minimal_achievable(figure_eight()));
}

TEST_CASE("emptiness matches the oracle, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : generate_instances(n))
            CHECK(minimal_achievable(p) == (min_area_polytope(p).cost == area_abs(p)));
}

TEST_CASE("condition instances reduce to the empty graph, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : generate_instances(n))
            if (satisfies_condition1(p) || satisfies_condition2(p)) CHECK(minimal_achievable(p));
}

TEST_CASE("every step keeps labels consistent and lowers the measure") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : generate_instances(n)) {
            auto g = from_polytope(p);
            for (int step = 0; step < 200; ++step) {
                GraphAnalysis an(g);
                CHECK(an.labels_consistent());
                auto sites = an.sites();
                if (sites.empty()) break;
                auto s = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
                auto h = apply_deformation(g, s);
                CHECK(h.marks.size() <= g.marks.size());
                CHECK(measure(h) < measure(g));
                g = h;
            }
        }
}

TEST_CASE("canonical form") {
    CHECK(canonical_form(ImmersedGraph{}) == "empty");
    auto sq = from_polytope(square());
    CHECK(canonical_form(sq) == canonical_form(rotated(sq)));
    CHECK(canonical_form(sq) != canonical_form(from_polytope(reverse(square()))));
    CHECK(canonical_form(sq) != canonical_form(from_polytope(figure_eight())));
    // nesting is part of the form
    ImmersedGraph nested{{box(0, 0, 6, 6, true), box(2, 2, 4, 4, true)}, {}};
    ImmersedGraph apart{{box(0, 0, 2, 2, true), box(4, 0, 6, 2, true)}, {}};
    CHECK(canonical_form(nested) != canonical_form(apart));
    ImmersedGraph shifted{{box(10, 3, 14, 9, true), box(11, 5, 12, 6, true)}, {}};
    CHECK(canonical_form(nested) == canonical_form(shifted));
    for (const auto& p : generate_instances(3)) {
        auto g = from_polytope(p);
        CHECK(canonical_form(g) == canonical_form(rotated(g)));
    }
}

TEST_CASE("random reduction orders agree up to isotopy, n <= 3") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : generate_instances(n)) {
            auto g = from_polytope(p);
            auto first = canonical_form(reduce(g).graph);
            for (int t = 0; t < 10; ++t) CHECK(canonical_form(reduce(g, &rng).graph) == first);
        }
}

TEST_CASE("graph dump") {
    auto j = nlohmann::json::parse(dump_json(from_polytope(figure_eight())));
    CHECK(j["curves"].size() == 1);
    CHECK(j["crossings"].size() == 1);
    CHECK(j["arcs"].size() == 2);
    CHECK(j["circles"][0].size() == 2);
    CHECK(j["marks"].size() == 4);
    CHECK(j["labels_consistent"] == true);
    for (const auto& a : j["arcs"]) CHECK(a["left_label"].get<int>() == a["right_label"].get<int>() + 1);
}
