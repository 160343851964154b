#include "latpoly/transform.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "latpoly/error.hpp"

namespace latpoly {

namespace {

int sign(coord v) { return (v > 0) - (v < 0); }

void check_move_shape(const Move& m) {
    if (m.v == m.w) fail("move corners coincide at " + to_string(m.v));
    if (m.v.x == m.w.x || m.v.y == m.w.y) fail("degenerate rectangle " + to_string(m.v) + "-" + to_string(m.w));
}

std::size_t index_of(const std::vector<coord>& v, coord c) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
}

bool tight_in(const Arrangement& a, const Move& m) {
    auto r = m.rect();
    int s = sign(signed_rect_area(m.v, m.w));
    std::size_t i0 = index_of(a.xs, r.x0()), i1 = index_of(a.xs, r.x1());
    std::size_t j0 = index_of(a.ys, r.y0()), j1 = index_of(a.ys, r.y1());
    for (std::size_t i = i0; i < i1; ++i)
        for (std::size_t j = j0; j < j1; ++j)
            if (s * a.omega(i, j) < 1) return false;
    return true;
}

Arrangement arrangement_with_vertices(const LatticePolytope& p) {
    std::vector<coord> xs, ys;
    for (auto q : p.ver0()) {
        xs.push_back(q.x);
        ys.push_back(q.y);
    }
    return arrangement(p.edges(), xs, ys);
}

bool peel_ok(const LatticePolytope& q, const Move& m) {
    auto after = apply_polytope_move(q, m);
    for (const auto& piece : component_polytopes(after))
        if (!is_simple(piece)) return false;
    return area_abs(after) + m.rect().area() == area_abs(q);
}

}  // namespace

PointSet apply_move(const PointSet& state, const Move& m) {
    check_move_shape(m);
    for (auto c : {m.v, m.w})
        if (!contains(state, c)) fail("stale move: vertex " + to_string(c) + " is not in the current state");
    PointSet out;
    for (auto q : state)
        if (q != m.v && q != m.w) out.push_back(q);
    out.push_back({m.w.x, m.v.y});
    out.push_back({m.v.x, m.w.y});
    return normalized(std::move(out));
}

LatticePresentation apply_mirrored(const LatticePresentation& d, const Move& m) {
    if (m.w == m.v || m.w == swapped(m.v))
        fail("degenerate arc move: w=" + to_string(m.w) + " equals v or its mirror");
    auto first = apply_move(d.points(), {m.v, m.w});
    return LatticePresentation(apply_move(first, {swapped(m.v), swapped(m.w)}));
}

LatticePolytope apply_polytope_move(const LatticePolytope& p, const Move& m) {
    return LatticePolytope::build_relaxed(apply_move(p.ver0(), m), p.ver1());
}

SequenceArea sequence_area(const TransformationSequence& s) {
    SequenceArea out;
    PointSet state = normalized(s.initial);
    for (std::size_t k = 0; k < s.moves.size(); ++k) {
        const auto& m = s.moves[k];
        try {
            state = m.mirrored ? apply_mirrored(LatticePresentation(state), m).points() : apply_move(state, m);
        } catch (const Error& e) {
            fail("replay failed at step " + std::to_string(k + 1) + ": " + e.what());
        }
        out.cost += m.rect().area();
        out.signed_area += signed_rect_area(m.v, m.w);
    }
    if (state != normalized(s.terminal)) fail("replay does not reach the declared terminal state");
    return out;
}

bool is_tight(const LatticePolytope& p, const Move& m) {
    check_move_shape(m);
    auto a = arrangement(p.edges(), {m.v.x, m.w.x}, {m.v.y, m.w.y});
    return tight_in(a, m);
}

std::vector<Move> tight_moves(const LatticePolytope& p) {
    auto a = arrangement_with_vertices(p);
    const auto& v = p.ver0();
    std::vector<Move> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (tight_in(a, {v[i], v[j]})) out.push_back({v[i], v[j]});
    return out;
}

bool valid_peel(const LatticePolytope& q, const Rectangle& r) {
    auto iso = q.isolated();
    for (auto c : {r.v, r.w})
        if (!contains(q.ver0(), c) || contains(iso, c)) return false;
    if (r.v.x == r.w.x || r.v.y == r.w.y) return false;
    return region_contains(q, r) && boundary_interval_overlap(q, r);
}

std::vector<Move> valid_peels(const LatticePolytope& q) {
    std::vector<Move> out;
    auto iso = q.isolated();
    PointSet v;
    for (auto p : q.ver0())
        if (!contains(iso, p)) v.push_back(p);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (valid_peel(q, {v[i], v[j]})) out.push_back({v[i], v[j]});
    return out;
}

Peel peel_rectangle(const LatticePolytope& q) {
    if (!is_simple(q)) fail("peeling needs a simple connected polytope");
    for (const auto& m : valid_peels(q)) {
        if (!peel_ok(q, m)) continue;
        Peel out{m.rect(), {}};
        for (auto& piece : component_polytopes(apply_polytope_move(q, m))) out.pieces.push_back(std::move(piece));
        return out;
    }
    fail("no peelable rectangle found");
}

TransformationSequence transform_simple(const LatticePolytope& q) {
    if (!is_simple(q)) fail("transform_simple needs a simple connected polytope");
    TransformationSequence seq{q.ver0(), q.ver1(), {}, "peel"};
    PointSet state = q.ver0();
    std::vector<LatticePolytope> todo{q};
    while (!todo.empty()) {
        auto piece = todo.back();
        todo.pop_back();
        auto peel = peel_rectangle(piece);
        seq.moves.push_back({peel.rect.v, peel.rect.w});
        state = apply_move(state, seq.moves.back());
        for (auto it = peel.pieces.rbegin(); it != peel.pieces.rend(); ++it) todo.push_back(*it);
    }
    if (state != q.ver1()) fail("peeling did not reach the terminal vertices");
    return seq;
}

namespace {

// depth-first search over tight moves, trying peels of simple components first
class TightSearch {
public:
    explicit TightSearch(PointSet goal) : goal_(std::move(goal)) {}

    bool run(const PointSet& state) {
        if (state == goal_) return true;
        if (dead_.count(state)) return false;
        auto cur = LatticePolytope::build_relaxed(state, goal_);
        auto a = arrangement_with_vertices(cur);
        std::vector<std::pair<Move, bool>> cands;
        for (const auto& comp : component_polytopes(cur)) {
            if (!is_simple(comp)) continue;
            for (const auto& m : valid_peels(comp))
                if (tight_in(a, m)) cands.push_back({m, true});
        }
        for (const auto& m : tight_moves(cur)) {
            bool seen = std::any_of(cands.begin(), cands.end(), [&](const auto& c) { return c.first == m; });
            if (!seen) cands.push_back({m, false});
        }
        for (const auto& [m, peel] : cands) {
            path_.push_back({m, peel});
            if (run(apply_move(state, m))) return true;
            path_.pop_back();
        }
        dead_.insert(state);
        return false;
    }

    TransformationSequence sequence(const PointSet& start) const {
        TransformationSequence seq{start, goal_, {}, "peel"};
        for (const auto& [m, peel] : path_) {
            seq.moves.push_back(m);
            if (!peel) seq.method = "search";
        }
        return seq;
    }

private:
    PointSet goal_;
    std::set<PointSet> dead_;
    std::vector<std::pair<Move, bool>> path_;
};

std::vector<char> interior_cells(const std::vector<Edge>& edges, const std::vector<coord>& xs,
                                 const std::vector<coord>& ys) {
    auto a = arrangement(edges, xs, ys);
    std::vector<char> out(a.winding.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.winding[k] != 0;
    return out;
}

bool subset_of(const std::vector<char>& a, const std::vector<char>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] && !b[k]) return false;
    return true;
}

bool meet(const std::vector<char>& a, const std::vector<char>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] && b[k]) return true;
    return false;
}

}  // namespace

TransformationSequence transform_with_holes(const LatticePolytope& q, const std::vector<LatticePolytope>& holes) {
    if (holes.empty()) return transform_simple(q);
    if (!is_simple(q)) fail("outer polytope is not simple");
    auto combined = q;
    std::vector<coord> xs = coordinate_values_x(q.edges()), ys = coordinate_values_y(q.edges());
    for (const auto& h : holes) {
        if (!is_simple(h)) fail("hole is not simple");
        combined = union_of(combined, h);
    }
    xs = coordinate_values_x(combined.edges());
    ys = coordinate_values_y(combined.edges());
    SiteGrid g(xs, ys);
    auto outer_cells = interior_cells(q.edges(), xs, ys);
    auto outer_boundary = g.boundary(q.edges());
    int outer_sign = sign(area_signed(q));
    coord expect = area_abs(q);
    for (std::size_t i = 0; i < holes.size(); ++i) {
        const auto& h = holes[i];
        if (sign(area_signed(h)) == outer_sign) fail("hole has the same orientation as the outer boundary");
        if (!subset_of(interior_cells(h.edges(), xs, ys), outer_cells) || meet(g.closed_region(h.edges()), outer_boundary))
            fail("hole is not contained in the interior of the outer polytope");
        for (std::size_t j = 0; j < i; ++j)
            if (!regions_disjoint(h.edges(), holes[j].edges())) fail("holes are not mutually disjoint");
        expect -= area_abs(h);
    }
    TightSearch search(combined.ver1());
    if (!search.run(combined.ver0())) fail("no tight transformation exists for this configuration");
    auto seq = search.sequence(combined.ver0());
    seq.method = "search";
    if (sequence_area(seq).cost != expect) fail("holed transformation cost differs from the region area");
    return seq;
}

namespace {

struct PieceGraph {
    std::vector<Point> nodes;
    std::vector<bool> crossing;
    struct Piece {
        int from;
        int to;
        bool horizontal;
    };
    std::vector<Piece> pieces;
    std::vector<int> out_h, out_v;  // piece index or -1

    explicit PieceGraph(const LatticePolytope& p) {
        auto xs = crossings(p.edges());
        std::map<Point, int> id;
        auto node = [&](Point q) {
            auto [it, fresh] = id.emplace(q, static_cast<int>(nodes.size()));
            if (fresh) {
                nodes.push_back(q);
                crossing.push_back(std::binary_search(xs.begin(), xs.end(), q));
                out_h.push_back(-1);
                out_v.push_back(-1);
            }
            return it->second;
        };
        for (const auto& e : p.edges()) {
            std::vector<Point> stops{e.from};
            for (auto c : xs) {
                bool inside = e.vertical() ? (c.x == e.from.x && c.y > std::min(e.from.y, e.to.y) &&
                                              c.y < std::max(e.from.y, e.to.y))
                                           : (c.y == e.from.y && c.x > std::min(e.from.x, e.to.x) &&
                                              c.x < std::max(e.from.x, e.to.x));
                if (inside) stops.push_back(c);
            }
            auto along = [&](Point q) { return e.vertical() ? (q.y - e.from.y) * sign(e.to.y - e.from.y)
                                                            : (q.x - e.from.x) * sign(e.to.x - e.from.x); };
            std::sort(stops.begin(), stops.end(), [&](Point a, Point b) { return along(a) < along(b); });
            stops.push_back(e.to);
            for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
                int a = node(stops[k]), b = node(stops[k + 1]);
                int idx = static_cast<int>(pieces.size());
                pieces.push_back({a, b, !e.vertical()});
                (e.vertical() ? out_v : out_h)[a] = idx;
            }
        }
    }

    int single_out(int n) const { return out_h[n] >= 0 ? out_h[n] : out_v[n]; }
};

void simple_cycles_from(const PieceGraph& g, int start, int at, std::vector<int>& path, std::vector<bool>& on,
                        std::vector<std::vector<Point>>& out) {
    for (int piece : {g.out_h[at], g.out_v[at]}) {
        if (piece < 0) continue;
        int to = g.pieces[piece].to;
        if (to == start) {
            std::vector<Point> cyc;
            for (int n : path) cyc.push_back(g.nodes[n]);
            out.push_back(std::move(cyc));
            continue;
        }
        if (to < start || on[to]) continue;
        on[to] = true;
        path.push_back(to);
        simple_cycles_from(g, start, to, path, on, out);
        path.pop_back();
        on[to] = false;
    }
}

}  // namespace

std::vector<std::vector<Point>> embedded_cycles(const LatticePolytope& p) {
    PieceGraph g(p);
    std::vector<std::vector<Point>> out;
    std::vector<bool> on(g.nodes.size(), false);
    for (int s = 0; s < static_cast<int>(g.nodes.size()); ++s) {
        std::vector<int> path{s};
        on[s] = true;
        simple_cycles_from(g, s, s, path, on, out);
        on[s] = false;
    }
    return out;
}

std::vector<std::vector<Point>> seifert_circles(const LatticePolytope& p) {
    PieceGraph g(p);
    std::vector<bool> used(g.pieces.size(), false);
    std::vector<std::vector<Point>> out;
    for (std::size_t first = 0; first < g.pieces.size(); ++first) {
        if (used[first]) continue;
        std::vector<Point> circle;
        for (int k = static_cast<int>(first); !used[k];) {
            used[k] = true;
            const auto& pc = g.pieces[k];
            circle.push_back(g.nodes[pc.from]);
            int n = pc.to;
            k = g.crossing[n] ? (pc.horizontal ? g.out_v[n] : g.out_h[n]) : g.single_out(n);
        }
        out.push_back(std::move(circle));
    }
    return out;
}

bool satisfies_condition1(const LatticePolytope& p) {
    int seen = 0;
    for (const auto& c : embedded_cycles(p)) {
        int s = sign(shoelace_area(c));
        if (seen != 0 && s != seen) return false;
        seen = s;
    }
    return true;
}

bool satisfies_condition2(const PolytopePair& pair) {
    const auto& p = pair.p;
    if (!regions_disjoint(p.edges(), pair.mirror.edges())) return false;
    if (is_trivial(p)) return true;
    auto xs = coordinate_values_x(p.edges()), ys = coordinate_values_y(p.edges());
    SiteGrid g(xs, ys);
    auto cross = crossings(p.edges());
    struct Circle {
        std::vector<char> cells, closed, boundary;
    };
    std::vector<Circle> circles;
    for (const auto& c : seifert_circles(p)) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < c.size(); ++k) edges.push_back({c[k], c[(k + 1) % c.size()]});
        circles.push_back({interior_cells(edges, xs, ys), g.closed_region(edges), g.boundary(edges)});
    }
    std::size_t m = circles.size();
    auto inside = [&](std::size_t a, std::size_t b) { return a != b && subset_of(circles[a].cells, circles[b].cells); };
    std::vector<bool> top(m, true);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (inside(a, b)) top[a] = false;
    // touching tops must not close a ring around an uncovered region
    std::vector<std::size_t> ring(m);
    std::iota(ring.begin(), ring.end(), 0);
    auto root = [&](std::size_t x) {
        while (ring[x] != x) x = ring[x] = ring[ring[x]];
        return x;
    };
    for (std::size_t a = 0; a < m; ++a) {
        if (!top[a]) continue;
        for (std::size_t b = a + 1; b < m; ++b) {
            if (!top[b]) continue;
            std::vector<std::size_t> shared;
            for (std::size_t k = 0; k < circles[a].closed.size(); ++k)
                if (circles[a].closed[k] && circles[b].closed[k]) shared.push_back(k);
            if (shared.size() > 1) return false;
            if (shared.size() == 1) {
                std::size_t si = shared[0] / g.height(), sj = shared[0] % g.height();
                if (si % 2 || sj % 2) return false;
                Point q{xs[si / 2], ys[sj / 2]};
                if (!std::binary_search(cross.begin(), cross.end(), q)) return false;
                if (root(a) == root(b)) return false;
                ring[root(a)] = root(b);
            }
        }
    }
    for (std::size_t a = 0; a < m; ++a) {
        if (top[a]) continue;
        std::size_t owner = m, owners = 0;
        for (std::size_t b = 0; b < m; ++b) {
            if (!inside(a, b)) continue;
            if (!top[b]) return false;
            owner = b;
            ++owners;
        }
        if (owners != 1) return false;
        if (meet(circles[a].closed, circles[owner].boundary)) return false;
        for (std::size_t b = 0; b < m; ++b)
            if (b != a && !top[b] && meet(circles[a].closed, circles[b].closed)) return false;
    }
    return true;
}

bool satisfies_condition2(const LatticePolytope& p) { return satisfies_condition2(PolytopePair{p, mirror(p)}); }

TransformationSequence minimal_transformation(const LatticePolytope& p) {
    if (!satisfies_condition1(p) && !satisfies_condition2(p))
        fail("minimal construction does not apply: both the orientation and the disjoint-pieces conditions fail; "
             "use the exact oracle");
    TightSearch search(p.ver1());
    if (!search.run(p.ver0())) fail("no tight transformation found although a construction condition holds");
    auto seq = search.sequence(p.ver0());
    if (sequence_area(seq).cost != area_abs(p)) fail("constructed transformation cost differs from area_abs");
    return seq;
}

std::optional<TransformationSequence> construct_chord_transformation(const LatticePresentation& d,
                                                                     const LatticePresentation& d2) {
    std::vector<PolytopePair> pairs;
    try {
        pairs = associated_polytopes(d, d2, Strategy::all);
    } catch (const Error&) {
        return std::nullopt;
    }
    for (const auto& pair : pairs) {
        if (!regions_disjoint(pair.p.edges(), pair.mirror.edges())) continue;
        if (!satisfies_condition1(pair.p) && !satisfies_condition2(pair)) continue;
        auto base = minimal_transformation(pair.p);
        TransformationSequence seq{d.points(), d2.points(), {}, base.method};
        for (auto m : base.moves) seq.moves.push_back({m.v, m.w, true});
        if (sequence_area(seq).cost != area_abs(pair.p)) fail("lifted transformation cost differs from area_abs");
        return seq;
    }
    return std::nullopt;
}

namespace {

std::vector<Move> division_moves(const PointSet& state, const PointSet& goal) {
    auto cur = LatticePolytope::build_relaxed(state, goal);
    std::vector<Move> out;
    for (const auto& comp : component_polytopes(cur)) {
        if (!is_simple(comp)) continue;
        for (const auto& m : valid_peels(comp)) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](const Move& a, const Move& b) {
        return std::pair{a.v, a.w} < std::pair{b.v, b.w};
    });
    return out;
}

void divide(const PointSet& state, const PointSet& goal, Division& cur, std::vector<Division>& out) {
    if (state == goal) {
        out.push_back(cur);
        return;
    }
    for (const auto& m : division_moves(state, goal)) {
        cur.push_back(m.rect());
        divide(apply_move(state, m), goal, cur, out);
        cur.pop_back();
    }
}

std::uint64_t count_from(const PointSet& state, const PointSet& goal, std::map<PointSet, std::uint64_t>& memo) {
    if (state == goal) return 1;
    if (auto it = memo.find(state); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (const auto& m : division_moves(state, goal)) total += count_from(apply_move(state, m), goal, memo);
    memo[state] = total;
    return total;
}

}  // namespace

std::vector<Division> enumerate_divisions(const LatticePolytope& q) {
    if (!is_simple(q)) fail("divisions need a simple connected polytope");
    std::vector<Division> out;
    Division cur;
    divide(q.ver0(), q.ver1(), cur, out);
    return out;
}

std::uint64_t count_divisions(const LatticePolytope& q) {
    if (!is_simple(q)) fail("divisions need a simple connected polytope");
    std::map<PointSet, std::uint64_t> memo;
    return count_from(q.ver0(), q.ver1(), memo);
}

}  // namespace latpoly
