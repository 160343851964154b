#include "latpoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latpoly/error.hpp"
#include "latpoly/geometry.hpp"

namespace latpoly {

namespace {

PointSet checked_set(PointSet pts, const char* side) {
    auto n = pts.size();
    pts = normalized(std::move(pts));
    if (pts.size() != n) fail(std::string("duplicate point in ") + side);
    return pts;
}

std::set<coord> xs_of(const PointSet& s) {
    std::set<coord> out;
    for (auto p : s) out.insert(p.x);
    return out;
}

std::set<coord> ys_of(const PointSet& s) {
    std::set<coord> out;
    for (auto p : s) out.insert(p.y);
    return out;
}

std::string first_difference(const std::set<coord>& a, const std::set<coord>& b) {
    for (auto v : a)
        if (!b.count(v)) return std::to_string(v);
    for (auto v : b)
        if (!a.count(v)) return std::to_string(v);
    return "?";
}

void check_matchable(const PointSet& v0, const PointSet& v1, bool strict) {
    if (v0.size() != v1.size())
        fail("non-matchable vertex sets: |ver0|=" + std::to_string(v0.size()) + " but |ver1|=" + std::to_string(v1.size()));
    auto x0 = xs_of(v0), x1 = xs_of(v1), y0 = ys_of(v0), y1 = ys_of(v1);
    if (x0.size() != v0.size() || x1.size() != v1.size() || y0.size() != v0.size() || y1.size() != v1.size())
        fail("non-matchable vertex sets: a coordinate value repeats within one side");
    if (x0 != x1) fail("non-matchable vertex sets: x-value " + first_difference(x0, x1) + " is not shared by both sides");
    if (y0 != y1) fail("non-matchable vertex sets: y-value " + first_difference(y0, y1) + " is not shared by both sides");
    if (strict)
        for (auto x : x0)
            if (y0.count(x)) fail("non-matchable vertex sets: value " + std::to_string(x) + " is both an x- and a y-value");
}

// rank-compress all coordinate values jointly
std::pair<PointSet, PointSet> compress(const PointSet& v0, const PointSet& v1) {
    std::set<coord> vals;
    for (const auto* s : {&v0, &v1})
        for (auto p : *s) vals.insert({p.x, p.y});
    std::map<coord, coord> rank;
    coord r = 0;
    for (auto v : vals) rank[v] = ++r;
    auto map = [&](const PointSet& s) {
        PointSet out;
        for (auto p : s) out.push_back({rank[p.x], rank[p.y]});
        return out;
    };
    return {map(v0), map(v1)};
}

}  // namespace

LatticePolytope LatticePolytope::build(PointSet v0, PointSet v1) {
    LatticePolytope p;
    p.ver0_ = checked_set(std::move(v0), "ver0");
    p.ver1_ = checked_set(std::move(v1), "ver1");
    p.derive(true);
    return p;
}

LatticePolytope LatticePolytope::build_relaxed(PointSet v0, PointSet v1) {
    LatticePolytope p;
    p.ver0_ = checked_set(std::move(v0), "ver0");
    p.ver1_ = checked_set(std::move(v1), "ver1");
    p.derive(false);
    return p;
}

void LatticePolytope::derive(bool strict) {
    check_matchable(ver0_, ver1_, strict);
    std::map<coord, Point> by_x1, by_y1;
    for (auto p : ver1_) {
        by_x1[p.x] = p;
        by_y1[p.y] = p;
    }
    std::map<Point, Point> next;
    for (auto v : ver0_) {
        if (contains(ver1_, v)) continue;
        next[v] = by_y1.at(v.y);
        next[by_x1.at(v.x)] = v;
    }
    next_.assign(next.begin(), next.end());
    std::set<Point> seen;
    for (const auto& [start, unused] : next) {
        if (seen.count(start)) continue;
        std::vector<Point> cyc;
        for (Point q = start; !seen.count(q); q = next.at(q)) {
            seen.insert(q);
            cyc.push_back(q);
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) edges_.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
        cycles_.push_back(std::move(cyc));
    }
}

PointSet LatticePolytope::isolated() const {
    PointSet out;
    std::set_intersection(ver0_.begin(), ver0_.end(), ver1_.begin(), ver1_.end(), std::back_inserter(out));
    return out;
}

Point LatticePolytope::next(Point v) const {
    auto it = std::lower_bound(next_.begin(), next_.end(), v,
                               [](const std::pair<Point, Point>& e, Point q) { return e.first < q; });
    if (it != next_.end() && it->first == v) return it->second;
    if (contains(ver0_, v) || contains(ver1_, v)) return v;
    fail("point " + to_string(v) + " is not a vertex");
}

std::vector<LatticePolytope> component_polytopes(const LatticePolytope& p) {
    std::vector<LatticePolytope> out;
    for (const auto& cyc : p.cycles()) {
        PointSet v0, v1;
        for (auto q : cyc) (contains(p.ver0(), q) ? v0 : v1).push_back(q);
        out.push_back(LatticePolytope::build_relaxed(std::move(v0), std::move(v1)));
    }
    return out;
}

LatticePolytope union_of(const LatticePolytope& a, const LatticePolytope& b) {
    PointSet v0 = a.ver0(), v1 = a.ver1();
    v0.insert(v0.end(), b.ver0().begin(), b.ver0().end());
    v1.insert(v1.end(), b.ver1().begin(), b.ver1().end());
    return LatticePolytope::build_relaxed(std::move(v0), std::move(v1));
}

namespace {

bool is_strict(const LatticePolytope& p) {
    auto x = xs_of(p.ver0());
    for (auto y : ys_of(p.ver0()))
        if (x.count(y)) return false;
    return true;
}

LatticePolytope rebuild(const LatticePolytope& like, PointSet v0, PointSet v1) {
    return is_strict(like) ? LatticePolytope::build(std::move(v0), std::move(v1))
                           : LatticePolytope::build_relaxed(std::move(v0), std::move(v1));
}

PointSet swap_all(const PointSet& s) {
    PointSet out;
    for (auto p : s) out.push_back(swapped(p));
    return out;
}

}  // namespace

LatticePolytope mirror(const LatticePolytope& p) { return rebuild(p, swap_all(p.ver0()), swap_all(p.ver1())); }

LatticePolytope reverse(const LatticePolytope& p) { return rebuild(p, p.ver1(), p.ver0()); }

LatticePolytope rotate(const LatticePolytope& p) {
    coord top = 0;
    for (auto q : p.ver0()) top = std::max({top, q.x, q.y});
    auto turn = [&](const PointSet& s) {
        PointSet out;
        for (auto q : s) out.push_back({2 * top + 1 - q.y, q.x});
        return out;
    };
    auto [v0, v1] = compress(turn(p.ver1()), turn(p.ver0()));
    return rebuild(p, std::move(v0), std::move(v1));
}

Permutation sigma(const LatticePolytope& p, int side) {
    if (side != 0 && side != 1) throw Error(ErrorKind::usage, "side must be 0 or 1");
    const auto& pts = side == 0 ? p.ver0() : p.ver1();
    std::vector<coord> ys;
    for (auto q : pts) ys.push_back(q.y);
    std::sort(ys.begin(), ys.end());
    Permutation s;
    for (auto q : pts)  // sorted by x already
        s.push_back(static_cast<int>(std::lower_bound(ys.begin(), ys.end(), q.y) - ys.begin()) + 1);
    return s;
}

std::pair<Permutation, Permutation> sigma_pair(const LatticePolytope& p) { return {sigma(p, 0), sigma(p, 1)}; }

LatticePolytope polytope_from_sigmas(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size() || !is_bijection(s) || !is_bijection(t)) fail("sigma pair is not a pair of bijections of equal size");
    coord n = static_cast<coord>(s.size());
    PointSet v0, v1;
    for (coord j = 1; j <= n; ++j) {
        v0.push_back({j, n + s[j - 1]});
        v1.push_back({j, n + t[j - 1]});
    }
    return LatticePolytope::build(std::move(v0), std::move(v1));
}

std::vector<std::pair<Permutation, Permutation>> equivalence_orbit(const Permutation& s0, const Permutation& s1) {
    if (s0.size() != s1.size()) fail("sigma pair sizes differ");
    auto pi = reversal_perm(static_cast<int>(s0.size()));
    std::set<std::pair<Permutation, Permutation>> orbit{{s0, s1}};
    std::vector<std::pair<Permutation, Permutation>> todo{{s0, s1}};
    while (!todo.empty()) {
        auto [a, b] = todo.back();
        todo.pop_back();
        for (auto next : {std::pair{compose(pi, a), compose(pi, b)}, std::pair{compose(a, pi), compose(b, pi)},
                          std::pair{inverse(a), inverse(b)}})
            if (orbit.insert(next).second) todo.push_back(next);
    }
    return {orbit.begin(), orbit.end()};
}

bool equivalent(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.n() != q.n())
        fail("polytopes are not comparable: n=" + std::to_string(p.n()) + " vs n=" + std::to_string(q.n()));
    auto orbit = equivalence_orbit(sigma(p, 0), sigma(p, 1));
    return std::find(orbit.begin(), orbit.end(), sigma_pair(q)) != orbit.end();
}

std::pair<Permutation, Permutation> canonical_sigmas(const LatticePolytope& p) {
    return equivalence_orbit(sigma(p, 0), sigma(p, 1)).front();
}

bool is_trivial(const LatticePolytope& p) { return p.cycles().empty(); }

bool is_connected(const LatticePolytope& p) { return p.cycles().size() == 1; }

bool is_simple(const LatticePolytope& p) {
    if (!is_connected(p) || crossing_count(p) != 0) return false;
    auto a = arrangement(p.edges());
    return std::all_of(a.winding.begin(), a.winding.end(), [](int w) { return w >= -1 && w <= 1; });
}

Strategy parse_strategy(const std::string& s) {
    if (s == "lex") return Strategy::lex;
    if (s == "disjoint") return Strategy::disjoint;
    if (s == "all") return Strategy::all;
    throw Error(ErrorKind::usage, "unknown strategy '" + s + "' (expected lex, disjoint or all)");
}

LatticePolytope full_polytope(const LatticePresentation& d, const LatticePresentation& d2) {
    if (d.values() != d2.values()) fail("presentations do not share the same set of x,y-components");
    return LatticePolytope::build_relaxed(d.points(), d2.points());
}

std::vector<PolytopePair> associated_polytopes(const LatticePresentation& d, const LatticePresentation& d2,
                                               Strategy strategy) {
    auto full = full_polytope(d, d2);
    const auto& cyc = full.cycles();
    std::vector<PointSet> sets;
    for (const auto& c : cyc) sets.push_back(normalized(c));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // first holds the least vertex
    std::vector<bool> used(cyc.size(), false);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (used[i]) continue;
        auto m = normalized(swap_all(sets[i]));
        if (m == sets[i]) fail("boundary cycle through " + to_string(cyc[i].front()) + " equals its own mirror");
        auto j = static_cast<std::size_t>(std::find(sets.begin(), sets.end(), m) - sets.begin());
        if (j == sets.size()) fail("mirror of a boundary cycle is missing");
        used[i] = used[j] = true;
        pairs.push_back(sets[i].front() < sets[j].front() ? std::pair{i, j} : std::pair{j, i});
    }
    if (pairs.size() > 20) fail_resource("too many component pairs to enumerate choices");
    PointSet iso_up, iso_down;
    for (auto q : full.isolated()) (q.x < q.y ? iso_up : iso_down).push_back(q);

    auto choice = [&](unsigned long bits) {
        PointSet p0, p1, m0, m1;
        auto add = [&](const PointSet& pts, PointSet& a0, PointSet& a1) {
            for (auto q : pts) {
                if (contains(d.points(), q)) a0.push_back(q);
                if (contains(d2.points(), q)) a1.push_back(q);
            }
        };
        add(iso_up, p0, p1);
        add(iso_down, m0, m1);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            bool flip = (bits >> k) & 1;
            add(sets[flip ? pairs[k].second : pairs[k].first], p0, p1);
            add(sets[flip ? pairs[k].first : pairs[k].second], m0, m1);
        }
        return PolytopePair{LatticePolytope::build(std::move(p0), std::move(p1)),
                            LatticePolytope::build(std::move(m0), std::move(m1))};
    };

    unsigned long total = 1UL << pairs.size();
    std::vector<PolytopePair> out;
    switch (strategy) {
        case Strategy::lex: out.push_back(choice(0)); break;
        case Strategy::all:
            for (unsigned long b = 0; b < total; ++b) out.push_back(choice(b));
            break;
        case Strategy::disjoint:
            for (unsigned long b = 0; b < total && out.empty(); ++b) {
                auto c = choice(b);
                if (regions_disjoint(c.p.edges(), c.mirror.edges())) out.push_back(std::move(c));
            }
            if (out.empty()) out.push_back(choice(0));
            break;
    }
    return out;
}

}  // namespace latpoly
