#include "latpoly/chord.hpp"

#include <algorithm>
#include <set>

#include "latpoly/error.hpp"

namespace latpoly {

namespace {

std::string arc_str(Arc a) { return "(" + std::to_string(a.a) + "," + std::to_string(a.b) + ")"; }

std::vector<Point> by_x(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace

ChordDiagram::ChordDiagram(int m, std::vector<Arc> arcs) : m_(m), arcs_(std::move(arcs)) {
    if (m_ < 1) fail("chord diagram needs m >= 1, got " + std::to_string(m_));
    std::set<int> used;
    for (auto& arc : arcs_) {
        if (arc.a > arc.b) std::swap(arc.a, arc.b);
        if (arc.a == arc.b) fail("arc " + arc_str(arc) + " is a loop");
        if (arc.a < 1 || arc.b > m_)
            fail("arc " + arc_str(arc) + " has an endpoint outside [1," + std::to_string(m_) + "]");
        for (int v : {arc.a, arc.b})
            if (!used.insert(v).second) fail("vertex " + std::to_string(v) + " is an endpoint of two arcs");
    }
    std::sort(arcs_.begin(), arcs_.end());
}

std::vector<int> ChordDiagram::isolated() const {
    std::vector<bool> used(m_ + 1, false);
    for (auto arc : arcs_) used[arc.a] = used[arc.b] = true;
    std::vector<int> out;
    for (int v = 1; v <= m_; ++v)
        if (!used[v]) out.push_back(v);
    return out;
}

LatticePresentation::LatticePresentation(PointSet points) : points_(normalized(std::move(points))) {
    std::set<coord> xs, ys;
    for (auto p : points_) {
        if (p.x <= 0 || p.y <= 0) fail("presentation point " + to_string(p) + " is not in the positive quadrant");
        if (p.x == p.y) fail("presentation point " + to_string(p) + " lies on the diagonal");
        if (!contains(points_, swapped(p))) fail("presentation is not symmetric: " + to_string(swapped(p)) + " missing");
        if (!xs.insert(p.x).second) fail("value " + std::to_string(p.x) + " used twice as an x-component");
        if (!ys.insert(p.y).second) fail("value " + std::to_string(p.y) + " used twice as a y-component");
    }
}

std::vector<Point> LatticePresentation::upper() const {
    std::vector<Point> out;
    for (auto p : points_)
        if (p.x < p.y) out.push_back(p);
    return out;
}

std::vector<coord> LatticePresentation::values() const {
    std::vector<coord> out;
    for (auto p : points_) out.push_back(p.x);
    std::sort(out.begin(), out.end());
    return out;
}

LatticePresentation to_lattice_presentation(const ChordDiagram& d) {
    PointSet pts;
    for (auto arc : d.arcs()) {
        pts.push_back({arc.a, arc.b});
        pts.push_back({arc.b, arc.a});
    }
    return LatticePresentation(std::move(pts));
}

ChordDiagram from_lattice_presentation(const LatticePresentation& p, int m) {
    std::vector<Arc> arcs;
    for (auto q : p.upper()) {
        if (q.y > m) fail("presentation value " + std::to_string(q.y) + " exceeds m=" + std::to_string(m));
        arcs.push_back({static_cast<int>(q.x), static_cast<int>(q.y)});
    }
    return ChordDiagram(m, std::move(arcs));
}

std::string to_string(ArcPairClass c) {
    switch (c) {
        case ArcPairClass::separated: return "separated";
        case ArcPairClass::nesting: return "nesting";
        case ArcPairClass::crossing: return "crossing";
    }
    return "?";
}

std::string to_string(RectangleType t) {
    switch (t) {
        case RectangleType::I: return "I";
        case RectangleType::II: return "II";
        case RectangleType::III: return "III";
        case RectangleType::IV: return "IV";
    }
    return "?";
}

ArcPairClass classify_arc_pair(Arc a1, Arc a2) {
    if (a1.a > a1.b) std::swap(a1.a, a1.b);
    if (a2.a > a2.b) std::swap(a2.a, a2.b);
    if (a1.a == a2.a || a1.a == a2.b || a1.b == a2.a || a1.b == a2.b)
        fail("arcs " + arc_str(a1) + " and " + arc_str(a2) + " share an endpoint");
    if (a2.a < a1.a) std::swap(a1, a2);
    if (a1.b < a2.a) return ArcPairClass::separated;
    if (a2.b < a1.b) return ArcPairClass::nesting;
    return ArcPairClass::crossing;
}

RectangleType rectangle_type(Point v, Point w) {
    if (v.x == w.x || v.y == w.y) fail("degenerate rectangle " + to_string(v) + "-" + to_string(w));
    bool right = w.x > v.x, up = w.y > v.y;
    if (right) return up ? RectangleType::I : RectangleType::IV;
    return up ? RectangleType::II : RectangleType::III;
}

bool rect_in_upper(Point v, Point w) { return std::max(v.x, w.x) <= std::min(v.y, w.y); }

std::array<bool, 3> separated_criteria(Point v1, Point v2) {
    for (auto v : {v1, v2})
        if (v.x >= v.y) fail("point " + to_string(v) + " is not strictly above the diagonal");
    bool sep = classify_arc_pair({static_cast<int>(v1.x), static_cast<int>(v1.y)},
                                 {static_cast<int>(v2.x), static_cast<int>(v2.y)}) == ArcPairClass::separated;
    bool outside = !rect_in_upper(v1, v2);
    Point m1 = swapped(v1), m2 = swapped(v2);
    bool meets = std::max(std::min(v1.x, v2.x), std::min(m1.x, m2.x)) <= std::min(std::max(v1.x, v2.x), std::max(m1.x, m2.x)) &&
                 std::max(std::min(v1.y, v2.y), std::min(m1.y, m2.y)) <= std::min(std::max(v1.y, v2.y), std::max(m1.y, m2.y));
    return {sep, outside, meets};
}

std::array<bool, 3> nesting_conditions(const std::vector<Point>& upper_points) {
    auto v = by_x(upper_points);
    std::size_t k = v.size();
    bool chain = true;
    for (std::size_t j = 0; j + 1 < k; ++j)
        if (!(v[j].x < v[j + 1].x && v[j + 1].y < v[j].y)) chain = false;
    if (k > 0 && !(v[k - 1].x < v[k - 1].y)) chain = false;
    bool pairs = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            auto t = rectangle_type(v[i], v[j]);
            if (t != RectangleType::II && t != RectangleType::IV) pairs = false;
        }
    bool consecutive = true;
    for (std::size_t j = 0; j + 1 < k; ++j)
        if (rectangle_type(v[j], v[j + 1]) != RectangleType::IV) consecutive = false;
    return {chain, pairs, consecutive};
}

std::array<bool, 3> crossing_conditions(const std::vector<Point>& upper_points) {
    auto v = by_x(upper_points);
    std::size_t k = v.size();
    bool chain = true;
    for (std::size_t j = 0; j + 1 < k; ++j)
        if (!(v[j].x < v[j + 1].x && v[j].y < v[j + 1].y)) chain = false;
    if (k > 0 && !(v[k - 1].x < v[0].y)) chain = false;
    bool pairs = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            auto t = rectangle_type(v[i], v[j]);
            if ((t != RectangleType::I && t != RectangleType::III) || !rect_in_upper(v[i], v[j])) pairs = false;
        }
    bool consecutive = k == 0 || rect_in_upper(v[0], v[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j)
        if (rectangle_type(v[j], v[j + 1]) != RectangleType::I) consecutive = false;
    return {chain, pairs, consecutive};
}

std::optional<int> is_k_nesting(const ChordDiagram& d) {
    if (d.arcs().empty()) return std::nullopt;
    auto conds = nesting_conditions(to_lattice_presentation(d).upper());
    if (conds[0] != conds[1] || conds[0] != conds[2]) fail("nesting characterisations disagree");
    if (!conds[0]) return std::nullopt;
    return static_cast<int>(d.arcs().size());
}

namespace {

void grow(const std::vector<Arc>& arcs, std::size_t from, std::vector<Arc>& chosen, std::vector<Arc>& best) {
    if (chosen.size() > best.size()) best = chosen;
    for (std::size_t i = from; i < arcs.size(); ++i) {
        bool ok = std::all_of(chosen.begin(), chosen.end(), [&](Arc c) {
            return classify_arc_pair(c, arcs[i]) == ArcPairClass::crossing;
        });
        if (!ok) continue;
        chosen.push_back(arcs[i]);
        grow(arcs, i + 1, chosen, best);
        chosen.pop_back();
    }
}

}  // namespace

CrossingWitness max_crossing_witness(const ChordDiagram& d) {
    std::vector<Arc> chosen, best;
    grow(d.arcs(), 0, chosen, best);
    std::vector<Point> up;
    for (auto a : best) up.push_back({a.a, a.b});
    auto conds = crossing_conditions(up);
    if (!(conds[0] && conds[1] && conds[2])) fail("crossing witness fails a crossing characterisation");
    return {static_cast<int>(best.size()), best};
}

int max_crossing(const ChordDiagram& d) { return max_crossing_witness(d).k; }

namespace {

void extend(int m, int max_arcs, int v, std::vector<bool>& used, std::vector<Arc>& arcs, std::vector<ChordDiagram>& out) {
    if (v > m) {
        out.emplace_back(m, arcs);
        return;
    }
    if (used[v]) {
        extend(m, max_arcs, v + 1, used, arcs, out);
        return;
    }
    extend(m, max_arcs, v + 1, used, arcs, out);
    if (static_cast<int>(arcs.size()) == max_arcs) return;
    used[v] = true;
    for (int w = v + 1; w <= m; ++w) {
        if (used[w]) continue;
        used[w] = true;
        arcs.push_back({v, w});
        extend(m, max_arcs, v + 1, used, arcs, out);
        arcs.pop_back();
        used[w] = false;
    }
    used[v] = false;
}

void pair_up(std::vector<coord> rest, PointSet& acc, std::vector<LatticePresentation>& out) {
    if (rest.empty()) {
        out.emplace_back(acc);
        return;
    }
    coord a = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
        coord b = rest[i];
        std::vector<coord> next(rest.begin() + 1, rest.end());
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i - 1));
        acc.push_back({a, b});
        acc.push_back({b, a});
        pair_up(std::move(next), acc, out);
        acc.pop_back();
        acc.pop_back();
    }
}

}  // namespace

std::vector<ChordDiagram> enumerate_diagrams(int m, int max_arcs) {
    std::vector<bool> used(m + 2, false);
    std::vector<Arc> arcs;
    std::vector<ChordDiagram> out;
    extend(m, max_arcs, 1, used, arcs, out);
    return out;
}

std::vector<LatticePresentation> enumerate_matchings(const std::vector<coord>& values) {
    if (values.size() % 2) fail("a perfect matching needs an even number of values");
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end());
    PointSet acc;
    std::vector<LatticePresentation> out;
    pair_up(sorted, acc, out);
    return out;
}

}  // namespace latpoly
