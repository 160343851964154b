#include "latpoly/reduced_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "latpoly/error.hpp"

namespace latpoly {

namespace {

int sgn(coord v) { return (v > 0) - (v < 0); }
Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(Point a, coord k) { return {a.x * k, a.y * k}; }
Point left_of(Point d) { return {-d.y, d.x}; }
Point dir(Point a, Point b) { return {sgn(b.x - a.x), sgn(b.y - a.y)}; }

bool on_segment(Point p, Point a, Point b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

std::vector<Point> simplify(const std::vector<Point>& c) {
    std::vector<Point> out;
    for (auto p : c)
        if (out.empty() || out.back() != p) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    bool changed = true;
    while (changed && out.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            Point a = out[(i + out.size() - 1) % out.size()], b = out[i], c2 = out[(i + 1) % out.size()];
            if ((a.x == b.x && b.x == c2.x) || (a.y == b.y && b.y == c2.y)) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return out;
}

ImmersedGraph normalize(const std::vector<std::vector<Point>>& curves, const PointSet& marks) {
    std::vector<std::vector<Point>> simple;
    for (const auto& c : curves) {
        auto s = simplify(c);
        if (s.size() < 4) fail("rewriting produced a degenerate curve");
        simple.push_back(std::move(s));
    }
    std::set<coord> xs, ys;
    for (const auto& c : simple)
        for (auto p : c) {
            xs.insert(p.x);
            ys.insert(p.y);
        }
    for (auto m : marks) {
        xs.insert(m.x);
        ys.insert(m.y);
    }
    std::map<coord, coord> rx, ry;
    for (auto x : xs) rx.emplace(x, static_cast<coord>(rx.size()));
    for (auto y : ys) ry.emplace(y, static_cast<coord>(ry.size()));
    ImmersedGraph g;
    for (const auto& c : simple) {
        std::vector<Point> out;
        for (auto p : c) out.push_back({rx[p.x], ry[p.y]});
        g.curves.push_back(std::move(out));
    }
    for (auto m : marks) g.marks.push_back({rx[m.x], ry[m.y]});
    g.marks = normalized(std::move(g.marks));
    return g;
}

std::vector<std::pair<Point, Point>> segments(const std::vector<Point>& c) {
    std::vector<std::pair<Point, Point>> out;
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back({c[i], c[(i + 1) % c.size()]});
    return out;
}

// winding of a single curve on the X x Y cell grid
std::vector<int> own_winding(const std::vector<Point>& c, coord X, coord Y) {
    std::vector<int> w(static_cast<std::size_t>(X * Y), 0);
    for (auto [a, b] : segments(c)) {
        if (a.x != b.x) continue;
        coord lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
        int s = b.y > a.y ? 1 : -1;
        for (coord i = 0; i < a.x && i < X; ++i)
            for (coord j = lo; j < hi && j < Y; ++j) w[i * Y + j] += s;
    }
    return w;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

// faces of the cell grid cut by the given walls; the outer face gets the last index
struct FaceMap {
    std::vector<int> cell_face;
    int out = 0;
    int count = 0;
};

template <class VWall, class HWall>
FaceMap faces(coord X, coord Y, VWall vwall, HWall hwall) {
    std::size_t outside = static_cast<std::size_t>(X * Y);
    UnionFind uf(outside + 1);
    auto cell = [&](coord i, coord j) {
        return (i >= 0 && i < X && j >= 0 && j < Y) ? static_cast<std::size_t>(i * Y + j) : outside;
    };
    for (coord i = -1; i <= X; ++i)
        for (coord j = -1; j <= Y; ++j) {
            auto c = cell(i, j);
            if (!vwall(i + 1, j)) uf.unite(c, cell(i + 1, j));
            if (!hwall(i, j + 1)) uf.unite(c, cell(i, j + 1));
        }
    FaceMap fm;
    std::map<std::size_t, int> id;
    fm.cell_face.resize(outside);
    for (std::size_t c = 0; c <= outside; ++c) {
        auto r = uf.find(c);
        auto [it, fresh] = id.emplace(r, static_cast<int>(id.size()));
        if (c < outside) fm.cell_face[c] = it->second;
        else fm.out = it->second;
    }
    fm.count = static_cast<int>(id.size());
    return fm;
}

coord floor_half(coord v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

}  // namespace

std::string to_string(Deformation d) {
    switch (d) {
        case Deformation::I: return "I";
        case Deformation::II: return "II";
        case Deformation::II_band: return "II-band";
        case Deformation::III: return "III";
        case Deformation::IV: return "IV";
    }
    return "?";
}

GraphAnalysis::GraphAnalysis(const ImmersedGraph& g) : g_(g) {
    const auto& curves = g_.curves;
    std::map<Point, std::pair<int, int>> cross;
    for (int ci = 0; ci < static_cast<int>(curves.size()); ++ci)
        for (auto [a, b] : segments(curves[ci])) {
            if (a.y != b.y) continue;
            for (int cj = 0; cj < static_cast<int>(curves.size()); ++cj)
                for (auto [c, d] : segments(curves[cj])) {
                    if (c.x != d.x) continue;
                    coord x = c.x, y = a.y;
                    if (std::min(a.x, b.x) < x && x < std::max(a.x, b.x) && std::min(c.y, d.y) < y && y < std::max(c.y, d.y))
                        cross[{x, y}] = {ci, cj};
                }
        }
    crossings_.assign(cross.begin(), cross.end());
    auto marked = [&](Point p) { return contains(g_.marks, p); };

    for (int ci = 0; ci < static_cast<int>(curves.size()); ++ci) {
        std::vector<Point> r;
        for (auto [a, b] : segments(curves[ci])) {
            std::set<Point> pts{a};
            for (const auto& [p, unused] : cross)
                if (on_segment(p, a, b) && p != a && p != b) pts.insert(p);
            for (auto m : g_.marks)
                if (on_segment(m, a, b) && m != b) pts.insert(m);
            Point d = dir(a, b);
            std::vector<Point> seq(pts.begin(), pts.end());
            std::sort(seq.begin(), seq.end(), [&](Point p, Point q) {
                return (p.x - a.x) * d.x + (p.y - a.y) * d.y < (q.x - a.x) * d.x + (q.y - a.y) * d.y;
            });
            r.insert(r.end(), seq.begin(), seq.end());
        }
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (cross.count(r[i])) idx.push_back(i);
        if (idx.empty()) {
            GraphArc arc;
            arc.curve = ci;
            arc.pts = r;
            arc.closed = true;
            for (auto p : r)
                if (marked(p)) arc.marks.push_back(p);
            arcs_.push_back(std::move(arc));
            continue;
        }
        for (std::size_t k = 0; k < idx.size(); ++k) {
            std::size_t i = idx[k], j = idx[(k + 1) % idx.size()];
            GraphArc arc;
            arc.curve = ci;
            if (j > i) arc.pts.assign(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            else {
                arc.pts.assign(r.begin() + static_cast<std::ptrdiff_t>(i), r.end());
                arc.pts.insert(arc.pts.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            }
            for (std::size_t t = 1; t + 1 < arc.pts.size(); ++t)
                if (marked(arc.pts[t])) arc.marks.push_back(arc.pts[t]);
            arcs_.push_back(std::move(arc));
        }
    }

    for (const auto& c : curves)
        for (auto p : c) {
            X_ = std::max(X_, p.x);
            Y_ = std::max(Y_, p.y);
        }
    vwall_.assign(static_cast<std::size_t>((X_ + 1) * std::max<coord>(Y_, 1)), 0);
    hwall_.assign(static_cast<std::size_t>(std::max<coord>(X_, 1) * (Y_ + 1)), 0);
    wind_.assign(static_cast<std::size_t>(X_ * Y_), 0);
    for (const auto& c : curves)
        for (auto [a, b] : segments(c)) {
            if (a.x == b.x) {
                coord lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
                int s = b.y > a.y ? 1 : -1;
                for (coord j = lo; j < hi; ++j) {
                    vwall_[a.x * Y_ + j] = 1;
                    for (coord i = 0; i < a.x; ++i) wind_[i * Y_ + j] += s;
                }
            } else {
                coord lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
                for (coord i = lo; i < hi; ++i) hwall_[i * (Y_ + 1) + a.y] = 1;
            }
        }
    auto fm = faces(X_, Y_, [&](coord x, coord j) { return vwall(x, j); }, [&](coord i, coord y) { return hwall(i, y); });
    cell_face_ = fm.cell_face;
    out_face_ = fm.out;
    labels_.assign(fm.count, 0);
    std::vector<bool> set(fm.count, false);
    for (coord i = 0; i < X_; ++i)
        for (coord j = 0; j < Y_; ++j) {
            int f = cell_face_[i * Y_ + j];
            int w = wind_[i * Y_ + j];
            if (set[f] && labels_[f] != w) fail("face labels are inconsistent");
            labels_[f] = w;
            set[f] = true;
        }
    labels_[out_face_] = 0;

    for (auto& arc : arcs_) {
        Point a = arc.pts[0], d = dir(a, arc.pts[1]);
        Point m2 = a * 2 + d;
        Point l = m2 + left_of(d), r = m2 - left_of(d);
        arc.left_face = face_of_cell((l.x - 1) / 2, (l.y - 1) / 2);
        arc.right_face = face_of_cell((r.x - 1) / 2, (r.y - 1) / 2);
    }

    comp_.resize(curves.size());
    std::iota(comp_.begin(), comp_.end(), 0);
    std::function<int(int)> root = [&](int x) { return comp_[x] == x ? x : comp_[x] = root(comp_[x]); };
    for (const auto& [p, cc] : crossings_) comp_[root(cc.first)] = root(cc.second);
    for (int i = 0; i < static_cast<int>(comp_.size()); ++i) comp_[i] = root(i);
}

int GraphAnalysis::face_of_cell(coord i, coord j) const {
    if (i < 0 || j < 0 || i >= X_ || j >= Y_) return out_face_;
    return cell_face_[i * Y_ + j];
}

int GraphAnalysis::winding(coord i, coord j) const {
    if (i < 0 || j < 0 || i >= X_ || j >= Y_) return 0;
    return wind_[i * Y_ + j];
}

bool GraphAnalysis::vwall(coord x, coord j) const {
    if (x < 0 || x > X_ || j < 0 || j >= Y_) return false;
    return vwall_[x * Y_ + j];
}

bool GraphAnalysis::hwall(coord i, coord y) const {
    if (i < 0 || i >= X_ || y < 0 || y > Y_) return false;
    return hwall_[i * (Y_ + 1) + y];
}

bool GraphAnalysis::is_crossing(Point p) const {
    auto it = std::lower_bound(crossings_.begin(), crossings_.end(), p,
                               [](const auto& e, Point q) { return e.first < q; });
    return it != crossings_.end() && it->first == p;
}

bool GraphAnalysis::self_crossing(Point p) const {
    auto it = std::lower_bound(crossings_.begin(), crossings_.end(), p,
                               [](const auto& e, Point q) { return e.first < q; });
    return it != crossings_.end() && it->first == p && it->second.first == it->second.second;
}

bool GraphAnalysis::labels_consistent() const {
    for (const auto& arc : arcs_)
        if (label(arc.left_face) != label(arc.right_face) + 1) return false;
    return true;
}

std::vector<int> GraphAnalysis::successor() const {
    std::map<int, std::vector<int>> by_curve;
    for (int k = 0; k < static_cast<int>(arcs_.size()); ++k) by_curve[arcs_[k].curve].push_back(k);
    std::vector<int> succ(arcs_.size());
    for (const auto& [c, ks] : by_curve)
        for (std::size_t i = 0; i < ks.size(); ++i) succ[ks[i]] = ks[(i + 1) % ks.size()];
    return succ;
}

namespace {

bool enclosed_cells_agree(const GraphAnalysis& an, const std::vector<Point>& loop, bool require_nonzero) {
    auto ow = own_winding(loop, an.width(), an.height());
    int dl = 0;
    for (int v : ow)
        if (v) {
            dl = v;
            break;
        }
    if (dl == 0) return false;
    for (coord i = 0; i < an.width(); ++i)
        for (coord j = 0; j < an.height(); ++j) {
            if (!ow[i * an.height() + j]) continue;
            int w = an.winding(i, j);
            if (sgn(w) != dl) return false;
            if (require_nonzero && w == 0) return false;
        }
    return true;
}

std::vector<Site> loop_sites(const GraphAnalysis& an) {
    std::vector<Site> out;
    auto succ = an.successor();
    const auto& arcs = an.arcs();
    for (int k0 = 0; k0 < static_cast<int>(arcs.size()); ++k0) {
        const auto& ar = arcs[k0];
        if (ar.closed) continue;
        Point x = ar.pts.front();
        if (!an.self_crossing(x)) continue;
        std::vector<int> ks{k0};
        std::set<Point> seen{x};
        bool ok = true;
        while (arcs[ks.back()].pts.back() != x) {
            Point e = arcs[ks.back()].pts.back();
            if (seen.count(e)) {
                ok = false;
                break;
            }
            seen.insert(e);
            ks.push_back(succ[ks.back()]);
        }
        if (!ok) continue;
        bool has_mark = std::any_of(ks.begin(), ks.end(), [&](int k) { return !arcs[k].marks.empty(); });
        if (!has_mark) continue;
        std::vector<Point> pts;
        for (int k : ks) pts.insert(pts.end(), arcs[k].pts.begin(), arcs[k].pts.end() - 1);
        if (enclosed_cells_agree(an, simplify(pts), false)) out.push_back({Deformation::III, ks, -1, 0});
    }
    return out;
}

}  // namespace

std::vector<Site> GraphAnalysis::sites() const {
    std::vector<Site> res;
    for (int k = 0; k < static_cast<int>(arcs_.size()); ++k)
        if (arcs_[k].marks.size() >= 2) res.push_back({Deformation::I, {k}, -1, 0});
    std::map<int, std::vector<std::pair<int, int>>> bd;
    for (int k = 0; k < static_cast<int>(arcs_.size()); ++k) {
        bd[arcs_[k].left_face].push_back({k, 1});
        bd[arcs_[k].right_face].push_back({k, -1});
    }
    for (const auto& [f, list] : bd) {
        int l = label(f);
        if (l == 0) continue;
        int s = sgn(l);
        if (list.size() == 2) {
            auto [k1, s1] = list[0];
            auto [k2, s2] = list[1];
            const auto &a1 = arcs_[k1], &a2 = arcs_[k2];
            if (s1 == s && s2 == s && !a1.closed && !a2.closed && a1.pts.front() == a2.pts.back() &&
                a1.pts.back() == a2.pts.front() && a1.pts.front() != a1.pts.back() && !a1.marks.empty() && !a2.marks.empty())
                res.push_back({Deformation::II, {k1, k2}, -1, 0});
        }
        for (std::size_t x = 0; x < list.size(); ++x)
            for (std::size_t y = x + 1; y < list.size(); ++y) {
                auto [k1, s1] = list[x];
                auto [k2, s2] = list[y];
                const auto &a1 = arcs_[k1], &a2 = arcs_[k2];
                if (s1 == s && s2 == s && comp_[a1.curve] != comp_[a2.curve] && !a1.marks.empty() && !a2.marks.empty())
                    res.push_back({Deformation::II_band, {k1, k2}, -1, s});
            }
    }
    auto loops = loop_sites(*this);
    res.insert(res.end(), loops.begin(), loops.end());
    for (int ci = 0; ci < static_cast<int>(g_.curves.size()); ++ci) {
        bool self = std::any_of(crossings_.begin(), crossings_.end(), [&](const auto& e) {
            return e.second.first == ci && e.second.second == ci;
        });
        if (self) continue;
        bool marked = std::any_of(arcs_.begin(), arcs_.end(), [&](const GraphArc& a) { return a.curve == ci && !a.marks.empty(); });
        if (!marked) continue;
        if (enclosed_cells_agree(*this, g_.curves[ci], true)) res.push_back({Deformation::IV, {}, ci, 0});
    }
    return res;
}

std::string GraphAnalysis::check(const Site& s) const {
    auto all = sites();
    if (std::find(all.begin(), all.end(), s) != all.end()) return {};
    switch (s.kind) {
        case Deformation::I: return "(I) needs an arc carrying at least two marks";
        case Deformation::II:
            return "(II) needs a nonzero-labelled face bounded by exactly two marked arcs between two distinct crossings, "
                   "both oriented with the face on the side given by its label sign";
        case Deformation::II_band:
            return "(II) band variant needs two marked arcs of different components bounding one nonzero-labelled face "
                   "on the side given by its label sign";
        case Deformation::III:
            return "(III) needs a marked loop from a self-crossing back to itself whose enclosed cells carry labels of "
                   "the loop's orientation sign";
        case Deformation::IV:
            return "(IV) needs a marked circle without self-crossings whose enclosed cells all carry nonzero labels of "
                   "the circle's orientation sign";
    }
    return "unknown deformation";
}

namespace {

using Chains = std::map<int, std::vector<Point>>;
using Succ = std::map<int, int>;

void chains_of(const GraphAnalysis& an, Chains& chains, Succ& succ) {
    auto nx = an.successor();
    for (int k = 0; k < static_cast<int>(an.arcs().size()); ++k) {
        const auto& ar = an.arcs()[k];
        chains[k] = ar.closed ? ar.pts : std::vector<Point>(ar.pts.begin(), ar.pts.end() - 1);
        succ[k] = nx[k];
    }
}

int pred(const Succ& succ, int k) {
    for (const auto& [a, b] : succ)
        if (b == k) return a;
    fail("broken curve linkage during rewriting");
}

ImmersedGraph assemble(const Chains& chains, const Succ& succ, const PointSet& marks) {
    std::set<int> seen;
    std::vector<std::vector<Point>> curves;
    for (const auto& [k, unused] : chains) {
        if (seen.count(k)) continue;
        std::vector<Point> c;
        for (int x = k; !seen.count(x); x = succ.at(x)) {
            seen.insert(x);
            const auto& part = chains.at(x);
            c.insert(c.end(), part.begin(), part.end());
        }
        curves.push_back(std::move(c));
    }
    return normalize(curves, marks);
}

void erase(PointSet& s, Point p) {
    auto it = std::lower_bound(s.begin(), s.end(), p);
    if (it != s.end() && *it == p) s.erase(it);
}

ImmersedGraph band(const GraphAnalysis& an, int k1, int k2, int s) {
    const auto &a1 = an.arcs()[k1], &a2 = an.arcs()[k2];
    Point m1 = a1.marks.front(), m2 = a2.marks.front();
    PointSet marks = an.graph().marks;
    erase(marks, m1);
    erase(marks, m2);
    auto attach = [](const GraphArc& ar, Point m) {
        auto i = static_cast<std::size_t>(std::find(ar.pts.begin(), ar.pts.end(), m) - ar.pts.begin());
        Point nxt = ar.closed ? ar.pts[(i + 1) % ar.pts.size()] : ar.pts[i + 1];
        return std::pair{i, dir(m, nxt)};
    };
    auto [i1, d1] = attach(a1, m1);
    auto [i2, d2] = attach(a2, m2);
    auto side = [&](Point d) { return s == 1 ? left_of(d) : left_of(d) * -1; };
    auto cell_of = [&](Point m, Point d) {
        Point p2 = m * 2 + d + side(d);
        return Point{floor_half(p2.x - 1), floor_half(p2.y - 1)};
    };
    Point c0 = cell_of(m1, d1), ce = cell_of(m2, d2);
    if (an.face_of_cell(c0.x, c0.y) != an.face_of_cell(ce.x, ce.y)) fail("band endpoints lie in different faces");
    std::map<Point, Point> prev{{c0, c0}};
    std::deque<Point> q{c0};
    while (!q.empty()) {
        Point c = q.front();
        q.pop_front();
        if (c == ce) break;
        const Point steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (auto st : steps) {
            Point nb = c + st;
            if (nb.x < 0 || nb.y < 0 || nb.x >= an.width() || nb.y >= an.height()) continue;
            if (st.x == 1 && an.vwall(c.x + 1, c.y)) continue;
            if (st.x == -1 && an.vwall(c.x, c.y)) continue;
            if (st.y == 1 && an.hwall(c.x, c.y + 1)) continue;
            if (st.y == -1 && an.hwall(c.x, c.y)) continue;
            if (prev.count(nb)) continue;
            prev[nb] = c;
            q.push_back(nb);
        }
    }
    if (!prev.count(ce)) fail("band endpoints are not connected inside their face");
    std::vector<Point> path;
    for (Point c = ce;; c = prev[c]) {
        path.push_back(c);
        if (c == c0) break;
    }
    std::reverse(path.begin(), path.end());
    Point t1 = m1 * 4 + d1 * 2, t2 = m2 * 4 + d2 * 2;
    std::vector<Point> cl{t1};
    for (auto c : path) cl.push_back({4 * c.x + 2, 4 * c.y + 2});
    cl.push_back(t2);
    std::vector<Point> line;
    for (auto p : cl) {
        auto n = line.size();
        if (n >= 2 && ((line[n - 2].x == line[n - 1].x && line[n - 1].x == p.x) ||
                       (line[n - 2].y == line[n - 1].y && line[n - 1].y == p.y)))
            line.back() = p;
        else if (line.empty() || line.back() != p)
            line.push_back(p);
    }
    auto offset = [](const std::vector<Point>& Q, int sd) {
        std::vector<Point> ds;
        for (std::size_t k = 0; k + 1 < Q.size(); ++k) ds.push_back(dir(Q[k], Q[k + 1]));
        auto lf = [&](Point d) { return left_of(d) * sd; };
        std::vector<Point> out{Q.front() + lf(ds.front())};
        for (std::size_t k = 1; k + 1 < Q.size(); ++k) out.push_back(Q[k] + lf(ds[k - 1]) + lf(ds[k]));
        out.push_back(Q.back() + lf(ds.back()));
        return out;
    };
    auto s1 = offset(line, s);
    auto s2 = offset(line, -s);
    std::reverse(s2.begin(), s2.end());
    if (s1.front() != t1 - d1 || s1.back() != t2 + d2 || s2.front() != t2 - d2 || s2.back() != t1 + d1)
        fail("band offsets do not meet the attachment points");

    Chains chains;
    Succ succ;
    chains_of(an, chains, succ);
    for (auto& [k, pts] : chains)
        for (auto& p : pts) p = p * 4;
    PointSet scaled;
    for (auto m : marks) scaled.push_back(m * 4);
    auto cut = [&](int k, std::size_t i, Point d, Point t) {
        const auto& pts = chains[k];
        std::vector<Point> before(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        before.push_back(t - d);
        std::vector<Point> after{t + d};
        after.insert(after.end(), pts.begin() + static_cast<std::ptrdiff_t>(i) + 1, pts.end());
        return std::pair{before, after};
    };
    auto [b1, f1] = cut(k1, i1, d1, t1);
    auto [b2, f2] = cut(k2, i2, d2, t2);
    int base = static_cast<int>(an.arcs().size());
    const int B1 = base + 1, F1 = base + 2, B2 = base + 3, F2 = base + 4, S1 = base + 5, S2 = base + 6;
    int n1 = a1.closed ? F1 : succ[k1];
    int n2 = a2.closed ? F2 : succ[k2];
    int p1 = a1.closed ? -1 : pred(succ, k1);
    int p2 = a2.closed ? -1 : pred(succ, k2);
    chains.erase(k1);
    chains.erase(k2);
    succ.erase(k1);
    succ.erase(k2);
    chains[B1] = b1;
    chains[F1] = f1;
    chains[B2] = b2;
    chains[F2] = f2;
    chains[S1] = std::vector<Point>(s1.begin() + 1, s1.end() - 1);
    chains[S2] = std::vector<Point>(s2.begin() + 1, s2.end() - 1);
    if (a1.closed) {
        chains[F1].insert(chains[F1].end(), b1.begin(), b1.end());
        chains.erase(B1);
        succ[F1] = S1;
        succ[S2] = F1;
    } else {
        succ[p1] = B1;
        succ[B1] = S1;
        succ[S2] = F1;
        succ[F1] = n1;
    }
    if (a2.closed) {
        chains[F2].insert(chains[F2].end(), b2.begin(), b2.end());
        chains.erase(B2);
        succ[F2] = S2;
        succ[S1] = F2;
    } else {
        succ[p2] = B2;
        succ[B2] = S2;
        succ[S1] = F2;
        succ[F2] = n2;
    }
    scaled.push_back(s1[1]);
    scaled.push_back(s2[1]);
    return assemble(chains, succ, normalized(std::move(scaled)));
}

}  // namespace

ImmersedGraph from_polytope(const LatticePolytope& p) {
    PointSet marks;
    for (const auto& c : p.cycles())
        for (auto q : c)
            if (contains(p.ver0(), q)) marks.push_back(q);
    return normalize(p.cycles(), normalized(std::move(marks)));
}

ImmersedGraph apply_deformation(const ImmersedGraph& g, const Site& s) {
    GraphAnalysis an(g);
    if (auto why = an.check(s); !why.empty()) fail("deformation not applicable: " + why);
    PointSet marks = g.marks;
    Chains chains;
    Succ succ;
    chains_of(an, chains, succ);
    const auto& arcs = an.arcs();
    switch (s.kind) {
        case Deformation::I: {
            const auto& ms = arcs[s.arcs[0]].marks;
            for (std::size_t k = 1; k < ms.size(); ++k) erase(marks, ms[k]);
            break;
        }
        case Deformation::IV:
            for (int k = 0; k < static_cast<int>(arcs.size()); ++k) {
                if (arcs[k].curve != s.curve) continue;
                for (auto m : arcs[k].marks) erase(marks, m);
                chains.erase(k);
                succ.erase(k);
            }
            break;
        case Deformation::III: {
            const auto& ks = s.arcs;
            for (int k : ks)
                for (auto m : arcs[k].marks) erase(marks, m);
            int p = pred(succ, ks.front());
            int n = succ[ks.back()];
            for (int k : ks) {
                chains.erase(k);
                succ.erase(k);
            }
            succ[p] = n;
            marks.push_back(arcs[ks.front()].pts.front());
            break;
        }
        case Deformation::II: {
            int k1 = s.arcs[0], k2 = s.arcs[1];
            const auto &a1 = arcs[k1], &a2 = arcs[k2];
            for (const auto* a : {&a1, &a2})
                for (auto m : a->marks) erase(marks, m);
            int p1 = pred(succ, k1), p2 = pred(succ, k2), n1 = succ[k1], n2 = succ[k2];
            for (int k : {k1, k2}) {
                chains.erase(k);
                succ.erase(k);
            }
            succ[p1] = n2;
            succ[p2] = n1;
            marks.push_back(a1.pts.front());
            marks.push_back(a1.pts.back());
            break;
        }
        case Deformation::II_band: return band(an, s.arcs[0], s.arcs[1], s.side);
    }
    return assemble(chains, succ, normalized(std::move(marks)));
}

Reduction reduce(const ImmersedGraph& g, std::mt19937_64* rng) {
    Reduction r{g, {}};
    for (int steps = 0;; ++steps) {
        if (steps > 1000) fail("reduction did not terminate within 1000 deformations");
        GraphAnalysis an(r.graph);
        auto st = an.sites();
        if (st.empty()) return r;
        std::size_t pick = 0;
        if (rng) pick = std::uniform_int_distribution<std::size_t>(0, st.size() - 1)(*rng);
        r.trace.push_back(st[pick].kind);
        r.graph = apply_deformation(r.graph, st[pick]);
    }
}

bool minimal_achievable(const LatticePolytope& p) { return reduce(from_polytope(p)).graph.empty(); }

namespace {

// Combinatorial map used for the isotopy-invariant code: nodes are crossings,
// marks, and one anchor on each curve that has neither.
struct MapData {
    struct Half {
        int node;
        int piece;
        bool out;
        int dir;  // 0 east, 1 north, 2 west, 3 south
    };
    std::vector<char> node_type;
    std::vector<std::vector<int>> node_halves;  // sorted counterclockwise
    std::vector<Half> halves;
    std::vector<std::pair<int, int>> piece_halves;  // (out half, in half)
    std::vector<int> piece_label;                   // global label on the left
    std::vector<Point> piece_left_cell;
    std::vector<int> piece_curve;
};

int dir_code(Point d) {
    if (d.x > 0) return 0;
    if (d.y > 0) return 1;
    if (d.x < 0) return 2;
    return 3;
}

MapData build_map(const GraphAnalysis& an) {
    MapData md;
    std::map<Point, int> node_id;
    auto node = [&](Point p, char type) {
        auto [it, fresh] = node_id.emplace(p, static_cast<int>(md.node_type.size()));
        if (fresh) {
            md.node_type.push_back(type);
            md.node_halves.emplace_back();
        }
        return it->second;
    };
    const auto& g = an.graph();
    for (int ci = 0; ci < static_cast<int>(g.curves.size()); ++ci) {
        // refined cyclic point list of the curve
        std::vector<Point> r;
        for (const auto& arc : an.arcs()) {
            if (arc.curve != ci) continue;
            if (arc.closed) r = arc.pts;
            else r.insert(r.end(), arc.pts.begin(), arc.pts.end() - 1);
        }
        std::vector<std::size_t> stops;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (an.is_crossing(r[i]) || contains(g.marks, r[i])) stops.push_back(i);
        if (stops.empty()) {
            auto least = static_cast<std::size_t>(std::min_element(r.begin(), r.end()) - r.begin());
            stops.push_back(least);
        }
        for (std::size_t k = 0; k < stops.size(); ++k) {
            std::size_t i = stops[k], j = stops[(k + 1) % stops.size()];
            std::vector<Point> pts;
            for (std::size_t t = i;; t = (t + 1) % r.size()) {
                pts.push_back(r[t]);
                if (t == j && pts.size() > 1) break;
            }
            auto type = [&](Point p) { return an.is_crossing(p) ? 'X' : (contains(g.marks, p) ? 'M' : 'O'); };
            int a = node(pts.front(), type(pts.front())), b = node(pts.back(), type(pts.back()));
            int piece = static_cast<int>(md.piece_halves.size());
            int ho = static_cast<int>(md.halves.size());
            md.halves.push_back({a, piece, true, dir_code(dir(pts[0], pts[1]))});
            int hi = static_cast<int>(md.halves.size());
            md.halves.push_back({b, piece, false, dir_code(dir(pts.back(), pts[pts.size() - 2]))});
            md.node_halves[a].push_back(ho);
            md.node_halves[b].push_back(hi);
            md.piece_halves.push_back({ho, hi});
            Point d = dir(pts[0], pts[1]);
            Point l = pts[0] * 2 + d + left_of(d);
            Point cell{(l.x - 1) / 2, (l.y - 1) / 2};
            md.piece_left_cell.push_back(cell);
            md.piece_label.push_back(an.label(an.face_of_cell(cell.x, cell.y)));
            md.piece_curve.push_back(ci);
        }
    }
    for (auto& hs : md.node_halves)
        std::sort(hs.begin(), hs.end(), [&](int a, int b) { return md.halves[a].dir < md.halves[b].dir; });
    return md;
}

class CanonicalCoder {
public:
    explicit CanonicalCoder(const ImmersedGraph& g) : an_(g), md_(build_map(an_)) {
        int nc = 0;
        for (int ci = 0; ci < static_cast<int>(g.curves.size()); ++ci) nc = std::max(nc, an_.component(ci) + 1);
        std::map<int, int> remap;
        for (int ci = 0; ci < static_cast<int>(g.curves.size()); ++ci)
            remap.emplace(an_.component(ci), static_cast<int>(remap.size()));
        comp_of_curve_.resize(g.curves.size());
        for (int ci = 0; ci < static_cast<int>(g.curves.size()); ++ci) comp_of_curve_[ci] = remap[an_.component(ci)];
        ncomp_ = static_cast<int>(remap.size());
        // faces of each component taken alone
        comp_faces_.resize(ncomp_);
        for (int c = 0; c < ncomp_; ++c) comp_faces_[c] = component_faces(c);
        // a representative cell next to each component
        rep_cell_.assign(ncomp_, Point{-1, -1});
        for (std::size_t p = 0; p < md_.piece_curve.size(); ++p) {
            int c = comp_of_curve_[md_.piece_curve[p]];
            if (rep_cell_[c].x < 0) rep_cell_[c] = md_.piece_left_cell[p];
        }
        depth_.assign(ncomp_, 0);
        for (int d = 0; d < ncomp_; ++d)
            for (int c = 0; c < ncomp_; ++c)
                if (c != d && inside(d, c)) ++depth_[d];
        parent_face_.assign(ncomp_, {-1, -1});
        for (int d = 0; d < ncomp_; ++d)
            for (int c = 0; c < ncomp_; ++c)
                if (c != d && inside(d, c) && depth_[c] == depth_[d] - 1) parent_face_[d] = {c, face_in(c, rep_cell_[d])};
    }

    std::string code() {
        std::vector<std::string> roots;
        for (int c = 0; c < ncomp_; ++c)
            if (parent_face_[c].first < 0) roots.push_back(component_code(c));
        std::sort(roots.begin(), roots.end());
        std::string out;
        for (const auto& r : roots) out += "{" + r + "}";
        return out.empty() ? "empty" : out;
    }

private:
    FaceMap component_faces(int c) const {
        coord X = an_.width(), Y = an_.height();
        std::vector<char> vw(static_cast<std::size_t>((X + 1) * std::max<coord>(Y, 1)), 0);
        std::vector<char> hw(static_cast<std::size_t>(std::max<coord>(X, 1) * (Y + 1)), 0);
        const auto& curves = an_.graph().curves;
        for (int ci = 0; ci < static_cast<int>(curves.size()); ++ci) {
            if (comp_of_curve_[ci] != c) continue;
            for (auto [a, b] : segments(curves[ci])) {
                if (a.x == b.x)
                    for (coord j = std::min(a.y, b.y); j < std::max(a.y, b.y); ++j) vw[a.x * Y + j] = 1;
                else
                    for (coord i = std::min(a.x, b.x); i < std::max(a.x, b.x); ++i) hw[i * (Y + 1) + a.y] = 1;
            }
        }
        return faces(
            X, Y, [&](coord x, coord j) { return x >= 0 && x <= X && j >= 0 && j < Y && vw[x * Y + j]; },
            [&](coord i, coord y) { return i >= 0 && i < X && y >= 0 && y <= Y && hw[i * (Y + 1) + y]; });
    }

    int face_in(int c, Point cell) const {
        const auto& fm = comp_faces_[c];
        if (cell.x < 0 || cell.y < 0 || cell.x >= an_.width() || cell.y >= an_.height()) return fm.out;
        return fm.cell_face[cell.x * an_.height() + cell.y];
    }

    bool inside(int d, int c) const { return face_in(c, rep_cell_[d]) != comp_faces_[c].out; }

    std::string component_code(int c) {
        if (auto it = memo_.find(c); it != memo_.end()) return it->second;
        std::string best;
        bool have = false;
        for (std::size_t h = 0; h < md_.halves.size(); ++h) {
            const auto& half = md_.halves[h];
            if (!half.out || comp_of_curve_[md_.piece_curve[half.piece]] != c) continue;
            auto s = traverse(c, static_cast<int>(h));
            if (!have || s < best) best = s;
            have = true;
        }
        memo_[c] = best;
        return best;
    }

    std::string children(int c, int face) {
        std::vector<std::string> kids;
        for (int d = 0; d < ncomp_; ++d)
            if (parent_face_[d] == std::pair{c, face}) kids.push_back(component_code(d));
        std::sort(kids.begin(), kids.end());
        std::string out;
        for (const auto& k : kids) out += "{" + k + "}";
        return out;
    }

    std::string traverse(int c, int start) {
        std::map<int, int> num;
        std::map<int, int> ref;
        std::deque<int> q;
        int first = md_.halves[start].node;
        num[first] = 0;
        ref[first] = start;
        q.push_back(first);
        std::string code;
        auto rel = [&](int node, int h) {
            const auto& hs = md_.node_halves[node];
            auto pos = [&](int x) { return static_cast<int>(std::find(hs.begin(), hs.end(), x) - hs.begin()); };
            int deg = static_cast<int>(hs.size());
            return (pos(h) - pos(ref[node]) + deg) % deg;
        };
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            code += md_.node_type[u];
            code += '(';
            const auto& hs = md_.node_halves[u];
            int deg = static_cast<int>(hs.size());
            int r0 = static_cast<int>(std::find(hs.begin(), hs.end(), ref[u]) - hs.begin());
            for (int t = 0; t < deg; ++t) {
                int h = hs[(r0 + t) % deg];
                const auto& half = md_.halves[h];
                auto [ho, hi] = md_.piece_halves[half.piece];
                int twin = half.out ? hi : ho;
                int v = md_.halves[twin].node;
                if (!num.count(v)) {
                    num[v] = static_cast<int>(num.size());
                    ref[v] = twin;
                    q.push_back(v);
                }
                code += half.out ? '>' : '<';
                code += std::to_string(num[v]) + "." + std::to_string(rel(v, twin));
                if (half.out) {
                    int f = face_in(c, md_.piece_left_cell[half.piece]);
                    code += ":" + std::to_string(md_.piece_label[half.piece]);
                    if (f == comp_faces_[c].out) code += "o";
                    code += children(c, f);
                }
                code += ',';
            }
            code += ')';
        }
        return code;
    }

    GraphAnalysis an_;
    MapData md_;
    std::vector<int> comp_of_curve_;
    int ncomp_ = 0;
    std::vector<FaceMap> comp_faces_;
    std::vector<Point> rep_cell_;
    std::vector<int> depth_;
    std::vector<std::pair<int, int>> parent_face_;
    std::map<int, std::string> memo_;
};

}  // namespace

std::string canonical_form(const ImmersedGraph& g) {
    if (g.empty()) return "empty";
    return CanonicalCoder(g).code();
}

std::string dump_json(const ImmersedGraph& g) {
    using nlohmann::json;
    GraphAnalysis an(g);
    json j;
    auto pt = [](Point p) { return json::array({p.x, p.y}); };
    j["curves"] = json::array();
    for (const auto& c : g.curves) {
        json cj = json::array();
        for (auto p : c) cj.push_back(pt(p));
        j["curves"].push_back(cj);
    }
    j["marks"] = json::array();
    for (auto m : g.marks) j["marks"].push_back(pt(m));
    j["crossings"] = json::array();
    for (const auto& [p, cc] : an.crossings())
        j["crossings"].push_back({{"point", pt(p)}, {"horizontal_curve", cc.first}, {"vertical_curve", cc.second}});
    j["arcs"] = json::array();
    std::vector<json> circles(g.curves.size(), json::array());
    for (int k = 0; k < static_cast<int>(an.arcs().size()); ++k) {
        const auto& a = an.arcs()[k];
        j["arcs"].push_back({{"id", k},
                             {"curve", a.curve},
                             {"closed", a.closed},
                             {"from", pt(a.pts.front())},
                             {"to", pt(a.pts.back())},
                             {"marks", a.marks.size()},
                             {"left_label", an.label(a.left_face)},
                             {"right_label", an.label(a.right_face)}});
        circles[a.curve].push_back(k);
    }
    j["circles"] = circles;
    j["labels_consistent"] = an.labels_consistent();
    return j.dump(2);
}

}  // namespace latpoly
