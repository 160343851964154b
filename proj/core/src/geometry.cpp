#include "latpoly/geometry.hpp"

#include <algorithm>
#include <cstdlib>

#include "latpoly/error.hpp"

namespace latpoly {

namespace {

std::vector<coord> sorted_unique(std::vector<coord> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::size_t index_of(const std::vector<coord>& v, coord c) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
}

void check_edge(const Edge& e) {
    bool axis = (e.from.x == e.to.x) != (e.from.y == e.to.y);
    if (!axis) fail("segment " + to_string(e.from) + "->" + to_string(e.to) + " is not a non-degenerate axis-parallel segment");
}

}  // namespace

std::vector<coord> coordinate_values_x(const std::vector<Edge>& edges) {
    std::vector<coord> v;
    for (const auto& e : edges) v.insert(v.end(), {e.from.x, e.to.x});
    return sorted_unique(std::move(v));
}

std::vector<coord> coordinate_values_y(const std::vector<Edge>& edges) {
    std::vector<coord> v;
    for (const auto& e : edges) v.insert(v.end(), {e.from.y, e.to.y});
    return sorted_unique(std::move(v));
}

std::vector<Point> crossings(const std::vector<Edge>& edges) {
    std::vector<Point> out;
    for (const auto& h : edges) {
        if (h.vertical()) continue;
        coord hx0 = std::min(h.from.x, h.to.x), hx1 = std::max(h.from.x, h.to.x), y = h.from.y;
        for (const auto& v : edges) {
            if (!v.vertical()) continue;
            coord vy0 = std::min(v.from.y, v.to.y), vy1 = std::max(v.from.y, v.to.y), x = v.from.x;
            if (hx0 < x && x < hx1 && vy0 < y && y < vy1) out.push_back({x, y});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Arrangement arrangement(const std::vector<Edge>& edges, std::vector<coord> extra_xs, std::vector<coord> extra_ys) {
    for (const auto& e : edges) check_edge(e);
    Arrangement a;
    auto ex = coordinate_values_x(edges), ey = coordinate_values_y(edges);
    extra_xs.insert(extra_xs.end(), ex.begin(), ex.end());
    extra_ys.insert(extra_ys.end(), ey.begin(), ey.end());
    a.xs = sorted_unique(std::move(extra_xs));
    a.ys = sorted_unique(std::move(extra_ys));
    std::size_t nx = a.nx(), ny = a.ny();
    a.winding.assign(nx * ny, 0);
    if (nx == 0 || ny == 0) return a;
    // acc[k][j]: signed multiplicity of vertical edges on line xs[k] over row j
    std::vector<int> acc(a.xs.size() * ny, 0);
    for (const auto& e : edges) {
        if (!e.vertical()) continue;
        int s = e.to.y > e.from.y ? 1 : -1;
        std::size_t k = index_of(a.xs, e.from.x);
        std::size_t j0 = index_of(a.ys, std::min(e.from.y, e.to.y)), j1 = index_of(a.ys, std::max(e.from.y, e.to.y));
        for (std::size_t j = j0; j < j1; ++j) acc[k * ny + j] += s;
    }
    for (std::size_t j = 0; j < ny; ++j) {
        int run = 0;
        for (std::size_t i = nx; i-- > 0;) {
            run += acc[(i + 1) * ny + j];
            a.winding[i * ny + j] = run;
        }
    }
    a.crossings = crossings(edges);
    return a;
}

coord area_signed(const Arrangement& a) {
    coord s = 0;
    for (std::size_t i = 0; i < a.nx(); ++i)
        for (std::size_t j = 0; j < a.ny(); ++j) s += a.omega(i, j) * a.cell_area(i, j);
    return s;
}

coord area_abs(const Arrangement& a) {
    coord s = 0;
    for (std::size_t i = 0; i < a.nx(); ++i)
        for (std::size_t j = 0; j < a.ny(); ++j) s += std::abs(a.omega(i, j)) * a.cell_area(i, j);
    return s;
}

coord area_signed(const LatticePolytope& p) { return area_signed(arrangement(p.edges())); }
coord area_abs(const LatticePolytope& p) { return area_abs(arrangement(p.edges())); }
coord area_abs(const std::vector<Edge>& edges) { return area_abs(arrangement(edges)); }

coord signed_rect_area(Point v, Point w) {
    if (v.x == w.x || v.y == w.y) fail("degenerate rectangle " + to_string(v) + "-" + to_string(w));
    coord dx = w.x - v.x, dy = w.y - v.y;
    coord mag = std::abs(dx) * std::abs(dy);
    return (dx > 0) == (dy > 0) ? mag : -mag;
}

coord shoelace_area(const std::vector<Point>& cycle) {
    coord twice = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& a = cycle[i];
        const auto& b = cycle[(i + 1) % cycle.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / 2;
}

coord shoelace_area(const LatticePolytope& p) {
    coord s = 0;
    for (const auto& c : p.cycles()) s += shoelace_area(c);
    return s;
}

int crossing_count(const LatticePolytope& p) { return static_cast<int>(crossings(p.edges()).size()); }

bool region_contains(const LatticePolytope& p, const Rectangle& r) {
    auto a = arrangement(p.edges(), {r.x0(), r.x1()}, {r.y0(), r.y1()});
    std::size_t i0 = index_of(a.xs, r.x0()), i1 = index_of(a.xs, r.x1());
    std::size_t j0 = index_of(a.ys, r.y0()), j1 = index_of(a.ys, r.y1());
    for (std::size_t i = i0; i < i1; ++i)
        for (std::size_t j = j0; j < j1; ++j)
            if (a.omega(i, j) == 0) return false;
    return i0 < i1 && j0 < j1;
}

bool boundary_interval_overlap(const LatticePolytope& p, const Rectangle& r) {
    for (const auto& e : p.edges()) {
        if (e.vertical()) {
            coord lo = std::min(e.from.y, e.to.y), hi = std::max(e.from.y, e.to.y);
            if ((e.from.x == r.x0() || e.from.x == r.x1()) && std::min(hi, r.y1()) > std::max(lo, r.y0())) return true;
        } else {
            coord lo = std::min(e.from.x, e.to.x), hi = std::max(e.from.x, e.to.x);
            if ((e.from.y == r.y0() || e.from.y == r.y1()) && std::min(hi, r.x1()) > std::max(lo, r.x0())) return true;
        }
    }
    return false;
}

SiteGrid::SiteGrid(std::vector<coord> xs, std::vector<coord> ys)
    : xs_(sorted_unique(std::move(xs))), ys_(sorted_unique(std::move(ys))) {
    if (xs_.empty() || ys_.empty()) fail("site grid needs at least one coordinate per axis");
}

std::size_t SiteGrid::ix(coord x) const { return 2 * index_of(xs_, x); }
std::size_t SiteGrid::iy(coord y) const { return 2 * index_of(ys_, y); }

std::vector<char> SiteGrid::boundary(const std::vector<Edge>& edges) const {
    std::vector<char> out(width() * height(), 0);
    for (const auto& e : edges) {
        std::size_t a = ix(e.from.x), b = ix(e.to.x), c = iy(e.from.y), d = iy(e.to.y);
        for (std::size_t i = std::min(a, b); i <= std::max(a, b); ++i)
            for (std::size_t j = std::min(c, d); j <= std::max(c, d); ++j) out[i * height() + j] = 1;
    }
    return out;
}

std::vector<char> SiteGrid::closed_region(const std::vector<Edge>& edges) const {
    auto out = boundary(edges);
    auto a = arrangement(edges, xs_, ys_);
    if (a.xs != xs_ || a.ys != ys_) fail("edges use coordinates outside the site grid");
    for (std::size_t i = 0; i < a.nx(); ++i)
        for (std::size_t j = 0; j < a.ny(); ++j) {
            if (a.omega(i, j) == 0) continue;
            for (std::size_t si = 2 * i; si <= 2 * i + 2; ++si)
                for (std::size_t sj = 2 * j; sj <= 2 * j + 2; ++sj) out[si * height() + sj] = 1;
        }
    return out;
}

bool regions_disjoint(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    if (a.empty() || b.empty()) return true;
    auto xs = coordinate_values_x(a), ys = coordinate_values_y(a);
    auto bx = coordinate_values_x(b), by = coordinate_values_y(b);
    xs.insert(xs.end(), bx.begin(), bx.end());
    ys.insert(ys.end(), by.begin(), by.end());
    SiteGrid g(xs, ys);
    auto ra = g.closed_region(a), rb = g.closed_region(b);
    for (std::size_t k = 0; k < ra.size(); ++k)
        if (ra[k] && rb[k]) return false;
    return true;
}

}  // namespace latpoly
