#pragma once

#include <vector>

#include "latpoly/point.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

struct Rectangle {
    Point v;
    Point w;
    coord x0() const { return std::min(v.x, w.x); }
    coord x1() const { return std::max(v.x, w.x); }
    coord y0() const { return std::min(v.y, w.y); }
    coord y1() const { return std::max(v.y, w.y); }
    Point v_tilde() const { return {w.x, v.y}; }
    Point w_tilde() const { return {v.x, w.y}; }
    coord area() const { return (x1() - x0()) * (y1() - y0()); }
};

// Compressed grid cut out by a set of axis-parallel edges. Cell (i,j) spans
// [xs[i],xs[i+1]] x [ys[j],ys[j+1]].
struct Arrangement {
    std::vector<coord> xs;
    std::vector<coord> ys;
    std::vector<int> winding;
    std::vector<Point> crossings;

    std::size_t nx() const { return xs.empty() ? 0 : xs.size() - 1; }
    std::size_t ny() const { return ys.empty() ? 0 : ys.size() - 1; }
    int omega(std::size_t i, std::size_t j) const { return winding[i * ny() + j]; }
    coord cell_area(std::size_t i, std::size_t j) const { return (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]); }
};

Arrangement arrangement(const std::vector<Edge>& edges, std::vector<coord> extra_xs = {},
                        std::vector<coord> extra_ys = {});

coord area_signed(const Arrangement& a);
coord area_abs(const Arrangement& a);
coord area_signed(const LatticePolytope& p);
coord area_abs(const LatticePolytope& p);
coord area_abs(const std::vector<Edge>& edges);

coord signed_rect_area(Point v, Point w);
inline coord signed_rect_area(const Rectangle& r) { return signed_rect_area(r.v, r.w); }

// sum of shoelace areas over the boundary cycles
coord shoelace_area(const LatticePolytope& p);
coord shoelace_area(const std::vector<Point>& cycle);

std::vector<Point> crossings(const std::vector<Edge>& edges);
int crossing_count(const LatticePolytope& p);

bool region_contains(const LatticePolytope& p, const Rectangle& r);
bool boundary_interval_overlap(const LatticePolytope& p, const Rectangle& r);

// Closed point sets on the doubled grid of a shared coordinate system: even/even
// entries are grid vertices, odd/odd are cells, mixed are unit segments.
class SiteGrid {
public:
    SiteGrid(std::vector<coord> xs, std::vector<coord> ys);
    std::size_t width() const { return 2 * xs_.size() - 1; }
    std::size_t height() const { return 2 * ys_.size() - 1; }
    const std::vector<coord>& xs() const { return xs_; }
    const std::vector<coord>& ys() const { return ys_; }

    // closure of the cells with nonzero winding, plus the edges themselves
    std::vector<char> closed_region(const std::vector<Edge>& edges) const;
    std::vector<char> boundary(const std::vector<Edge>& edges) const;

private:
    std::size_t ix(coord x) const;
    std::size_t iy(coord y) const;
    std::vector<coord> xs_;
    std::vector<coord> ys_;
};

std::vector<coord> coordinate_values_x(const std::vector<Edge>& edges);
std::vector<coord> coordinate_values_y(const std::vector<Edge>& edges);

// closed regions (boundary included) share no point
bool regions_disjoint(const std::vector<Edge>& a, const std::vector<Edge>& b);

}  // namespace latpoly
