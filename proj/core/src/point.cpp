#include "latpoly/point.hpp"

#include <algorithm>

namespace latpoly {

std::string to_string(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

PointSet normalized(PointSet pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool contains(const PointSet& sorted_pts, Point p) {
    return std::binary_search(sorted_pts.begin(), sorted_pts.end(), p);
}

}  // namespace latpoly
