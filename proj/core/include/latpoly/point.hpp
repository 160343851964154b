#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace latpoly {

using coord = std::int64_t;

struct Point {
    coord x = 0;
    coord y = 0;

    friend constexpr auto operator<=>(const Point&, const Point&) = default;
    friend constexpr bool operator==(const Point&, const Point&) = default;
};

constexpr Point swapped(Point p) { return {p.y, p.x}; }

std::string to_string(Point p);

using PointSet = std::vector<Point>;  // kept sorted and duplicate-free

PointSet normalized(PointSet pts);
bool contains(const PointSet& sorted_pts, Point p);

// oriented axis-parallel segment
struct Edge {
    Point from;
    Point to;
    bool vertical() const { return from.x == to.x; }
    friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

struct PointHash {
    std::size_t operator()(Point p) const noexcept {
        return std::hash<coord>{}(p.x * 0x9E3779B97F4A7C15ULL ^ (p.y + 0x632BE59BD9B4E019ULL));
    }
};

}  // namespace latpoly
