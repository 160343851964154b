#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "latpoly/point.hpp"

namespace latpoly {

struct Arc {
    int a = 0;
    int b = 0;
    friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
    friend constexpr bool operator==(const Arc&, const Arc&) = default;
};

// Partial matching on vertices 1..m; arcs are stored sorted.
class ChordDiagram {
public:
    ChordDiagram() = default;
    ChordDiagram(int m, std::vector<Arc> arcs);

    int m() const { return m_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    std::vector<int> isolated() const;

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

private:
    int m_ = 0;
    std::vector<Arc> arcs_;
};

// Symmetric off-diagonal point set with each value used once per axis.
class LatticePresentation {
public:
    LatticePresentation() = default;
    explicit LatticePresentation(PointSet points);

    const PointSet& points() const { return points_; }
    // points with x < y, one per arc
    std::vector<Point> upper() const;
    std::size_t arc_count() const { return points_.size() / 2; }
    // sorted coordinate values used by the presentation
    std::vector<coord> values() const;

    friend bool operator==(const LatticePresentation&, const LatticePresentation&) = default;

private:
    PointSet points_;
};

LatticePresentation to_lattice_presentation(const ChordDiagram& d);
ChordDiagram from_lattice_presentation(const LatticePresentation& p, int m);

enum class ArcPairClass { separated, nesting, crossing };
enum class RectangleType { I, II, III, IV };

std::string to_string(ArcPairClass c);
std::string to_string(RectangleType t);

ArcPairClass classify_arc_pair(Arc a1, Arc a2);
RectangleType rectangle_type(Point v, Point w);

// closed containment of R(v,w) in the half-plane x <= y
bool rect_in_upper(Point v, Point w);

std::array<bool, 3> separated_criteria(Point v1, Point v2);

// The three equivalent characterisations of a k-nesting (resp. k-crossing) family,
// evaluated on upper points: chain order, all pairs, consecutive pairs.
std::array<bool, 3> nesting_conditions(const std::vector<Point>& upper_points);
std::array<bool, 3> crossing_conditions(const std::vector<Point>& upper_points);

std::optional<int> is_k_nesting(const ChordDiagram& d);

struct CrossingWitness {
    int k = 0;
    std::vector<Arc> arcs;
};
// every partial matching on 1..m with at most max_arcs arcs
std::vector<ChordDiagram> enumerate_diagrams(int m, int max_arcs);
// perfect matchings on the given values, as presentations
std::vector<LatticePresentation> enumerate_matchings(const std::vector<coord>& values);

CrossingWitness max_crossing_witness(const ChordDiagram& d);
int max_crossing(const ChordDiagram& d);

}  // namespace latpoly
