#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latpoly/chord.hpp"
#include "latpoly/permutation.hpp"
#include "latpoly/point.hpp"

namespace latpoly {

class LatticePolytope {
public:
    LatticePolytope() = default;

    // Strict construction: equal x-sets, equal y-sets, 2n distinct values.
    static LatticePolytope build(PointSet v0, PointSet v1);
    // Each value used at most once as an x (and once as a y) per side; x-values
    // may coincide with y-values. Needed for the union of a polytope and its mirror.
    static LatticePolytope build_relaxed(PointSet v0, PointSet v1);

    const PointSet& ver0() const { return ver0_; }
    const PointSet& ver1() const { return ver1_; }
    std::size_t n() const { return ver0_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    // boundary cycles as vertex walks, each starting at its least vertex, sorted
    const std::vector<std::vector<Point>>& cycles() const { return cycles_; }
    PointSet isolated() const;
    // the next vertex along the boundary; identity for isolated vertices
    Point next(Point v) const;

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.ver0_ == b.ver0_ && a.ver1_ == b.ver1_;
    }

private:
    void derive(bool strict);

    PointSet ver0_;
    PointSet ver1_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Point>> cycles_;
    std::vector<std::pair<Point, Point>> next_;  // sorted by first
};

inline LatticePolytope build_polytope(PointSet v0, PointSet v1) {
    return LatticePolytope::build(std::move(v0), std::move(v1));
}

// split into one polytope per boundary cycle (isolated vertices dropped)
std::vector<LatticePolytope> component_polytopes(const LatticePolytope& p);
LatticePolytope union_of(const LatticePolytope& a, const LatticePolytope& b);

LatticePolytope mirror(const LatticePolytope& p);
LatticePolytope rotate(const LatticePolytope& p);
LatticePolytope reverse(const LatticePolytope& p);

Permutation sigma(const LatticePolytope& p, int side);
std::pair<Permutation, Permutation> sigma_pair(const LatticePolytope& p);
// points {(j, s(j))} on side 0 and {(j, t(j))} on side 1, values shifted above n
LatticePolytope polytope_from_sigmas(const Permutation& s, const Permutation& t);

std::vector<std::pair<Permutation, Permutation>> equivalence_orbit(const Permutation& s0, const Permutation& s1);
bool equivalent(const LatticePolytope& p, const LatticePolytope& q);
// smallest element of the orbit, usable as a class key
std::pair<Permutation, Permutation> canonical_sigmas(const LatticePolytope& p);

bool is_connected(const LatticePolytope& p);
bool is_simple(const LatticePolytope& p);
bool is_trivial(const LatticePolytope& p);  // only isolated vertices

struct PolytopePair {
    LatticePolytope p;
    LatticePolytope mirror;
};

enum class Strategy { lex, disjoint, all };
Strategy parse_strategy(const std::string& s);

// the full polytope whose initial vertices are d and terminal vertices are d2
LatticePolytope full_polytope(const LatticePresentation& d, const LatticePresentation& d2);
std::vector<PolytopePair> associated_polytopes(const LatticePresentation& d, const LatticePresentation& d2,
                                               Strategy strategy);

}  // namespace latpoly
