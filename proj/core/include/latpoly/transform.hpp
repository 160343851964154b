#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latpoly/chord.hpp"
#include "latpoly/geometry.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

struct Move {
    Point v;
    Point w;
    bool mirrored = false;
    Rectangle rect() const { return {v, w}; }
    friend bool operator==(const Move&, const Move&) = default;
};

struct TransformationSequence {
    PointSet initial;
    PointSet terminal;
    std::vector<Move> moves;
    // how a constructive sequence was obtained: "peel", "search" or "oracle"
    std::string method;
};

PointSet apply_move(const PointSet& state, const Move& m);
LatticePresentation apply_mirrored(const LatticePresentation& d, const Move& m);
LatticePolytope apply_polytope_move(const LatticePolytope& p, const Move& m);

struct SequenceArea {
    coord cost = 0;
    coord signed_area = 0;
};
// replays from the declared initial state and checks the declared terminal state
SequenceArea sequence_area(const TransformationSequence& s);

// a move lowers area_abs by exactly its own area iff its sign agrees with the
// winding on every cell it covers
bool is_tight(const LatticePolytope& p, const Move& m);
std::vector<Move> tight_moves(const LatticePolytope& p);

bool valid_peel(const LatticePolytope& q, const Rectangle& r);
std::vector<Move> valid_peels(const LatticePolytope& q);

struct Peel {
    Rectangle rect;
    std::vector<LatticePolytope> pieces;
};
Peel peel_rectangle(const LatticePolytope& q);

TransformationSequence transform_simple(const LatticePolytope& q);
TransformationSequence transform_with_holes(const LatticePolytope& q, const std::vector<LatticePolytope>& holes);

bool satisfies_condition1(const LatticePolytope& p);
bool satisfies_condition2(const PolytopePair& pair);
bool satisfies_condition2(const LatticePolytope& p);

// closed curves obtained by turning at every crossing
std::vector<std::vector<Point>> seifert_circles(const LatticePolytope& p);
// simple directed cycles of the boundary with crossings as vertices
std::vector<std::vector<Point>> embedded_cycles(const LatticePolytope& p);

TransformationSequence minimal_transformation(const LatticePolytope& p);
// Mirrored-move sequence d -> d2 lifted from an associated polytope that is
// disjoint from its mirror and meets a construction condition; nullopt otherwise.
std::optional<TransformationSequence> construct_chord_transformation(const LatticePresentation& d,
                                                                     const LatticePresentation& d2);

using Division = std::vector<Rectangle>;  // rectangle k carries label k+1
std::vector<Division> enumerate_divisions(const LatticePolytope& q);
std::uint64_t count_divisions(const LatticePolytope& q);

}  // namespace latpoly
