#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "latpoly/point.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

// Rectilinear realisation of a family of immersed oriented closed curves with
// marked points. Coordinates are rank-compressed after every change.
struct ImmersedGraph {
    std::vector<std::vector<Point>> curves;  // cyclic corner lists
    PointSet marks;

    bool empty() const { return curves.empty(); }
    friend bool operator==(const ImmersedGraph&, const ImmersedGraph&) = default;
};

enum class Deformation { I, II, II_band, III, IV };
std::string to_string(Deformation d);

struct Site {
    Deformation kind = Deformation::I;
    std::vector<int> arcs;  // arc ids in the current analysis
    int curve = -1;         // for IV
    int side = 0;           // for the band variant of II
    friend bool operator==(const Site&, const Site&) = default;
};

struct GraphArc {
    int curve = 0;
    std::vector<Point> pts;  // from one crossing to the next, or the whole curve when closed
    bool closed = false;
    std::vector<Point> marks;
    int left_face = 0;
    int right_face = 0;
};

// Derived structure: crossings, arcs between crossings, faces and their labels.
class GraphAnalysis {
public:
    explicit GraphAnalysis(const ImmersedGraph& g);

    const ImmersedGraph& graph() const { return g_; }
    const std::vector<GraphArc>& arcs() const { return arcs_; }
    const std::vector<int>& face_labels() const { return labels_; }
    int label(int face) const { return labels_[face]; }
    int outer_face() const { return out_face_; }
    // crossing point -> (curve of horizontal strand, curve of vertical strand)
    const std::vector<std::pair<Point, std::pair<int, int>>>& crossings() const { return crossings_; }
    bool labels_consistent() const;
    std::vector<Site> sites() const;
    // empty when the site applies, otherwise the failed clause
    std::string check(const Site& s) const;

    // internal geometry shared with the rewriting code
    int face_of_cell(coord i, coord j) const;
    int winding(coord i, coord j) const;
    bool vwall(coord x, coord j) const;
    bool hwall(coord i, coord y) const;
    coord width() const { return X_; }
    coord height() const { return Y_; }
    int component(int curve) const { return comp_[curve]; }
    bool is_crossing(Point p) const;
    bool self_crossing(Point p) const;
    std::vector<int> successor() const;  // next arc along the same curve

private:
    ImmersedGraph g_;
    std::vector<std::pair<Point, std::pair<int, int>>> crossings_;
    std::vector<GraphArc> arcs_;
    coord X_ = 0, Y_ = 0;
    std::vector<int> wind_;
    std::vector<int> cell_face_;
    std::vector<int> labels_;
    int out_face_ = 0;
    std::vector<char> vwall_, hwall_;
    std::vector<int> comp_;
};

ImmersedGraph from_polytope(const LatticePolytope& p);
ImmersedGraph apply_deformation(const ImmersedGraph& g, const Site& s);

struct Reduction {
    ImmersedGraph graph;
    std::vector<Deformation> trace;
};
// deterministic first-site strategy without a generator, uniform random choice with one
Reduction reduce(const ImmersedGraph& g, std::mt19937_64* rng = nullptr);
bool minimal_achievable(const LatticePolytope& p);

// invariant under planar isotopy of the labelled, marked diagram
std::string canonical_form(const ImmersedGraph& g);
std::string dump_json(const ImmersedGraph& g);

}  // namespace latpoly
