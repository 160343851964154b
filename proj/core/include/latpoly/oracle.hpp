#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latpoly/chord.hpp"
#include "latpoly/polytope.hpp"
#include "latpoly/transform.hpp"

namespace latpoly {

// largest n the exhaustive searches accept; LATPOLY_ORACLE_BOUND overrides the default 6
int oracle_bound();

// Whole reachable move graph with distances from the start state. Moves are
// reversible at equal cost, so distances are symmetric.
struct SearchGraph {
    struct Arc {
        std::size_t from;
        std::size_t to;
        Move move;
        coord cost;
    };
    std::vector<PointSet> states;  // states[0] is the start
    std::vector<coord> dist;
    std::vector<Arc> arcs;
    std::size_t goal = 0;
    bool goal_reached = false;

    // arcs lying on at least one minimal start-to-goal sequence
    std::vector<Arc> minimal_arcs() const;
    std::uint64_t count_minimal() const;
    std::vector<Move> witness() const;
};

SearchGraph explore_polytope(const LatticePolytope& p);
SearchGraph explore_chord(const LatticePresentation& d, const LatticePresentation& d2);

// mirrored moves available in a symmetric state, one per rectangle pair
std::vector<Move> chord_moves(const PointSet& state);

struct OracleResult {
    coord cost = 0;
    TransformationSequence witness;
    std::uint64_t count = 0;
};

OracleResult min_area_polytope(const LatticePolytope& p);
OracleResult min_area_chord(const LatticePresentation& d, const LatticePresentation& d2);
std::uint64_t count_min_sequences(const LatticePolytope& p);
std::uint64_t count_min_sequences(const LatticePresentation& d, const LatticePresentation& d2);

// f(P): division count for simple polygons without isolated vertices, exhaustive count otherwise
std::uint64_t count_minimal(const LatticePolytope& p);

struct InstanceFilter {
    bool dedup = false;
    bool simple = false;
    bool connected = false;
    bool condition1 = false;
    bool condition2 = false;
    bool disjoint_mirror = false;
};
std::vector<LatticePolytope> generate_instances(int n, const InstanceFilter& filter = {});
std::string instance_key(const LatticePolytope& p);

struct CensusRow {
    int n = 0;
    std::string key;
    coord area_abs = 0;
    coord half_area_abs_pair = 0;
    coord oracle_min = 0;
    std::uint64_t f_count = 0;
    bool condition1 = false;
    bool condition2 = false;
    bool reduced_graph_empty = false;
};
std::vector<CensusRow> census(int n);
std::string census_table(const std::vector<CensusRow>& rows);

struct GapWitness {
    LatticePresentation d;
    LatticePresentation d2;
    coord chord_min = 0;
    std::vector<coord> choice_areas;
    std::vector<coord> choice_minima;
};
// chord instances whose minimum equals area_abs of some component choice while
// every polytope-only transformation of every choice costs more
std::vector<GapWitness> find_chord_gap_witnesses(int arcs, std::size_t limit);
bool is_chord_gap_witness(const LatticePresentation& d, const LatticePresentation& d2, GapWitness* out = nullptr);

}  // namespace latpoly
