#include "latpoly/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "latpoly/error.hpp"
#include "latpoly/geometry.hpp"
#include "latpoly/reduced_graph.hpp"

namespace latpoly {

int oracle_bound() {
    if (const char* env = std::getenv("LATPOLY_ORACLE_BOUND")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1 || v > 12)
            throw Error(ErrorKind::usage, std::string("LATPOLY_ORACLE_BOUND must be an integer in [1,12], got '") + env + "'");
        return static_cast<int>(v);
    }
    return 6;
}

namespace {

template <class Successors>
SearchGraph dijkstra(const PointSet& start, const PointSet& goal, Successors successors, bool mirrored) {
    SearchGraph g;
    std::map<PointSet, std::size_t> id;
    auto intern = [&](const PointSet& s) {
        auto [it, fresh] = id.emplace(s, g.states.size());
        if (fresh) {
            g.states.push_back(s);
            g.dist.push_back(-1);
        }
        return it->second;
    };
    intern(start);
    g.dist[0] = 0;
    using Entry = std::pair<coord, PointSet>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    pq.push({0, start});
    std::vector<bool> done;
    while (!pq.empty()) {
        auto [d, s] = pq.top();
        pq.pop();
        std::size_t a = id.at(s);
        if (done.size() < g.states.size()) done.resize(g.states.size(), false);
        if (done[a] || d != g.dist[a]) continue;
        done[a] = true;
        for (const auto& m : successors(s)) {
            PointSet t = mirrored ? apply_mirrored(LatticePresentation(s), m).points() : apply_move(s, m);
            coord c = m.rect().area();
            std::size_t b = intern(t);
            g.arcs.push_back({a, b, m, c});
            if (g.dist[b] < 0 || d + c < g.dist[b]) {
                g.dist[b] = d + c;
                pq.push({d + c, t});
            }
        }
    }
    if (auto it = id.find(goal); it != id.end()) {
        g.goal = it->second;
        g.goal_reached = true;
    }
    return g;
}

std::vector<Move> polytope_moves(const PointSet& s) {
    std::vector<Move> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) out.push_back({s[i], s[j]});
    return out;
}

bool tight_arc(const SearchGraph& g, const SearchGraph::Arc& a) { return g.dist[a.from] + a.cost == g.dist[a.to]; }

TransformationSequence to_sequence(const SearchGraph& g, const PointSet& goal) {
    TransformationSequence seq{g.states[0], goal, g.witness(), "oracle"};
    return seq;
}

}  // namespace

std::vector<SearchGraph::Arc> SearchGraph::minimal_arcs() const {
    std::vector<Arc> out;
    if (!goal_reached) return out;
    std::vector<bool> useful(states.size(), false);
    useful[goal] = true;
    // process targets in decreasing distance so usefulness propagates backwards
    std::vector<std::size_t> order(states.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] > dist[b]; });
    std::vector<std::vector<std::size_t>> into(states.size());
    for (std::size_t k = 0; k < arcs.size(); ++k)
        if (tight_arc(*this, arcs[k])) into[arcs[k].to].push_back(k);
    for (auto s : order) {
        if (!useful[s]) continue;
        for (auto k : into[s]) useful[arcs[k].from] = true;
    }
    for (const auto& a : arcs)
        if (tight_arc(*this, a) && useful[a.to] && dist[a.to] <= dist[goal]) out.push_back(a);
    return out;
}

std::uint64_t SearchGraph::count_minimal() const {
    if (!goal_reached) return 0;
    std::vector<std::size_t> order(states.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
    std::vector<std::vector<std::size_t>> out_of(states.size());
    for (std::size_t k = 0; k < arcs.size(); ++k)
        if (tight_arc(*this, arcs[k])) out_of[arcs[k].from].push_back(k);
    std::vector<std::uint64_t> ways(states.size(), 0);
    ways[0] = 1;
    for (auto s : order)
        for (auto k : out_of[s]) ways[arcs[k].to] += ways[s];
    return ways[goal];
}

std::vector<Move> SearchGraph::witness() const {
    if (!goal_reached) fail("goal state is unreachable");
    std::vector<Move> rev;
    std::size_t at = goal;
    while (at != 0) {
        const Arc* best = nullptr;
        for (const auto& a : arcs)
            if (a.to == at && tight_arc(*this, a) && (!best || std::pair{states[a.from], a.move.v} < std::pair{states[best->from], best->move.v}))
                best = &a;
        if (!best) fail("broken predecessor chain");
        rev.push_back(best->move);
        at = best->from;
    }
    return {rev.rbegin(), rev.rend()};
}

std::vector<Move> chord_moves(const PointSet& state) {
    std::vector<Point> up;
    for (auto q : state)
        if (q.x < q.y) up.push_back(q);
    std::vector<Move> out;
    for (std::size_t i = 0; i < up.size(); ++i)
        for (std::size_t j = i + 1; j < up.size(); ++j) {
            out.push_back({up[i], up[j], true});
            out.push_back({up[i], swapped(up[j]), true});
        }
    return out;
}

SearchGraph explore_polytope(const LatticePolytope& p) {
    if (static_cast<int>(p.n()) > oracle_bound())
        fail_resource("polytope with n=" + std::to_string(p.n()) + " exceeds the oracle bound " + std::to_string(oracle_bound()));
    return dijkstra(p.ver0(), p.ver1(), polytope_moves, false);
}

SearchGraph explore_chord(const LatticePresentation& d, const LatticePresentation& d2) {
    if (d.values() != d2.values()) fail("presentations do not share the same set of x,y-components");
    if (static_cast<int>(d.arc_count()) > oracle_bound())
        fail_resource("instance with " + std::to_string(d.arc_count()) + " arcs exceeds the oracle bound " +
                      std::to_string(oracle_bound()));
    return dijkstra(d.points(), d2.points(), chord_moves, true);
}

OracleResult min_area_polytope(const LatticePolytope& p) {
    auto g = explore_polytope(p);
    return {g.dist[g.goal], to_sequence(g, p.ver1()), g.count_minimal()};
}

OracleResult min_area_chord(const LatticePresentation& d, const LatticePresentation& d2) {
    auto g = explore_chord(d, d2);
    if (!g.goal_reached) fail("terminal presentation is unreachable");
    return {g.dist[g.goal], to_sequence(g, d2.points()), g.count_minimal()};
}

std::uint64_t count_min_sequences(const LatticePolytope& p) { return explore_polytope(p).count_minimal(); }

std::uint64_t count_min_sequences(const LatticePresentation& d, const LatticePresentation& d2) {
    return explore_chord(d, d2).count_minimal();
}

std::uint64_t count_minimal(const LatticePolytope& p) {
    if (is_simple(p) && p.isolated().empty()) return count_divisions(p);
    return count_min_sequences(p);
}

std::vector<LatticePolytope> generate_instances(int n, const InstanceFilter& filter) {
    if (n < 1) fail("instance size must be positive");
    if (n > oracle_bound()) fail_resource("n=" + std::to_string(n) + " exceeds the oracle bound " + std::to_string(oracle_bound()));
    std::vector<LatticePolytope> out;
    std::set<std::pair<Permutation, Permutation>> classes;
    auto perms = all_permutations(n);
    for (const auto& s : perms)
        for (const auto& t : perms) {
            auto p = polytope_from_sigmas(s, t);
            if (filter.dedup && !classes.insert(canonical_sigmas(p)).second) continue;
            if (filter.simple && !is_simple(p)) continue;
            if (filter.connected && !is_connected(p)) continue;
            if (filter.condition1 && !satisfies_condition1(p)) continue;
            if (filter.condition2 && !satisfies_condition2(p)) continue;
            if (filter.disjoint_mirror && !regions_disjoint(p.edges(), mirror(p).edges())) continue;
            out.push_back(std::move(p));
        }
    return out;
}

std::string instance_key(const LatticePolytope& p) {
    auto join = [](const Permutation& s) {
        std::string out;
        for (std::size_t j = 0; j < s.size(); ++j) out += (j ? "," : "") + std::to_string(s[j]);
        return out;
    };
    return join(sigma(p, 0)) + "|" + join(sigma(p, 1));
}

std::vector<CensusRow> census(int n) {
    std::vector<CensusRow> rows;
    for (const auto& p : generate_instances(n)) {
        CensusRow r;
        r.n = n;
        r.key = instance_key(p);
        r.area_abs = area_abs(p);
        r.half_area_abs_pair = area_abs(union_of(p, mirror(p))) / 2;
        auto g = explore_polytope(p);
        r.oracle_min = g.dist[g.goal];
        r.f_count = g.count_minimal();
        r.condition1 = satisfies_condition1(p);
        r.condition2 = satisfies_condition2(p);
        r.reduced_graph_empty = minimal_achievable(p);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string census_table(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "n\tinstance_key\tarea_abs\thalf_area_abs_pair\toracle_min\tf_count\tcondition1\tcondition2\treduced_graph_empty\n";
    for (const auto& r : rows)
        out << r.n << '\t' << r.key << '\t' << r.area_abs << '\t' << r.half_area_abs_pair << '\t' << r.oracle_min << '\t'
            << r.f_count << '\t' << r.condition1 << '\t' << r.condition2 << '\t' << r.reduced_graph_empty << '\n';
    return out.str();
}

bool is_chord_gap_witness(const LatticePresentation& d, const LatticePresentation& d2, GapWitness* out) {
    coord cm = min_area_chord(d, d2).cost;
    GapWitness w{d, d2, cm, {}, {}};
    bool hits = false, all_above = true;
    for (const auto& pair : associated_polytopes(d, d2, Strategy::all)) {
        coord a = area_abs(pair.p);
        coord m = min_area_polytope(pair.p).cost;
        w.choice_areas.push_back(a);
        w.choice_minima.push_back(m);
        hits = hits || a == cm;
        all_above = all_above && m > cm;
    }
    if (out) *out = w;
    return hits && all_above;
}

std::vector<GapWitness> find_chord_gap_witnesses(int arcs, std::size_t limit) {
    std::vector<coord> values;
    for (int v = 1; v <= 2 * arcs; ++v) values.push_back(v);
    auto ms = enumerate_matchings(values);
    std::vector<GapWitness> out;
    for (const auto& d : ms)
        for (const auto& d2 : ms) {
            GapWitness w;
            if (is_chord_gap_witness(d, d2, &w)) {
                out.push_back(std::move(w));
                if (out.size() >= limit) return out;
            }
        }
    return out;
}

}  // namespace latpoly
