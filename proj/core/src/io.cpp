#include "latpoly/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "latpoly/error.hpp"

namespace latpoly {

using nlohmann::json;

namespace {

struct TextPos {
    int line = 1;
    int column = 1;
};

TextPos position_of(const std::string& text, std::size_t offset) {
    TextPos p;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

[[noreturn]] void fail_at(TextPos p, const std::string& what) {
    fail("line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": " + what);
}

struct Located {
    long value;
    TextPos pos;
};

// shared endpoint checks for both chord formats
ChordDiagram checked_chord(long m, const std::vector<std::pair<Located, Located>>& arcs, TextPos m_pos) {
    if (m < 1 || m > 1000000) fail_at(m_pos, "m must be a positive integer, got " + std::to_string(m));
    std::map<long, TextPos> used;
    std::vector<Arc> out;
    for (const auto& [a, b] : arcs) {
        for (const auto& e : {a, b}) {
            if (e.value < 1 || e.value > m)
                fail_at(e.pos, "endpoint " + std::to_string(e.value) + " is outside 1.." + std::to_string(m));
            auto [it, fresh] = used.emplace(e.value, e.pos);
            if (!fresh)
                fail_at(e.pos, "endpoint " + std::to_string(e.value) + " already used at line " +
                                   std::to_string(it->second.line) + ", column " + std::to_string(it->second.column));
        }
        out.push_back({static_cast<int>(a.value), static_cast<int>(b.value)});
    }
    return ChordDiagram(static_cast<int>(m), out);
}

class LineScanner {
public:
    LineScanner(const std::string& s, int line, int column0) : s_(s), line_(line), col0_(column0) {}
    void skip_space() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\r')) ++i_;
    }
    bool done() {
        skip_space();
        return i_ >= s_.size();
    }
    TextPos pos() const { return {line_, col0_ + static_cast<int>(i_)}; }
    void expect(char c) {
        skip_space();
        if (i_ >= s_.size() || s_[i_] != c) fail_at(pos(), std::string("expected '") + c + "'");
        ++i_;
    }
    bool accept(char c) {
        skip_space();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    Located integer() {
        skip_space();
        auto at = pos();
        std::size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        auto tok = s_.substr(start, i_ - start);
        if (tok.empty() || tok == "-" || tok == "+") fail_at(at, "expected an integer");
        if (tok.size() > 12) fail_at(at, "integer out of range");
        return {std::stol(tok), at};
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
    int line_;
    int col0_;
};

// offsets of the integer tokens inside the array value of a top-level key, in order
std::vector<std::size_t> integer_offsets(const std::string& text, const std::string& key) {
    std::vector<std::size_t> out;
    auto k = text.find("\"" + key + "\"");
    if (k == std::string::npos) return out;
    auto open = text.find('[', k);
    if (open == std::string::npos) return out;
    int depth = 0;
    for (std::size_t i = open; i < text.size(); ++i) {
        char c = text[i];
        if (c == '[') ++depth;
        else if (c == ']' && --depth == 0) break;
        else if ((c == '-' || std::isdigit(static_cast<unsigned char>(c))) &&
                 !(i > 0 && (std::isdigit(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '-'))) {
            out.push_back(i);
        }
    }
    return out;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail_at(position_of(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
    }
}

json point_json(Point p) { return json::array({p.x, p.y}); }

Point json_point(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        fail(where + " must be an integer 2-array");
    return {j[0].get<coord>(), j[1].get<coord>()};
}

PointSet json_points(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array()) fail("field '" + key + "' must be an array of integer 2-arrays");
    PointSet out;
    for (std::size_t i = 0; i < j[key].size(); ++i)
        out.push_back(json_point(j[key][i], key + "[" + std::to_string(i) + "]"));
    return normalized(std::move(out));
}

json points_json(const PointSet& s) {
    json a = json::array();
    for (auto p : s) a.push_back(point_json(p));
    return a;
}

}  // namespace

ChordDiagram parse_chord_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    std::optional<Located> m;
    std::optional<int> arcs_line;
    std::vector<std::pair<Located, Located>> arcs;
    while (std::getline(in, line)) {
        ++ln;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=', first);
        if (eq == std::string::npos) fail_at({ln, static_cast<int>(first) + 1}, "expected 'm=' or 'arcs='");
        auto key = line.substr(first, eq - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string rest = line.substr(eq + 1);
        LineScanner sc(rest, ln, static_cast<int>(eq) + 2);
        if (key == "m") {
            if (m) fail_at({ln, static_cast<int>(first) + 1}, "duplicate 'm=' line");
            m = sc.integer();
            if (!sc.done()) fail_at(sc.pos(), "unexpected text after m");
        } else if (key == "arcs") {
            if (arcs_line) fail_at({ln, static_cast<int>(first) + 1}, "duplicate 'arcs=' line");
            arcs_line = ln;
            if (sc.done()) continue;
            do {
                sc.expect('(');
                auto a = sc.integer();
                sc.expect(',');
                auto b = sc.integer();
                sc.expect(')');
                if (a.value == b.value) fail_at(b.pos, "arc joins vertex " + std::to_string(a.value) + " to itself");
                arcs.push_back({a, b});
            } while (sc.accept(','));
            if (!sc.done()) fail_at(sc.pos(), "expected ',' or end of line");
        } else {
            fail_at({ln, static_cast<int>(first) + 1}, "unknown key '" + key + "'");
        }
    }
    if (!m) fail_at({ln + 1, 1}, "missing 'm=' line");
    if (!arcs_line) fail_at({ln + 1, 1}, "missing 'arcs=' line");
    return checked_chord(m->value, arcs, m->pos);
}

std::string format_chord_text(const ChordDiagram& d) {
    std::string out = "m=" + std::to_string(d.m()) + "\narcs=";
    for (std::size_t i = 0; i < d.arcs().size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(d.arcs()[i].a) + "," + std::to_string(d.arcs()[i].b) + ")";
    }
    return out + "\n";
}

ChordDiagram parse_chord_json(const std::string& text) {
    auto j = parse_json(text);
    if (!j.is_object()) fail_at({1, 1}, "expected a JSON object");
    if (!j.contains("m") || !j["m"].is_number_integer()) fail_at({1, 1}, "field 'm' must be an integer");
    auto m_off = text.find("\"m\"");
    TextPos m_pos = position_of(text, m_off == std::string::npos ? 0 : m_off);
    long m = j["m"].get<long>();
    bool points = j.contains("points") && !j.contains("arcs");
    const std::string key = points ? "points" : "arcs";
    if (!j.contains(key) || !j[key].is_array()) fail_at(m_pos, "field 'arcs' must be an array of 2-arrays");
    auto offsets = integer_offsets(text, key);
    std::vector<std::pair<Located, Located>> arcs;
    std::size_t tok = 0;
    auto located = [&](const json& v, std::size_t idx) {
        TextPos p = idx < offsets.size() ? position_of(text, offsets[idx]) : m_pos;
        if (!v.is_number_integer()) fail_at(p, "endpoint must be an integer");
        return Located{v.get<long>(), p};
    };
    std::map<std::pair<long, long>, bool> seen;
    for (const auto& e : j[key]) {
        TextPos here = tok < offsets.size() ? position_of(text, offsets[tok]) : m_pos;
        if (!e.is_array() || e.size() != 2) fail_at(here, "each entry must be a 2-array");
        auto a = located(e[0], tok), b = located(e[1], tok + 1);
        tok += 2;
        if (a.value == b.value) fail_at(b.pos, "entry joins vertex " + std::to_string(a.value) + " to itself");
        if (points) {
            // keep one point per arc; the mirror image must be present as well
            seen[{a.value, b.value}] = true;
            if (a.value < b.value) arcs.push_back({a, b});
        } else {
            arcs.push_back({a, b});
        }
    }
    if (points)
        for (const auto& [ab, unused] : seen)
            if (!seen.count({ab.second, ab.first}))
                fail_at(m_pos, "presentation is not symmetric: (" + std::to_string(ab.first) + "," +
                                   std::to_string(ab.second) + ") has no mirror point");
    return checked_chord(m, arcs, m_pos);
}

std::string format_chord_json(const ChordDiagram& d) {
    json arcs = json::array();
    for (auto a : d.arcs()) arcs.push_back({a.a, a.b});
    return json{{"m", d.m()}, {"arcs", arcs}}.dump() + "\n";
}

std::string format_presentation_json(const ChordDiagram& d) {
    return json{{"m", d.m()}, {"points", points_json(to_lattice_presentation(d).points())}}.dump() + "\n";
}

ChordDiagram parse_chord(const std::string& text) {
    auto k = detect_kind(text);
    if (k == FileKind::chord_text) return parse_chord_text(text);
    if (k == FileKind::chord_json || k == FileKind::presentation) return parse_chord_json(text);
    fail("expected a chord diagram file");
}

LatticePolytope parse_polytope_json(const std::string& text) {
    auto j = parse_json(text);
    if (!j.is_object()) fail_at({1, 1}, "expected a JSON object");
    return build_polytope(json_points(j, "ver0"), json_points(j, "ver1"));
}

std::string format_polytope_json(const LatticePolytope& p) {
    return json{{"ver0", points_json(p.ver0())}, {"ver1", points_json(p.ver1())}}.dump() + "\n";
}

TransformationSequence parse_sequence_json(const std::string& text) {
    auto j = parse_json(text);
    if (!j.is_object()) fail_at({1, 1}, "expected a JSON object");
    TransformationSequence s;
    s.initial = json_points(j, "initial");
    s.terminal = json_points(j, "terminal");
    if (!j.contains("moves") || !j["moves"].is_array()) fail("field 'moves' must be an array");
    for (std::size_t i = 0; i < j["moves"].size(); ++i) {
        const auto& m = j["moves"][i];
        auto where = "moves[" + std::to_string(i) + "]";
        if (!m.is_object() || !m.contains("v") || !m.contains("w")) fail(where + " needs fields v and w");
        bool mirrored = m.value("mirrored", false);
        s.moves.push_back({json_point(m["v"], where + ".v"), json_point(m["w"], where + ".w"), mirrored});
    }
    s.method = j.value("method", std::string{});
    auto area = sequence_area(s);
    if (j.contains("cost") && j["cost"] != area.cost)
        fail("declared cost " + j["cost"].dump() + " differs from the replayed cost " + std::to_string(area.cost));
    if (j.contains("signed_area") && j["signed_area"] != area.signed_area)
        fail("declared signed_area " + j["signed_area"].dump() + " differs from the replayed value " +
             std::to_string(area.signed_area));
    return s;
}

std::string format_sequence_json(const TransformationSequence& s) {
    auto area = sequence_area(s);
    json moves = json::array();
    for (const auto& m : s.moves) moves.push_back({{"v", point_json(m.v)}, {"w", point_json(m.w)}, {"mirrored", m.mirrored}});
    json j{{"initial", points_json(s.initial)},
           {"terminal", points_json(s.terminal)},
           {"moves", moves},
           {"method", s.method},
           {"cost", area.cost},
           {"signed_area", area.signed_area}};
    return j.dump() + "\n";
}

std::string format_arrangement_json(const Arrangement& a) {
    json cells = json::array();
    for (std::size_t i = 0; i < a.nx(); ++i)
        for (std::size_t j = 0; j < a.ny(); ++j)
            cells.push_back({{"x0", a.xs[i]}, {"x1", a.xs[i + 1]}, {"y0", a.ys[j]}, {"y1", a.ys[j + 1]}, {"omega", a.omega(i, j)}});
    json cr = json::array();
    for (auto p : a.crossings) cr.push_back(point_json(p));
    return json{{"xs", a.xs}, {"ys", a.ys}, {"cells", cells}, {"crossings", cr}}.dump() + "\n";
}

FileKind detect_kind(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') return FileKind::chord_text;
    auto j = parse_json(text);
    if (j.contains("ver0")) return FileKind::polytope;
    if (j.contains("moves")) return FileKind::sequence;
    if (j.contains("points")) return FileKind::presentation;
    return FileKind::chord_json;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::usage, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::usage, "cannot write '" + path + "'");
    out << content;
}

}  // namespace latpoly
