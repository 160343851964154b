#include "latpoly/render.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "latpoly/error.hpp"
#include "latpoly/geometry.hpp"

namespace latpoly {

namespace {

class Canvas {
public:
    Canvas(coord lo, coord hi, const RenderSpec& spec) : lo_(lo), hi_(hi), s_(spec.scale) {
        if (spec.scale <= 0) throw Error(ErrorKind::usage, "render scale must be positive");
        if (hi_ < lo_) hi_ = lo_;
    }

    long px(coord x) const { return margin + (x - lo_) * s_; }
    long py(coord y) const { return margin + (hi_ - y) * s_; }
    long size() const { return 2 * margin + (hi_ - lo_) * s_; }

    void grid() {
        out_ << "<g class=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
        for (coord v = lo_; v <= hi_; ++v) {
            line(px(v), py(lo_), px(v), py(hi_));
            line(px(lo_), py(v), px(hi_), py(v));
        }
        out_ << "</g>\n";
    }

    void diagonal() {
        out_ << "<line class=\"diagonal\" x1=\"" << px(lo_) << "\" y1=\"" << py(lo_) << "\" x2=\"" << px(hi_)
             << "\" y2=\"" << py(hi_) << "\" stroke=\"#808080\" stroke-dasharray=\"4 4\"/>\n";
    }

    void dot(Point p, const std::string& cls) {
        out_ << "<circle class=\"" << cls << "\" cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"" << s_ / 6 + 2
             << "\" fill=\"black\"/>\n";
    }

    void cross(Point p, const std::string& cls) {
        long r = s_ / 6 + 2, x = px(p.x), y = py(p.y);
        out_ << "<g class=\"" << cls << "\" stroke=\"black\" stroke-width=\"2\">";
        line(x - r, y - r, x + r, y + r, false);
        line(x - r, y + r, x + r, y - r, false);
        out_ << "</g>\n";
    }

    void edge(Point a, Point b, const std::string& cls) {
        out_ << "<line class=\"" << cls << "\" x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\"" << px(b.x)
             << "\" y2=\"" << py(b.y) << "\" stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
    }

    void rect(const Rectangle& r, const std::string& label) {
        long x = px(r.x0()), y = py(r.y1()), w = (r.x1() - r.x0()) * s_, h = (r.y1() - r.y0()) * s_;
        out_ << "<rect class=\"piece\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
             << "\" fill=\"#4a7ebb\" fill-opacity=\"0.25\" stroke=\"#4a7ebb\"/>\n";
        if (!label.empty()) text(x + w / 2, y + h / 2, label, "division");
    }

    void text(long x, long y, const std::string& s, const std::string& cls) {
        out_ << "<text class=\"" << cls << "\" x=\"" << x << "\" y=\"" << y + 5
             << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << s << "</text>\n";
    }

    std::string finish() const {
        std::ostringstream doc;
        doc << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size() << "\" height=\"" << size()
            << "\" viewBox=\"0 0 " << size() << " " << size() << "\">\n"
            << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"8\" "
               "markerHeight=\"8\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n"
            << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << out_.str() << "</svg>\n";
        return doc.str();
    }

private:
    void line(long x1, long y1, long x2, long y2, bool newline = true) {
        out_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>";
        if (newline) out_ << "\n";
    }

    static constexpr long margin = 30;
    coord lo_, hi_;
    long s_;
    std::ostringstream out_;
};

std::pair<coord, coord> span(const std::vector<PointSet>& sets) {
    coord lo = 0, hi = 0;
    bool any = false;
    for (const auto& s : sets)
        for (auto p : s)
            for (coord v : {p.x, p.y}) {
                lo = any ? std::min(lo, v) : v;
                hi = any ? std::max(hi, v) : v;
                any = true;
            }
    if (!any) return {0, 1};
    return {std::max<coord>(0, lo - 1), hi + 1};
}

// one label per face at its first cell; faces are joined across unblocked cell sides
void face_labels(Canvas& c, const LatticePolytope& p) {
    if (p.edges().empty()) return;
    auto a = arrangement(p.edges());
    std::size_t nx = a.nx(), ny = a.ny();
    std::vector<std::size_t> parent(nx * ny);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto vblocked = [&](coord x, coord y0, coord y1) {
        return std::any_of(p.edges().begin(), p.edges().end(), [&](const Edge& e) {
            return e.vertical() && e.from.x == x && std::min(e.from.y, e.to.y) <= y0 && y1 <= std::max(e.from.y, e.to.y);
        });
    };
    auto hblocked = [&](coord y, coord x0, coord x1) {
        return std::any_of(p.edges().begin(), p.edges().end(), [&](const Edge& e) {
            return !e.vertical() && e.from.y == y && std::min(e.from.x, e.to.x) <= x0 && x1 <= std::max(e.from.x, e.to.x);
        });
    };
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            if (i + 1 < nx && !vblocked(a.xs[i + 1], a.ys[j], a.ys[j + 1])) parent[find(i * ny + j)] = find((i + 1) * ny + j);
            if (j + 1 < ny && !hblocked(a.ys[j + 1], a.xs[i], a.xs[i + 1])) parent[find(i * ny + j)] = find(i * ny + j + 1);
        }
    std::map<std::size_t, bool> done;
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            int w = a.omega(i, j);
            auto r = find(i * ny + j);
            if (w == 0 || done[r]) continue;
            done[r] = true;
            long x = (c.px(a.xs[i]) + c.px(a.xs[i + 1])) / 2, y = (c.py(a.ys[j]) + c.py(a.ys[j + 1])) / 2;
            c.text(x, y, std::to_string(w), "omega");
        }
}

void draw_polytope(Canvas& c, const LatticePolytope& p, const RenderSpec& spec) {
    for (const auto& e : p.edges()) c.edge(e.from, e.to, "edge");
    if (spec.show_labels) face_labels(c, p);
    for (auto v : p.ver0()) c.dot(v, "ver0");
    for (auto v : p.ver1()) c.cross(v, "ver1");
}

}  // namespace

std::string render_presentation(const LatticePresentation& d, const RenderSpec& spec, const LatticePresentation* target) {
    std::vector<PointSet> sets{d.points()};
    if (target) sets.push_back(target->points());
    auto [lo, hi] = span(sets);
    Canvas c(lo, hi, spec);
    c.grid();
    c.diagonal();
    if (target) {
        auto full = full_polytope(d, *target);
        for (const auto& e : full.edges()) c.edge(e.from, e.to, "edge");
        if (spec.show_labels) face_labels(c, full);
    }
    for (auto p : d.points()) c.dot(p, "ver0");
    if (target)
        for (auto p : target->points()) c.cross(p, "ver1");
    return c.finish();
}

std::string render_polytope(const LatticePolytope& p, const RenderSpec& spec) {
    std::vector<PointSet> sets{p.ver0(), p.ver1()};
    LatticePolytope m;
    if (spec.show_mirror) {
        m = mirror(p);
        sets.push_back(m.ver0());
    }
    auto [lo, hi] = span(sets);
    Canvas c(lo, hi, spec);
    c.grid();
    if (spec.show_mirror) {
        c.diagonal();
        draw_polytope(c, m, spec);
    }
    draw_polytope(c, p, spec);
    return c.finish();
}

std::string render_sequence(const TransformationSequence& s, const RenderSpec& spec) {
    auto p = LatticePolytope::build_relaxed(s.initial, s.terminal);
    auto [lo, hi] = span({s.initial, s.terminal});
    Canvas c(lo, hi, spec);
    c.grid();
    for (std::size_t k = 0; k < s.moves.size(); ++k)
        c.rect(s.moves[k].rect(), spec.division_labels ? std::to_string(k + 1) : "");
    draw_polytope(c, p, spec);
    return c.finish();
}

std::string render_division(const LatticePolytope& q, const Division& d, const RenderSpec& spec) {
    auto [lo, hi] = span({q.ver0(), q.ver1()});
    Canvas c(lo, hi, spec);
    c.grid();
    for (std::size_t k = 0; k < d.size(); ++k) c.rect(d[k], spec.division_labels ? std::to_string(k + 1) : "");
    RenderSpec plain = spec;
    plain.show_labels = false;
    draw_polytope(c, q, plain);
    return c.finish();
}

}  // namespace latpoly
