#include "barymorph/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <fmt/format.h>

#include "barymorph/error.hpp"

namespace barymorph::io {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Tokens of the next non-blank line, or false at end of input.
    bool next(std::vector<std::string_view>& tokens) {
        tokens.clear();
        while (std::getline(in_, line_)) {
            ++line_no_;
            std::string_view s(line_);
            if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
            std::size_t pos = 0;
            while (pos < s.size()) {
                pos = s.find_first_not_of(" \t\r", pos);
                if (pos == std::string_view::npos) break;
                auto end = s.find_first_of(" \t\r", pos);
                if (end == std::string_view::npos) end = s.size();
                tokens.push_back(s.substr(pos, end - pos));
                pos = end;
            }
            if (!tokens.empty()) return true;
        }
        return false;
    }

    /// Like `next`, but running out of input is an error.
    void require(std::vector<std::string_view>& tokens, std::string_view what) {
        if (!next(tokens)) fail(fmt::format("unexpected end of input, expected {}", what));
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::ParseError, fmt::format("line {}: {}", line_no_, msg));
    }

    void expect(const std::vector<std::string_view>& tokens, std::string_view keyword, std::size_t arity) const {
        if (tokens[0] != keyword) fail(fmt::format("expected '{}', found '{}'", keyword, tokens[0]));
        if (tokens.size() != arity + 1)
            fail(fmt::format("'{}' takes {} values, found {}", keyword, arity, tokens.size() - 1));
    }

    template <typename T>
    T number(std::string_view tok) const {
        T value{};
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail(fmt::format("invalid number '{}'", tok));
        return value;
    }

    Vertex vertex(std::string_view tok, std::size_t n) const {
        const auto v = number<Vertex>(tok);
        if (v >= n) fail(fmt::format("vertex {} out of range (n = {})", v, n));
        return v;
    }

private:
    std::istream& in_;
    std::string line_;
    std::size_t line_no_ = 0;
};

std::vector<Point> read_vertex_lines(LineReader& lr, std::vector<std::string_view>& tok, std::size_t n,
                                     bool first_already_read) {
    std::vector<Point> coords(n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 || !first_already_read) lr.require(tok, "a 'v' line");
        lr.expect(tok, "v", 3);
        const Vertex v = lr.vertex(tok[1], n);
        if (seen[v]) lr.fail(fmt::format("vertex {} listed twice", v));
        seen[v] = true;
        coords[v] = {lr.number<double>(tok[2]), lr.number<double>(tok[3])};
    }
    return coords;
}

void write_vertex_lines(std::ostream& out, const Drawing& d) {
    for (Vertex v = 0; v < d.graph().vertex_count(); ++v)
        out << fmt::format("v {} {:.17g} {:.17g}\n", v, d[v].x, d[v].y);
}

}  // namespace

std::shared_ptr<const PlaneGraph> read_graph(std::istream& in) {
    LineReader lr(in);
    std::vector<std::string_view> tok;
    lr.require(tok, "'n <count>'");
    lr.expect(tok, "n", 1);
    const auto n = lr.number<std::size_t>(tok[1]);
    lr.require(tok, "'outer a b c'");
    lr.expect(tok, "outer", 3);
    const Face outer{lr.vertex(tok[1], n), lr.vertex(tok[2], n), lr.vertex(tok[3], n)};
    std::vector<Face> faces;
    while (lr.next(tok)) {
        lr.expect(tok, "f", 3);
        faces.push_back({lr.vertex(tok[1], n), lr.vertex(tok[2], n), lr.vertex(tok[3], n)});
    }
    return std::make_shared<const PlaneGraph>(PlaneGraph::build(n, faces, outer));
}

void write_graph(std::ostream& out, const PlaneGraph& g) {
    const auto& o = g.outer_cycle();
    out << fmt::format("n {}\nouter {} {} {}\n", g.vertex_count(), o[0], o[1], o[2]);
    for (const auto& f : g.faces()) out << fmt::format("f {} {} {}\n", f[0], f[1], f[2]);
}

Drawing read_drawing(std::istream& in, std::shared_ptr<const PlaneGraph> graph) {
    LineReader lr(in);
    std::vector<std::string_view> tok;
    auto coords = read_vertex_lines(lr, tok, graph->vertex_count(), false);
    if (lr.next(tok)) lr.fail("trailing content after the last vertex");
    return Drawing(std::move(graph), std::move(coords));
}

void write_drawing(std::ostream& out, const Drawing& d) { write_vertex_lines(out, d); }

CoefficientMatrix read_coefficients(std::istream& in, std::shared_ptr<const PlaneGraph> graph, bool validate) {
    LineReader lr(in);
    std::vector<std::string_view> tok;
    const std::size_t n = graph->vertex_count();
    CoefficientMatrix m(graph);
    while (lr.next(tok)) {
        lr.expect(tok, "w", 3);
        const Vertex v = lr.vertex(tok[1], n);
        const Vertex u = lr.vertex(tok[2], n);
        if (m.weight(v, u) != 0.0) lr.fail(fmt::format("entry ({}, {}) listed twice", v, u));
        m.set(v, u, lr.number<double>(tok[3]));
    }
    if (validate)
        if (const auto rep = validate_coefficients(m); !rep.valid())
            throw Error(ErrorKind::InvalidCoefficients, rep.summary());
    return m;
}

void write_coefficients(std::ostream& out, const CoefficientMatrix& m) {
    for (Vertex v : m.graph().internal_vertices())
        for (const auto& e : m.row(v))
            if (e.weight > 0.0) out << fmt::format("w {} {} {:.17g}\n", v, e.u, e.weight);
}

MorphSchedule read_schedule(std::istream& in, std::shared_ptr<const PlaneGraph> graph) {
    LineReader lr(in);
    std::vector<std::string_view> tok;
    lr.require(tok, "'schedule k <count>'");
    lr.expect(tok, "schedule", 2);
    if (tok[1] != "k") lr.fail("expected 'schedule k <count>'");
    const auto k = lr.number<std::size_t>(tok[2]);
    MorphSchedule s;
    for (std::size_t j = 0; j <= k; ++j) {
        lr.require(tok, "'t <value>'");
        lr.expect(tok, "t", 1);
        const double t = lr.number<double>(tok[1]);
        s.checkpoints.push_back({t, Drawing(graph, read_vertex_lines(lr, tok, graph->vertex_count(), false))});
    }
    if (lr.next(tok)) lr.fail("trailing content after the last checkpoint");
    for (std::size_t j = 0; j < k; ++j)
        s.step_radii.push_back(separated_object_extremes(s.checkpoints[j].drawing).min_dist / 3.0);
    return s;
}

void write_schedule(std::ostream& out, const MorphSchedule& s) {
    out << fmt::format("schedule k {}\n", s.steps());
    for (const auto& cp : s.checkpoints) {
        out << fmt::format("t {:.17g}\n", cp.t);
        write_vertex_lines(out, cp.drawing);
    }
}

std::string svg_frame(const Drawing& d, const Triangle& view, SvgStyle style) {
    double x0 = view[0].x, x1 = x0, y0 = view[0].y, y1 = y0;
    for (const Point& p : view.corners()) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    const double extent = std::max(x1 - x0, y1 - y0);
    const double pad = style.margin * extent;
    const double w = x1 - x0 + 2 * pad;
    const double h = y1 - y0 + 2 * pad;
    const double stroke = 0.002 * extent;
    const double radius = 0.006 * extent;

    std::ostringstream out;
    out << fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
        "viewBox=\"{:.17g} {:.17g} {:.17g} {:.17g}\">\n",
        style.width_px, style.width_px * h / w, x0 - pad, -(y1 + pad), w, h);
    out << fmt::format("<g stroke=\"black\" stroke-width=\"{:.6g}\">\n", stroke);
    for (const Edge& e : d.graph().edges())
        out << fmt::format("<line x1=\"{:.17g}\" y1=\"{:.17g}\" x2=\"{:.17g}\" y2=\"{:.17g}\"/>\n", d[e.a].x,
                           -d[e.a].y, d[e.b].x, -d[e.b].y);
    out << "</g>\n<g fill=\"crimson\">\n";
    for (Vertex v = 0; v < d.graph().vertex_count(); ++v)
        out << fmt::format("<circle cx=\"{:.17g}\" cy=\"{:.17g}\" r=\"{:.6g}\"/>\n", d[v].x, -d[v].y, radius);
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string read_text_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, fmt::format("cannot open '{}'", p.string()));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::ParseError, fmt::format("cannot write '{}'", p.string()));
    out << text;
    if (!out) throw Error(ErrorKind::ParseError, fmt::format("write to '{}' failed", p.string()));
}

}  // namespace barymorph::io
