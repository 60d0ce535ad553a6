#include "barymorph/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>

#include <fmt/format.h>

#include "barymorph/error.hpp"

namespace barymorph {

namespace {

using HalfEdgeKey = std::uint64_t;

constexpr HalfEdgeKey key(Vertex from, Vertex to) noexcept {
    return (static_cast<HalfEdgeKey>(from) << 32) | to;
}

std::string face_str(const Face& f) { return fmt::format("({}, {}, {})", f[0], f[1], f[2]); }

// The outer face, traced with the same orientation as the internal faces.
constexpr Face outer_face(const Face& outer) noexcept { return {outer[0], outer[2], outer[1]}; }

}  // namespace

PlaneGraph PlaneGraph::build(std::span<const Face> faces, const Face& outer_cycle) {
    Vertex max_id = 0;
    for (const auto& f : faces)
        for (Vertex v : f) max_id = std::max(max_id, v);
    for (Vertex v : outer_cycle) max_id = std::max(max_id, v);
    return build(static_cast<std::size_t>(max_id) + 1, faces, outer_cycle);
}

PlaneGraph PlaneGraph::build(std::size_t n, std::span<const Face> faces, const Face& outer_cycle) {
    if (n < 4)
        throw Error(ErrorKind::EulerViolation, fmt::format("need at least 4 vertices, got {}", n));

    auto check_triple = [n](const Face& f, std::string_view what) {
        for (Vertex v : f)
            if (v >= n)
                throw Error(ErrorKind::UnknownVertex,
                            fmt::format("{} {} references vertex {} (n = {})", what, face_str(f), v, n));
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
            throw Error(ErrorKind::NonSimple, fmt::format("{} {} repeats a vertex", what, face_str(f)));
    };
    for (const auto& f : faces) check_triple(f, "face");
    check_triple(outer_cycle, "outer cycle");

    std::vector<Face> all_faces(faces.begin(), faces.end());
    all_faces.push_back(outer_face(outer_cycle));

    // Distinct neighbors per vertex, before any orientation reasoning.
    std::vector<std::set<Vertex>> nbrs(n);
    for (const auto& f : all_faces)
        for (int i = 0; i < 3; ++i) {
            nbrs[f[i]].insert(f[(i + 1) % 3]);
            nbrs[f[(i + 1) % 3]].insert(f[i]);
        }
    for (Vertex v = 0; v < n; ++v)
        if (nbrs[v].size() < 3)
            throw Error(ErrorKind::DegreeTooLow,
                        fmt::format("vertex {} has degree {} (< 3)", v, nbrs[v].size()));

    const std::size_t expected_faces = 2 * n - 5;
    if (faces.size() != expected_faces)
        throw Error(ErrorKind::EulerViolation,
                    fmt::format("{} internal faces, a maximal plane graph on {} vertices has {}",
                                faces.size(), n, expected_faces));

    std::unordered_map<HalfEdgeKey, std::size_t> half_edges;
    half_edges.reserve(all_faces.size() * 3);
    for (std::size_t fi = 0; fi < all_faces.size(); ++fi) {
        const auto& f = all_faces[fi];
        for (int i = 0; i < 3; ++i) {
            auto [it, inserted] = half_edges.emplace(key(f[i], f[(i + 1) % 3]), fi);
            if (!inserted)
                throw Error(ErrorKind::InconsistentEmbedding,
                            fmt::format("directed edge ({}, {}) traced by two faces; face orientations "
                                        "are inconsistent or a face is repeated",
                                        f[i], f[(i + 1) % 3]));
        }
    }
    for (const auto& [k, fi] : half_edges) {
        const auto from = static_cast<Vertex>(k >> 32);
        const auto to = static_cast<Vertex>(k & 0xffffffffu);
        if (!half_edges.contains(key(to, from)))
            throw Error(ErrorKind::NotTriangulated,
                        fmt::format("edge ({}, {}) borders only one face", from, to));
    }

    const std::size_t m = half_edges.size() / 2;
    if (m != 3 * n - 6)
        throw Error(ErrorKind::EulerViolation, fmt::format("{} edges, expected 3n - 6 = {}", m, 3 * n - 6));

    // Around vertex a, a ccw face (a, b, c) sends b to its ccw successor c.
    std::vector<std::map<Vertex, Vertex>> succ(n);
    for (const auto& f : all_faces)
        for (int i = 0; i < 3; ++i) succ[f[i]][f[(i + 1) % 3]] = f[(i + 2) % 3];

    PlaneGraph g;
    g.faces_.assign(faces.begin(), faces.end());
    g.outer_ = outer_cycle;
    g.rotation_.resize(n);
    g.sorted_neighbors_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        const auto& s = succ[v];
        const Vertex start = *nbrs[v].begin();
        auto& rot = g.rotation_[v];
        Vertex cur = start;
        do {
            rot.push_back(cur);
            auto it = s.find(cur);
            if (it == s.end() || rot.size() > s.size())
                throw Error(ErrorKind::InconsistentEmbedding,
                            fmt::format("faces around vertex {} do not close into a single fan", v));
            cur = it->second;
        } while (cur != start);
        if (rot.size() != s.size() || rot.size() != nbrs[v].size())
            throw Error(ErrorKind::InconsistentEmbedding,
                        fmt::format("faces around vertex {} form more than one fan", v));
        g.sorted_neighbors_[v].assign(nbrs[v].begin(), nbrs[v].end());
        for (Vertex u : g.sorted_neighbors_[v])
            if (v < u) g.edges_.push_back({v, u});
    }
    std::sort(g.edges_.begin(), g.edges_.end());

    std::vector<bool> seen(n, false);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        for (Vertex u : g.sorted_neighbors_[v])
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                queue.push(u);
            }
    }
    if (reached != n)
        throw Error(ErrorKind::InconsistentEmbedding, "face list describes a disconnected surface");

    return g;
}

bool PlaneGraph::adjacent(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& nb = sorted_neighbors_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t PlaneGraph::degree(Vertex v) const { return neighbors_ccw(v).size(); }

bool PlaneGraph::is_external(Vertex v) const { return outer_position(v) >= 0; }

int PlaneGraph::outer_position(Vertex v) const {
    for (int i = 0; i < 3; ++i)
        if (outer_[i] == v) return i;
    return -1;
}

std::span<const Vertex> PlaneGraph::neighbors_ccw(Vertex v) const {
    if (!contains(v)) throw Error(ErrorKind::UnknownVertex, fmt::format("vertex {} not in graph", v));
    return rotation_[v];
}

std::vector<Vertex> PlaneGraph::neighbors_cw(Vertex v) const {
    const auto ccw = neighbors_ccw(v);
    std::vector<Vertex> cw;
    cw.reserve(ccw.size());
    cw.push_back(ccw.front());
    for (std::size_t i = ccw.size() - 1; i > 0; --i) cw.push_back(ccw[i]);
    return cw;
}

std::vector<Vertex> PlaneGraph::internal_vertices() const {
    std::vector<Vertex> out;
    out.reserve(internal_count());
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (!is_external(v)) out.push_back(v);
    return out;
}

VertexClass classify_vertices(const PlaneGraph& g) {
    VertexClass vc;
    vc.internal = g.internal_vertices();
    vc.external.assign(g.outer_cycle().begin(), g.outer_cycle().end());
    std::sort(vc.external.begin(), vc.external.end());
    return vc;
}

std::vector<Vertex> neighbors_cw(const PlaneGraph& g, Vertex v) { return g.neighbors_cw(v); }

namespace {

// Tarjan articulation points over an adjacency list restricted to `present`.
bool is_biconnected(const std::vector<std::vector<Vertex>>& adj, const std::vector<Vertex>& vertices) {
    if (vertices.size() < 3) return false;
    std::unordered_map<Vertex, int> disc, low;
    int timer = 0;
    bool articulation = false;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
        int children;
    };
    const Vertex root = vertices.front();
    const Vertex none = static_cast<Vertex>(-1);
    std::vector<Frame> stack{{root, none, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
        auto& fr = stack.back();
        if (fr.next < adj[fr.v].size()) {
            const Vertex u = adj[fr.v][fr.next++];
            if (u == fr.parent) continue;
            if (auto it = disc.find(u); it != disc.end()) {
                low[fr.v] = std::min(low[fr.v], it->second);
            } else {
                ++fr.children;
                disc[u] = low[u] = timer++;
                stack.push_back({u, fr.v, 0, 0});
            }
        } else {
            const Frame done = fr;
            stack.pop_back();
            if (!stack.empty()) {
                auto& parent = stack.back();
                low[parent.v] = std::min(low[parent.v], low[done.v]);
                if (parent.parent != none && low[done.v] >= disc[parent.v]) articulation = true;
            } else if (done.children > 1) {
                articulation = true;
            }
        }
    }
    return !articulation && disc.size() == vertices.size();
}

}  // namespace

InsideCycleReport subgraph_inside_cycle(const PlaneGraph& g, std::span<const Vertex> cycle) {
    const std::size_t len = cycle.size();
    if (len < 3) throw Error(ErrorKind::NonSimple, "a cycle needs at least 3 vertices");
    std::set<Vertex> distinct;
    std::set<Edge> cycle_edges;
    for (std::size_t i = 0; i < len; ++i) {
        const Vertex a = cycle[i], b = cycle[(i + 1) % len];
        if (!g.contains(a)) throw Error(ErrorKind::UnknownVertex, fmt::format("vertex {} not in graph", a));
        if (!distinct.insert(a).second)
            throw Error(ErrorKind::NonSimple, fmt::format("cycle visits vertex {} twice", a));
        if (!g.adjacent(a, b))
            throw Error(ErrorKind::NonSimple, fmt::format("({}, {}) is not an edge", a, b));
        cycle_edges.insert(Edge::make(a, b));
    }

    std::vector<Face> all_faces = g.faces();
    const std::size_t outer_index = all_faces.size();
    all_faces.push_back(outer_face(g.outer_cycle()));
    std::unordered_map<HalfEdgeKey, std::size_t> face_of;
    for (std::size_t fi = 0; fi < all_faces.size(); ++fi)
        for (int i = 0; i < 3; ++i) face_of[key(all_faces[fi][i], all_faces[fi][(i + 1) % 3])] = fi;

    // Flood fill one side of the cycle without crossing it.
    std::vector<bool> side(all_faces.size(), false);
    std::queue<std::size_t> queue;
    const std::size_t seed = face_of.at(key(cycle[0], cycle[1]));
    side[seed] = true;
    queue.push(seed);
    while (!queue.empty()) {
        const auto fi = queue.front();
        queue.pop();
        const auto& f = all_faces[fi];
        for (int i = 0; i < 3; ++i) {
            const Vertex a = f[i], b = f[(i + 1) % 3];
            if (cycle_edges.contains(Edge::make(a, b))) continue;
            const auto nb = face_of.at(key(b, a));
            if (!side[nb]) {
                side[nb] = true;
                queue.push(nb);
            }
        }
    }
    const bool flip = side[outer_index];

    InsideCycleReport rep;
    std::set<Vertex> verts;
    std::map<Edge, int> edge_uses;
    for (std::size_t fi = 0; fi < outer_index; ++fi) {
        if (side[fi] == flip) continue;
        const auto& f = all_faces[fi];
        rep.faces.push_back(f);
        for (int i = 0; i < 3; ++i) {
            verts.insert(f[i]);
            ++edge_uses[Edge::make(f[i], f[(i + 1) % 3])];
        }
    }
    rep.vertices.assign(verts.begin(), verts.end());
    bool triangulated = !rep.faces.empty();
    for (const auto& [e, uses] : edge_uses) {
        rep.edges.push_back(e);
        const int expected = cycle_edges.contains(e) ? 1 : 2;
        if (uses != expected) triangulated = false;
    }
    for (const auto& e : cycle_edges)
        if (!edge_uses.contains(e)) triangulated = false;
    rep.internally_triangulated = triangulated;

    std::vector<std::vector<Vertex>> adj(g.vertex_count());
    for (const auto& e : rep.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    rep.biconnected = is_biconnected(adj, rep.vertices);
    return rep;
}

}  // namespace barymorph
