#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccs/errors.hpp"

namespace ccs {

// Combinatorial model of a cut cellular surface: an orientable 2-manifold
// with boundary given by 0-, 1- and 2-cells. Each boundary circle is a single
// external vertex carrying a single loop edge; every other vertex is internal
// and every other edge interior. Faces are cyclic words of directed edge
// occurrences; a coherent orientation means every interior edge is traversed
// exactly once forwards and once backwards.
//
// Complexes are immutable values: every operation returns a new complex.

enum class VertexKind { Internal, InAnchor, OutAnchor };
enum class EdgeKind { Interior, InBoundary, OutBoundary };

struct Vertex {
    int id = -1;
    VertexKind kind = VertexKind::Internal;
    int position = -1;  // boundary circle index, for anchors only
};

struct Edge {
    int id = -1;
    int src = -1;
    int dst = -1;
    EdgeKind kind = EdgeKind::Interior;
    int position = -1;  // boundary circle index, for boundary edges only
};

struct Occurrence {
    int edge = -1;
    bool forward = true;
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct Face {
    int id = -1;
    std::vector<Occurrence> word;
};

class CellComplex {
public:
    std::vector<Vertex> vertices;  // kept sorted by id
    std::vector<Edge> edges;
    std::vector<Face> faces;
    int next_vertex_id = 0;
    int next_edge_id = 0;
    int next_face_id = 0;

    const Vertex* find_vertex(int id) const {
        for (const auto& v : vertices)
            if (v.id == id) return &v;
        return nullptr;
    }
    const Edge* find_edge(int id) const {
        for (const auto& e : edges)
            if (e.id == id) return &e;
        return nullptr;
    }
    const Face* find_face(int id) const {
        for (const auto& f : faces)
            if (f.id == id) return &f;
        return nullptr;
    }
    Vertex* find_vertex(int id) {
        for (auto& v : vertices)
            if (v.id == id) return &v;
        return nullptr;
    }
    Edge* find_edge(int id) {
        for (auto& e : edges)
            if (e.id == id) return &e;
        return nullptr;
    }
    Face* find_face(int id) {
        for (auto& f : faces)
            if (f.id == id) return &f;
        return nullptr;
    }

    int in_count() const {
        int n = 0;
        for (const auto& e : edges)
            if (e.kind == EdgeKind::InBoundary) ++n;
        return n;
    }
    int out_count() const {
        int n = 0;
        for (const auto& e : edges)
            if (e.kind == EdgeKind::OutBoundary) ++n;
        return n;
    }

    /// Boundary edge of the given side at the given circle position.
    const Edge* boundary_edge(EdgeKind side, int position) const {
        for (const auto& e : edges)
            if (e.kind == side && e.position == position) return &e;
        return nullptr;
    }

    int internal_vertex_count() const {
        int v = 0;
        for (const auto& x : vertices)
            if (x.kind == VertexKind::Internal) ++v;
        return v;
    }

    int interior_edge_count() const {
        int k = 0;
        for (const auto& e : edges)
            if (e.kind == EdgeKind::Interior) ++k;
        return k;
    }

    int euler_characteristic() const {
        return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) +
               static_cast<int>(faces.size());
    }

    /// Genus from chi = 2 - 2g - (#boundary circles); meaningful on valid
    /// complexes only. The empty complex reports genus 1 by this formula.
    int genus() const { return (2 - (in_count() + out_count()) - euler_characteristic()) / 2; }

    int fresh_vertex_id() { return next_vertex_id++; }
    int fresh_edge_id() { return next_edge_id++; }
    int fresh_face_id() { return next_face_id++; }

    /// Tail vertex of an occurrence (head of the previous one when chaining).
    int occ_tail(const Occurrence& o) const {
        const Edge* e = find_edge(o.edge);
        return o.forward ? e->src : e->dst;
    }
    int occ_head(const Occurrence& o) const {
        const Edge* e = find_edge(o.edge);
        return o.forward ? e->dst : e->src;
    }
};

/// Checks every structural invariant; returns human-readable violations
/// naming the offending cells (empty result = valid).
inline std::vector<std::string> validate(const CellComplex& m) {
    std::vector<std::string> out;
    auto note = [&out](const std::string& s) { out.push_back(s); };

    std::set<int> vids, eids, fids;
    for (const auto& v : m.vertices)
        if (!vids.insert(v.id).second) note("duplicate vertex id " + std::to_string(v.id));
    for (const auto& e : m.edges)
        if (!eids.insert(e.id).second) note("duplicate edge id " + std::to_string(e.id));
    for (const auto& f : m.faces)
        if (!fids.insert(f.id).second) note("duplicate face id " + std::to_string(f.id));

    for (const auto& e : m.edges) {
        if (!vids.count(e.src) || !vids.count(e.dst)) {
            note("edge " + std::to_string(e.id) + " references missing vertex");
            return out;
        }
    }
    for (const auto& f : m.faces)
        for (const auto& o : f.word)
            if (!eids.count(o.edge)) {
                note("face " + std::to_string(f.id) + " references missing edge " +
                     std::to_string(o.edge));
                return out;
            }

    // boundary circles: anchors and loops pair up, positions are 0..count-1
    auto check_side = [&](EdgeKind ek, VertexKind vk, const char* side) {
        std::map<int, const Edge*> edges_at;
        std::map<int, const Vertex*> anchors_at;
        for (const auto& e : m.edges)
            if (e.kind == ek) {
                if (edges_at.count(e.position))
                    note(std::string("duplicate ") + side + " boundary position " +
                         std::to_string(e.position));
                edges_at[e.position] = &e;
            }
        for (const auto& v : m.vertices)
            if (v.kind == vk) {
                if (anchors_at.count(v.position))
                    note(std::string("duplicate ") + side + " anchor position " +
                         std::to_string(v.position));
                anchors_at[v.position] = &v;
            }
        int count = static_cast<int>(edges_at.size());
        for (int p = 0; p < count; ++p)
            if (!edges_at.count(p))
                note(std::string(side) + " boundary positions are not contiguous (missing " +
                     std::to_string(p) + ")");
        for (auto& [p, e] : edges_at) {
            if (e->src != e->dst)
                note("boundary edge " + std::to_string(e->id) + " is not a loop");
            auto it = anchors_at.find(p);
            if (it == anchors_at.end())
                note(std::string(side) + " circle " + std::to_string(p) + " has no anchor vertex");
            else if (e->src != it->second->id)
                note("boundary edge " + std::to_string(e->id) +
                     " is not anchored at its circle's external vertex");
        }
        for (auto& [p, v] : anchors_at)
            if (!edges_at.count(p))
                note(std::string(side) + " anchor vertex " + std::to_string(v->id) +
                     " has no boundary edge");
    };
    check_side(EdgeKind::InBoundary, VertexKind::InAnchor, "in");
    check_side(EdgeKind::OutBoundary, VertexKind::OutAnchor, "out");

    // face words chain and are nonempty
    for (const auto& f : m.faces) {
        if (f.word.empty()) {
            note("face " + std::to_string(f.id) + " has an empty word");
            continue;
        }
        for (std::size_t i = 0; i < f.word.size(); ++i) {
            const auto& a = f.word[i];
            const auto& b = f.word[(i + 1) % f.word.size()];
            if (m.occ_head(a) != m.occ_tail(b)) {
                note("face " + std::to_string(f.id) + " does not chain at position " +
                     std::to_string(i));
                break;
            }
        }
    }

    // occurrence counts and coherent orientation
    std::map<int, std::pair<int, int>> occs;  // edge id -> (forward, backward)
    for (const auto& f : m.faces)
        for (const auto& o : f.word)
            (o.forward ? occs[o.edge].first : occs[o.edge].second)++;
    for (const auto& e : m.edges) {
        auto [fwd, bwd] = occs.count(e.id) ? occs[e.id] : std::make_pair(0, 0);
        if (e.kind == EdgeKind::Interior) {
            if (fwd != 1 || bwd != 1)
                note("interior edge " + std::to_string(e.id) +
                     " must occur once forward and once backward (orientation), has " +
                     std::to_string(fwd) + "+" + std::to_string(bwd));
        } else {
            if (fwd + bwd != 1)
                note("boundary edge " + std::to_string(e.id) + " must occur exactly once, has " +
                     std::to_string(fwd + bwd));
        }
    }

    // no isolated vertices
    std::set<int> touched;
    for (const auto& e : m.edges) {
        touched.insert(e.src);
        touched.insert(e.dst);
    }
    for (const auto& v : m.vertices)
        if (!touched.count(v.id)) note("vertex " + std::to_string(v.id) + " is isolated");

    // chi = 2 - 2g - (n+m) for an integer g >= 0, per connected component
    // (disjoint unions are allowed, so the formula is applied componentwise)
    {
        std::map<int, int> comp;  // vertex id -> component root
        for (const auto& v : m.vertices) comp[v.id] = v.id;
        std::function<int(int)> find = [&](int x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (const auto& e : m.edges) comp[find(e.src)] = find(e.dst);
        std::map<int, int> chi, circles;
        for (const auto& v : m.vertices)
            if (touched.count(v.id)) {
                ++chi[find(v.id)];
                if (v.kind != VertexKind::Internal) ++circles[find(v.id)];
            }
        for (const auto& e : m.edges) --chi[find(e.src)];
        for (const auto& f : m.faces)
            if (!f.word.empty()) ++chi[find(m.occ_tail(f.word.front()))];
        for (auto& [root, x] : chi) {
            int twice_genus = 2 - circles[root] - x;
            if (twice_genus < 0 || twice_genus % 2 != 0)
                note("Euler characteristic " + std::to_string(x) +
                     " of a connected component is inconsistent with an orientable surface with " +
                     std::to_string(circles[root]) + " boundary circles");
        }
    }
    return out;
}

inline void require_valid(const CellComplex& m, const std::string& where) {
    auto v = validate(m);
    if (!v.empty()) {
        std::string msg = where + ": " + v.front();
        for (std::size_t i = 1; i < v.size(); ++i) msg += "; " + v[i];
        throw validation_error(msg);
    }
}

inline int internal_vertex_count(const CellComplex& m) { return m.internal_vertex_count(); }

namespace detail {

struct ComplexBuilder {
    CellComplex m;
    int vertex(VertexKind kind, int pos = -1) {
        int id = m.fresh_vertex_id();
        m.vertices.push_back({id, kind, pos});
        return id;
    }
    int edge(int src, int dst, EdgeKind kind, int pos = -1) {
        int id = m.fresh_edge_id();
        m.edges.push_back({id, src, dst, kind, pos});
        return id;
    }
    int face(std::vector<Occurrence> word) {
        int id = m.fresh_face_id();
        m.faces.push_back({id, std::move(word)});
        return id;
    }
    CellComplex finish(const char* name) {
        require_valid(m, name);
        return std::move(m);
    }
};

}  // namespace detail

inline CellComplex reflect(const CellComplex& m);

/// The builtin surfaces. Face words follow the standard presentations; the
/// flatness conditions they induce are, for a colouring with in-colours g_*
/// and out-colours h_*:
///   sphere_a            trivial (one free interior colour)
///   sphere_b            two glued discs, interior seam forced to identity
///   disk_in / disk_out  boundary colour forced to identity
///   cylinder            g = k h k^-1 for the seam colour k
///   torus               the two loop colours commute
///   pants               g = j2 i j2^-1 j1 h j1^-1
///   punctured_torus_a/b pants with one boundary circle identified with the
///                       waist, in the two possible ways
inline CellComplex builtin(const std::string& name) {
    detail::ComplexBuilder b;
    if (name == "sphere_a") {
        int v1 = b.vertex(VertexKind::Internal);
        int v2 = b.vertex(VertexKind::Internal);
        int a = b.edge(v1, v2, EdgeKind::Interior);
        b.face({{a, true}, {a, false}});
        return b.finish("builtin sphere_a");
    }
    if (name == "sphere_b") {
        int w = b.vertex(VertexKind::Internal);
        int u1 = b.vertex(VertexKind::Internal);
        int u2 = b.vertex(VertexKind::Internal);
        int e = b.edge(w, w, EdgeKind::Interior);
        int k1 = b.edge(w, u1, EdgeKind::Interior);
        int k2 = b.edge(w, u2, EdgeKind::Interior);
        b.face({{e, true}, {k1, true}, {k1, false}});
        b.face({{e, false}, {k2, true}, {k2, false}});
        return b.finish("builtin sphere_b");
    }
    if (name == "disk_in" || name == "disk_out") {
        bool out = name == "disk_out";
        int w = b.vertex(out ? VertexKind::OutAnchor : VertexKind::InAnchor, 0);
        int u = b.vertex(VertexKind::Internal);
        int g = b.edge(w, w, out ? EdgeKind::OutBoundary : EdgeKind::InBoundary, 0);
        int k = b.edge(w, u, EdgeKind::Interior);
        b.face({{g, true}, {k, true}, {k, false}});
        return b.finish("builtin disk");
    }
    if (name == "cylinder") {
        int vin = b.vertex(VertexKind::InAnchor, 0);
        int vout = b.vertex(VertexKind::OutAnchor, 0);
        int g = b.edge(vin, vin, EdgeKind::InBoundary, 0);
        int h = b.edge(vout, vout, EdgeKind::OutBoundary, 0);
        int k = b.edge(vin, vout, EdgeKind::Interior);
        b.face({{g, true}, {k, true}, {h, false}, {k, false}});
        return b.finish("builtin cylinder");
    }
    if (name == "torus") {
        int w = b.vertex(VertexKind::Internal);
        int a = b.edge(w, w, EdgeKind::Interior);
        int bb = b.edge(w, w, EdgeKind::Interior);
        b.face({{a, true}, {bb, true}, {a, false}, {bb, false}});
        return b.finish("builtin torus");
    }
    if (name == "pants" || name == "pants_reflected") {
        int vin = b.vertex(VertexKind::InAnchor, 0);
        int vo1 = b.vertex(VertexKind::OutAnchor, 0);
        int vo2 = b.vertex(VertexKind::OutAnchor, 1);
        int g = b.edge(vin, vin, EdgeKind::InBoundary, 0);
        int i = b.edge(vo1, vo1, EdgeKind::OutBoundary, 0);
        int h = b.edge(vo2, vo2, EdgeKind::OutBoundary, 1);
        int j2 = b.edge(vin, vo1, EdgeKind::Interior);
        int j1 = b.edge(vin, vo2, EdgeKind::Interior);
        b.face({{g, false}, {j2, true}, {i, true}, {j2, false}, {j1, true}, {h, true}, {j1, false}});
        CellComplex pants = b.finish("builtin pants");
        if (name == "pants") return pants;
        return reflect(pants);
    }
    if (name == "punctured_torus_a") {
        // pants with the waist g and the first leg i identified as one loop
        int u = b.vertex(VertexKind::Internal);
        int vo2 = b.vertex(VertexKind::OutAnchor, 0);
        int alpha = b.edge(u, u, EdgeKind::Interior);
        int h = b.edge(vo2, vo2, EdgeKind::OutBoundary, 0);
        int j2 = b.edge(u, u, EdgeKind::Interior);
        int j1 = b.edge(u, vo2, EdgeKind::Interior);
        b.face({{alpha, false},
                {j2, true},
                {alpha, true},
                {j2, false},
                {j1, true},
                {h, true},
                {j1, false}});
        return b.finish("builtin punctured_torus_a");
    }
    if (name == "punctured_torus_b") {
        // pants with the waist g and the second leg h identified
        int u = b.vertex(VertexKind::Internal);
        int vo1 = b.vertex(VertexKind::OutAnchor, 0);
        int alpha = b.edge(u, u, EdgeKind::Interior);
        int i = b.edge(vo1, vo1, EdgeKind::OutBoundary, 0);
        int j2 = b.edge(u, vo1, EdgeKind::Interior);
        int j1 = b.edge(u, u, EdgeKind::Interior);
        b.face({{alpha, false},
                {j2, true},
                {i, true},
                {j2, false},
                {j1, true},
                {alpha, true},
                {j1, false}});
        return b.finish("builtin punctured_torus_b");
    }
    throw std::invalid_argument("unknown builtin surface: " + name);
}

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "sphere_a",         "sphere_b", "disk_in", "disk_out",
        "cylinder",         "torus",    "pants",   "pants_reflected",
        "punctured_torus_a", "punctured_torus_b"};
    return names;
}

/// Reflection in a horizontal axis: in/out swap with positions preserved,
/// every face word is reversed with all directions flipped. The same edge
/// colouring satisfies the reversed conditions, so invariant matrices
/// transpose.
inline CellComplex reflect(const CellComplex& m) {
    CellComplex r = m;
    for (auto& v : r.vertices) {
        if (v.kind == VertexKind::InAnchor)
            v.kind = VertexKind::OutAnchor;
        else if (v.kind == VertexKind::OutAnchor)
            v.kind = VertexKind::InAnchor;
    }
    for (auto& e : r.edges) {
        if (e.kind == EdgeKind::InBoundary)
            e.kind = EdgeKind::OutBoundary;
        else if (e.kind == EdgeKind::OutBoundary)
            e.kind = EdgeKind::InBoundary;
    }
    for (auto& f : r.faces) {
        std::reverse(f.word.begin(), f.word.end());
        for (auto& o : f.word) o.forward = !o.forward;
    }
    require_valid(r, "reflect");
    return r;
}

/// Rotation by 180 degrees: in/out swap with position k -> count-1-k, the
/// single occurrence of each boundary edge flips direction (legal because
/// boundary edges are loops), interior structure untouched.
inline CellComplex rotate(const CellComplex& m) {
    CellComplex r = m;
    int n = m.in_count(), mm = m.out_count();
    std::set<int> boundary_ids;
    for (auto& v : r.vertices) {
        if (v.kind == VertexKind::InAnchor) {
            v.kind = VertexKind::OutAnchor;
            v.position = n - 1 - v.position;
        } else if (v.kind == VertexKind::OutAnchor) {
            v.kind = VertexKind::InAnchor;
            v.position = mm - 1 - v.position;
        }
    }
    for (auto& e : r.edges) {
        if (e.kind == EdgeKind::InBoundary) {
            e.kind = EdgeKind::OutBoundary;
            e.position = n - 1 - e.position;
            boundary_ids.insert(e.id);
        } else if (e.kind == EdgeKind::OutBoundary) {
            e.kind = EdgeKind::InBoundary;
            e.position = mm - 1 - e.position;
            boundary_ids.insert(e.id);
        }
    }
    for (auto& f : r.faces)
        for (auto& o : f.word)
            if (boundary_ids.count(o.edge)) o.forward = !o.forward;
    require_valid(r, "rotate");
    return r;
}

/// Reverses the stored orientation of one interior edge (src/dst swap plus
/// both occurrence directions). Colouring counts are unchanged under this,
/// which the tests exercise directly.
inline CellComplex flip_interior_edge(const CellComplex& m, int edge_id) {
    CellComplex r = m;
    Edge* e = r.find_edge(edge_id);
    if (!e) throw std::invalid_argument("flip_interior_edge: unknown edge");
    if (e->kind != EdgeKind::Interior)
        throw std::invalid_argument("flip_interior_edge: edge is not interior");
    std::swap(e->src, e->dst);
    for (auto& f : r.faces)
        for (auto& o : f.word)
            if (o.edge == edge_id) o.forward = !o.forward;
    require_valid(r, "flip_interior_edge");
    return r;
}

/// Cyclically rotates the stored starting occurrence of one face word.
inline CellComplex rotate_face_start(const CellComplex& m, int face_id, int shift) {
    CellComplex r = m;
    Face* f = r.find_face(face_id);
    if (!f) throw std::invalid_argument("rotate_face_start: unknown face");
    if (f->word.empty()) return r;
    int len = static_cast<int>(f->word.size());
    int s = ((shift % len) + len) % len;
    std::rotate(f->word.begin(), f->word.begin() + s, f->word.end());
    require_valid(r, "rotate_face_start");
    return r;
}

}  // namespace ccs
