#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccs/surface.hpp"

namespace ccs {

// The two local moves on the cell structure, plus gluing, disjoint union and
// the disk-tail simplification. Every operation returns a new complex and
// validates it; fresh cells always get new ids from the per-complex counters.

/// Splits an interior edge at a new internal vertex. A forward occurrence
/// (e) becomes (e1 e2); a backward occurrence (~e) becomes (~e2 ~e1).
inline CellComplex move_I_subdivide(const CellComplex& m, int edge_id) {
    const Edge* e = m.find_edge(edge_id);
    if (!e) throw std::invalid_argument("move_I_subdivide: unknown edge");
    if (e->kind != EdgeKind::Interior)
        throw std::invalid_argument("move_I_subdivide: cannot subdivide a boundary edge");
    CellComplex r = m;
    int x = r.fresh_vertex_id();
    r.vertices.push_back({x, VertexKind::Internal, -1});
    int e1 = r.fresh_edge_id();
    int e2 = r.fresh_edge_id();
    int src = e->src, dst = e->dst;
    r.edges.erase(std::remove_if(r.edges.begin(), r.edges.end(),
                                 [&](const Edge& q) { return q.id == edge_id; }),
                  r.edges.end());
    r.edges.push_back({e1, src, x, EdgeKind::Interior, -1});
    r.edges.push_back({e2, x, dst, EdgeKind::Interior, -1});
    for (auto& f : r.faces) {
        std::vector<Occurrence> word;
        for (const auto& o : f.word) {
            if (o.edge != edge_id) {
                word.push_back(o);
            } else if (o.forward) {
                word.push_back({e1, true});
                word.push_back({e2, true});
            } else {
                word.push_back({e2, false});
                word.push_back({e1, false});
            }
        }
        f.word = std::move(word);
    }
    require_valid(r, "move_I_subdivide");
    return r;
}

namespace detail {

struct EdgeEnd {
    int edge = -1;
    bool at_dst = false;
};

inline std::vector<EdgeEnd> edge_ends_at(const CellComplex& m, int vertex_id) {
    std::vector<EdgeEnd> ends;
    for (const auto& e : m.edges) {
        if (e.src == vertex_id) ends.push_back({e.id, false});
        if (e.dst == vertex_id) ends.push_back({e.id, true});
    }
    return ends;
}

}  // namespace detail

/// Removes an internal vertex of degree two, combining its two distinct
/// incident edges into one.
inline CellComplex move_I_merge(const CellComplex& m, int vertex_id) {
    const Vertex* v = m.find_vertex(vertex_id);
    if (!v) throw std::invalid_argument("move_I_merge: unknown vertex");
    if (v->kind != VertexKind::Internal)
        throw std::invalid_argument("move_I_merge: vertex is not internal");
    auto ends = detail::edge_ends_at(m, vertex_id);
    if (ends.size() != 2)
        throw std::invalid_argument("move_I_merge: vertex degree is " +
                                    std::to_string(ends.size()) + ", need exactly 2");
    if (ends[0].edge == ends[1].edge)
        throw std::invalid_argument("move_I_merge: the two incidences belong to one loop edge");

    const Edge* ea = m.find_edge(ends[0].edge);
    const Edge* eb = m.find_edge(ends[1].edge);
    // merged edge runs from ea's far endpoint through v to eb's far endpoint
    int a = ends[0].at_dst ? ea->src : ea->dst;
    int b = ends[1].at_dst ? eb->src : eb->dst;

    CellComplex r = m;
    int merged = r.fresh_edge_id();
    for (auto& f : r.faces) {
        const auto& w = f.word;
        int len = static_cast<int>(w.size());
        std::vector<char> second(len, 0), start(len, 0);
        std::vector<Occurrence> repl(len);
        for (int p = 0; p < len; ++p) {
            const auto& cur = w[p];
            const auto& nxt = w[(p + 1) % len];
            if (m.occ_head(cur) != vertex_id) continue;
            if (cur.edge == nxt.edge)
                throw std::invalid_argument(
                    "move_I_merge: face word turns back at the vertex, edges do not form a path");
            start[p] = 1;
            second[(p + 1) % len] = 1;
            repl[p] = {merged, cur.edge == ea->id};
        }
        std::vector<Occurrence> word;
        for (int p = 0; p < len; ++p) {
            if (second[p]) continue;
            if (start[p])
                word.push_back(repl[p]);
            else
                word.push_back(w[p]);
        }
        f.word = std::move(word);
    }
    r.edges.erase(std::remove_if(r.edges.begin(), r.edges.end(),
                                 [&](const Edge& q) { return q.id == ea->id || q.id == eb->id; }),
                  r.edges.end());
    r.vertices.erase(std::remove_if(r.vertices.begin(), r.vertices.end(),
                                    [&](const Vertex& q) { return q.id == vertex_id; }),
                     r.vertices.end());
    r.edges.push_back({merged, a, b, EdgeKind::Interior, -1});
    require_valid(r, "move_I_merge");
    return r;
}

/// Splits a face along a new interior edge between cut positions i and j
/// (a position p is the point before occurrence p of the cyclic word; i == j
/// is legal and produces a monogon). The face with word w becomes two faces
/// with words ~e w[i..j) and e w[j..i).
inline CellComplex move_II_split(const CellComplex& m, int face_id, int i, int j) {
    const Face* f = m.find_face(face_id);
    if (!f) throw std::invalid_argument("move_II_split: unknown face");
    int len = static_cast<int>(f->word.size());
    if (i < 0 || i >= len || j < 0 || j >= len)
        throw std::invalid_argument("move_II_split: cut position out of range");

    CellComplex r = m;
    int vi = m.occ_tail(f->word[i]);
    int vj = m.occ_tail(f->word[j]);
    int e = r.fresh_edge_id();
    r.edges.push_back({e, vi, vj, EdgeKind::Interior, -1});

    std::vector<Occurrence> w1{{e, false}}, w2{{e, true}};
    if (i == j) {
        // monogon chord: the whole word stays on one side
        for (int q = 0; q < len; ++q) w2.push_back(f->word[(j + q) % len]);
    } else {
        for (int p = i; p != j; p = (p + 1) % len) w1.push_back(f->word[p]);
        for (int p = j; p != i; p = (p + 1) % len) w2.push_back(f->word[p]);
    }

    r.faces.erase(std::remove_if(r.faces.begin(), r.faces.end(),
                                 [&](const Face& q) { return q.id == face_id; }),
                  r.faces.end());
    int f1 = r.fresh_face_id();
    r.faces.push_back({f1, std::move(w1)});
    int f2 = r.fresh_face_id();
    r.faces.push_back({f2, std::move(w2)});
    require_valid(r, "move_II_split");
    return r;
}

/// Removes an interior edge whose two occurrences lie in two distinct faces,
/// splicing the faces into one.
inline CellComplex move_II_merge(const CellComplex& m, int edge_id) {
    const Edge* e = m.find_edge(edge_id);
    if (!e) throw std::invalid_argument("move_II_merge: unknown edge");
    if (e->kind != EdgeKind::Interior)
        throw std::invalid_argument("move_II_merge: edge is not interior");
    const Face* fa = nullptr;
    const Face* fb = nullptr;
    int pa = -1, pb = -1;
    for (const auto& f : m.faces)
        for (std::size_t p = 0; p < f.word.size(); ++p)
            if (f.word[p].edge == edge_id) {
                if (f.word[p].forward) {
                    fa = &f;
                    pa = static_cast<int>(p);
                } else {
                    fb = &f;
                    pb = static_cast<int>(p);
                }
            }
    if (!fa || !fb) throw validation_error("move_II_merge: edge occurrences not found");
    if (fa->id == fb->id)
        throw std::invalid_argument(
            "move_II_merge: both occurrences lie in one face, cannot merge");

    std::vector<Occurrence> word;
    int la = static_cast<int>(fa->word.size());
    int lb = static_cast<int>(fb->word.size());
    for (int q = 1; q < la; ++q) word.push_back(fa->word[(pa + q) % la]);
    for (int q = 1; q < lb; ++q) word.push_back(fb->word[(pb + q) % lb]);
    if (word.empty())
        throw std::invalid_argument("move_II_merge: merge would leave an empty face");

    CellComplex r = m;
    int ida = fa->id, idb = fb->id;
    r.faces.erase(std::remove_if(r.faces.begin(), r.faces.end(),
                                 [&](const Face& q) { return q.id == ida || q.id == idb; }),
                  r.faces.end());
    r.edges.erase(std::remove_if(r.edges.begin(), r.edges.end(),
                                 [&](const Edge& q) { return q.id == edge_id; }),
                  r.edges.end());
    int nf = r.fresh_face_id();
    r.faces.push_back({nf, std::move(word)});
    require_valid(r, "move_II_merge");
    return r;
}

namespace detail {

/// Re-orients faces (reversing whole words) so that every interior edge is
/// traversed once in each direction. Reversing a face word with all
/// directions flipped leaves its flatness condition equivalent, so colouring
/// counts are untouched. Fails only if the identifications are non-orientable.
inline void make_coherent(CellComplex& m) {
    std::map<int, std::vector<std::pair<int, bool>>> occ;  // edge -> [(face idx, forward)]
    for (std::size_t fi = 0; fi < m.faces.size(); ++fi)
        for (const auto& o : m.faces[fi].word)
            if (m.find_edge(o.edge)->kind == EdgeKind::Interior)
                occ[o.edge].push_back({static_cast<int>(fi), o.forward});

    std::vector<int> flip(m.faces.size(), -1);  // -1 unvisited
    for (std::size_t root = 0; root < m.faces.size(); ++root) {
        if (flip[root] != -1) continue;
        flip[root] = 0;
        std::vector<int> queue{static_cast<int>(root)};
        while (!queue.empty()) {
            int f = queue.back();
            queue.pop_back();
            for (const auto& o : m.faces[f].word) {
                auto it = occ.find(o.edge);
                if (it == occ.end()) continue;
                const auto& pair = it->second;
                if (pair.size() != 2) throw validation_error("make_coherent: bad occurrence count");
                auto [f1, d1] = pair[0];
                auto [f2, d2] = pair[1];
                if (f1 == f2) {
                    if (d1 == d2)
                        throw validation_error(
                            "gluing produced a non-orientable identification at edge " +
                            std::to_string(o.edge));
                    continue;
                }
                int self = (f1 == f) ? f1 : f2;
                int other = (f1 == f) ? f2 : f1;
                bool dself = (f1 == f) ? d1 : d2;
                bool dother = (f1 == f) ? d2 : d1;
                // need (dself ^ flip[self]) != (dother ^ flip[other])
                bool effective_self = dself != (flip[self] == 1);
                int want = (dother == effective_self) ? 1 : 0;
                if (flip[other] == -1) {
                    flip[other] = want;
                    queue.push_back(other);
                } else if (flip[other] != want) {
                    throw validation_error(
                        "gluing produced a non-orientable identification at edge " +
                        std::to_string(o.edge));
                }
            }
        }
    }
    for (std::size_t fi = 0; fi < m.faces.size(); ++fi)
        if (flip[fi] == 1) {
            std::reverse(m.faces[fi].word.begin(), m.faces[fi].word.end());
            for (auto& o : m.faces[fi].word) o.forward = !o.forward;
        }
}

}  // namespace detail

/// Glues every out circle of m1 to the in circle of m2 at the same position.
/// Each identified pair of boundary loops becomes one interior loop at a
/// merged internal vertex, so internal vertices count v1 + v2 + (#circles).
inline CellComplex glue(const CellComplex& m1, const CellComplex& m2) {
    int shared = m1.out_count();
    if (shared != m2.in_count())
        throw std::invalid_argument("glue: boundary count mismatch (" + std::to_string(shared) +
                                    " out vs " + std::to_string(m2.in_count()) + " in)");
    if (shared == 0) throw std::invalid_argument("glue: surfaces share no boundary circle");
    require_valid(m1, "glue (first surface)");
    require_valid(m2, "glue (second surface)");

    CellComplex r;
    std::map<int, int> v1map, v2map, e1map, e2map;

    for (const auto& v : m1.vertices) {
        int nid = r.fresh_vertex_id();
        v1map[v.id] = nid;
        if (v.kind == VertexKind::OutAnchor)
            r.vertices.push_back({nid, VertexKind::Internal, -1});
        else
            r.vertices.push_back({nid, v.kind, v.position});
    }
    for (const auto& v : m2.vertices) {
        if (v.kind == VertexKind::InAnchor) {
            // identified with m1's out anchor at the same position
            const Edge* out_edge = m1.boundary_edge(EdgeKind::OutBoundary, v.position);
            v2map[v.id] = v1map[out_edge->src];
        } else {
            int nid = r.fresh_vertex_id();
            v2map[v.id] = nid;
            r.vertices.push_back({nid, v.kind, v.position});
        }
    }
    for (const auto& e : m1.edges) {
        int nid = r.fresh_edge_id();
        e1map[e.id] = nid;
        if (e.kind == EdgeKind::OutBoundary)
            r.edges.push_back({nid, v1map[e.src], v1map[e.dst], EdgeKind::Interior, -1});
        else
            r.edges.push_back({nid, v1map[e.src], v1map[e.dst], e.kind, e.position});
    }
    for (const auto& e : m2.edges) {
        if (e.kind == EdgeKind::InBoundary) {
            const Edge* out_edge = m1.boundary_edge(EdgeKind::OutBoundary, e.position);
            e2map[e.id] = e1map[out_edge->id];
        } else {
            int nid = r.fresh_edge_id();
            e2map[e.id] = nid;
            r.edges.push_back({nid, v2map[e.src], v2map[e.dst], e.kind, e.position});
        }
    }
    for (const auto& f : m1.faces) {
        Face nf{r.fresh_face_id(), {}};
        for (const auto& o : f.word) nf.word.push_back({e1map[o.edge], o.forward});
        r.faces.push_back(std::move(nf));
    }
    for (const auto& f : m2.faces) {
        Face nf{r.fresh_face_id(), {}};
        for (const auto& o : f.word) nf.word.push_back({e2map[o.edge], o.forward});
        r.faces.push_back(std::move(nf));
    }
    detail::make_coherent(r);
    require_valid(r, "glue");
    return r;
}

/// Juxtaposition: m1's boundary circles first, m2's shifted after them.
inline CellComplex disjoint_union(const CellComplex& m1, const CellComplex& m2) {
    require_valid(m1, "disjoint_union (first surface)");
    require_valid(m2, "disjoint_union (second surface)");
    int in_shift = m1.in_count();
    int out_shift = m1.out_count();

    CellComplex r;
    std::map<int, int> vmap1, vmap2, emap1, emap2;
    for (const auto& v : m1.vertices) {
        int nid = r.fresh_vertex_id();
        vmap1[v.id] = nid;
        r.vertices.push_back({nid, v.kind, v.position});
    }
    for (const auto& v : m2.vertices) {
        int nid = r.fresh_vertex_id();
        vmap2[v.id] = nid;
        int pos = v.position;
        if (v.kind == VertexKind::InAnchor) pos += in_shift;
        if (v.kind == VertexKind::OutAnchor) pos += out_shift;
        r.vertices.push_back({nid, v.kind, pos});
    }
    for (const auto& e : m1.edges) {
        int nid = r.fresh_edge_id();
        emap1[e.id] = nid;
        r.edges.push_back({nid, vmap1[e.src], vmap1[e.dst], e.kind, e.position});
    }
    for (const auto& e : m2.edges) {
        int nid = r.fresh_edge_id();
        emap2[e.id] = nid;
        int pos = e.position;
        if (e.kind == EdgeKind::InBoundary) pos += in_shift;
        if (e.kind == EdgeKind::OutBoundary) pos += out_shift;
        r.edges.push_back({nid, vmap2[e.src], vmap2[e.dst], e.kind, pos});
    }
    for (const auto& f : m1.faces) {
        Face nf{r.fresh_face_id(), {}};
        for (const auto& o : f.word) nf.word.push_back({emap1[o.edge], o.forward});
        r.faces.push_back(std::move(nf));
    }
    for (const auto& f : m2.faces) {
        Face nf{r.fresh_face_id(), {}};
        for (const auto& o : f.word) nf.word.push_back({emap2[o.edge], o.forward});
        r.faces.push_back(std::move(nf));
    }
    require_valid(r, "disjoint_union");
    return r;
}

/// Repeatedly removes "disk tails": an interior edge whose two occurrences
/// are cyclically adjacent as (e ~e) in one face, with the turnaround vertex
/// internal and of degree one. The tail's colour is unconstrained and the
/// tail carries one internal vertex, so the invariant is unchanged.
inline CellComplex shrink_disk_tail(const CellComplex& m) {
    CellComplex r = m;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& f : r.faces) {
            int len = static_cast<int>(f.word.size());
            if (len <= 2) continue;
            for (int p = 0; p < len && !changed; ++p) {
                const auto& cur = f.word[p];
                const auto& nxt = f.word[(p + 1) % len];
                if (cur.edge != nxt.edge || cur.forward == nxt.forward) continue;
                const Edge* e = r.find_edge(cur.edge);
                if (e->kind != EdgeKind::Interior || e->src == e->dst) continue;
                int turnaround = r.occ_head(cur);
                if (r.find_vertex(turnaround)->kind != VertexKind::Internal) continue;
                if (detail::edge_ends_at(r, turnaround).size() != 1) continue;

                int face_id = f.id, edge_id = cur.edge;
                Face* ff = r.find_face(face_id);
                std::vector<Occurrence> word;
                for (int q = 0; q < len; ++q)
                    if (q != p && q != (p + 1) % len) word.push_back(ff->word[q]);
                ff->word = std::move(word);
                r.edges.erase(std::remove_if(r.edges.begin(), r.edges.end(),
                                             [&](const Edge& q) { return q.id == edge_id; }),
                              r.edges.end());
                r.vertices.erase(std::remove_if(r.vertices.begin(), r.vertices.end(),
                                                [&](const Vertex& q) { return q.id == turnaround; }),
                                 r.vertices.end());
                changed = true;
            }
            if (changed) break;
        }
    }
    require_valid(r, "shrink_disk_tail");
    return r;
}

// ---------------------------------------------------------------------------
// Random move sequences. Legal applications are enumerated in a fixed order
// and drawn with mt19937_64 via `engine() % count`, so a seed fully
// determines the trace on every platform.

struct Move {
    enum class Type { SubdivideEdge, MergeVertex, SplitFace, MergeFaces };
    Type type;
    int a = -1;  // edge id / vertex id / face id
    int i = -1;  // split positions
    int j = -1;
};

inline std::string to_string(const Move& mv) {
    std::ostringstream os;
    switch (mv.type) {
        case Move::Type::SubdivideEdge: os << "I-subdivide e=" << mv.a; break;
        case Move::Type::MergeVertex: os << "I-merge v=" << mv.a; break;
        case Move::Type::SplitFace: os << "II-split f=" << mv.a << " i=" << mv.i << " j=" << mv.j; break;
        case Move::Type::MergeFaces: os << "II-merge e=" << mv.a; break;
    }
    return os.str();
}

inline bool can_merge_vertex(const CellComplex& m, int vertex_id) {
    const Vertex* v = m.find_vertex(vertex_id);
    if (!v || v->kind != VertexKind::Internal) return false;
    auto ends = detail::edge_ends_at(m, vertex_id);
    if (ends.size() != 2 || ends[0].edge == ends[1].edge) return false;
    for (const auto& f : m.faces) {
        int len = static_cast<int>(f.word.size());
        for (int p = 0; p < len; ++p)
            if (m.occ_head(f.word[p]) == vertex_id &&
                f.word[p].edge == f.word[(p + 1) % len].edge)
                return false;  // word turns back at v
    }
    return true;
}

inline std::vector<Move> legal_moves(const CellComplex& m) {
    std::vector<Move> out;
    for (const auto& e : m.edges)
        if (e.kind == EdgeKind::Interior)
            out.push_back({Move::Type::SubdivideEdge, e.id, -1, -1});
    for (const auto& v : m.vertices)
        if (can_merge_vertex(m, v.id)) out.push_back({Move::Type::MergeVertex, v.id, -1, -1});
    for (const auto& f : m.faces) {
        int len = static_cast<int>(f.word.size());
        for (int i = 0; i < len; ++i)
            for (int j = 0; j < len; ++j) out.push_back({Move::Type::SplitFace, f.id, i, j});
    }
    for (const auto& e : m.edges) {
        if (e.kind != EdgeKind::Interior) continue;
        const Face* ffwd = nullptr;
        const Face* fbwd = nullptr;
        for (const auto& f : m.faces)
            for (const auto& o : f.word)
                if (o.edge == e.id) (o.forward ? ffwd : fbwd) = &f;
        if (ffwd && fbwd && ffwd->id != fbwd->id)
            out.push_back({Move::Type::MergeFaces, e.id, -1, -1});
    }
    return out;
}

inline CellComplex apply_move(const CellComplex& m, const Move& mv) {
    switch (mv.type) {
        case Move::Type::SubdivideEdge: return move_I_subdivide(m, mv.a);
        case Move::Type::MergeVertex: return move_I_merge(m, mv.a);
        case Move::Type::SplitFace: return move_II_split(m, mv.a, mv.i, mv.j);
        case Move::Type::MergeFaces: return move_II_merge(m, mv.a);
    }
    throw std::logic_error("apply_move: bad move type");
}

/// Applies `steps` uniformly chosen legal moves, optionally recording the
/// trace. Deterministic for a given seed.
inline CellComplex apply_random_moves(CellComplex m, std::uint64_t seed, int steps,
                                      std::vector<Move>* trace = nullptr) {
    std::mt19937_64 engine(seed);
    for (int s = 0; s < steps; ++s) {
        auto moves = legal_moves(m);
        if (moves.empty()) break;
        const Move& mv = moves[static_cast<std::size_t>(engine() % moves.size())];
        if (trace) trace->push_back(mv);
        m = apply_move(m, mv);
    }
    return m;
}

}  // namespace ccs
