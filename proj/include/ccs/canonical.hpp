#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ccs/surface.hpp"

namespace ccs {

// Canonical form for complex isomorphism. An isomorphism is a bijection of
// cells preserving kinds, boundary positions, incidence and face words up to
// cyclic rotation, and up to reversing the stored orientation of interior
// edges (boundary orientations are semantic and fixed; interior ones are
// presentation choices).
//
// The form is computed per connected component by a breadth-first relabeling:
// boundary edges are pre-ranked in position order, interior edges ranked and
// orientation-normalized in discovery order, and the traversal root is chosen
// by taking the lexicographically least encoding over all (face, rotation)
// starting points. Test-scale complexes keep this cheap.

namespace detail {

struct CanonicalEncoder {
    const CellComplex& m;
    std::map<int, std::vector<std::pair<int, int>>> occ_sites;  // edge -> (face id, position)

    explicit CanonicalEncoder(const CellComplex& mm) : m(mm) {
        for (const auto& f : m.faces)
            for (std::size_t p = 0; p < f.word.size(); ++p)
                occ_sites[f.word[p].edge].push_back({f.id, static_cast<int>(p)});
    }

    // Faces grouped by shared edges.
    std::vector<std::vector<int>> components() const {
        std::map<int, int> comp;
        std::vector<std::vector<int>> out;
        for (const auto& f : m.faces) {
            if (comp.count(f.id)) continue;
            std::vector<int> group;
            std::deque<int> queue{f.id};
            comp[f.id] = 1;
            while (!queue.empty()) {
                int cur = queue.front();
                queue.pop_front();
                group.push_back(cur);
                for (const auto& o : m.find_face(cur)->word)
                    for (auto [fid, pos] : occ_sites.at(o.edge))
                        if (!comp.count(fid)) {
                            comp[fid] = 1;
                            queue.push_back(fid);
                        }
            }
            std::sort(group.begin(), group.end());
            out.push_back(std::move(group));
        }
        return out;
    }

    std::vector<int> encode_component(const std::vector<int>& comp_faces, int root_face,
                                      int root_rot) const {
        std::map<int, int> edge_rank;
        std::map<int, bool> edge_flip;
        int next_rank = 0;

        // boundary edges of this component, pre-ranked in position order
        std::set<int> comp_set(comp_faces.begin(), comp_faces.end());
        std::vector<const Edge*> boundary;
        for (const auto& e : m.edges) {
            if (e.kind == EdgeKind::Interior) continue;
            if (!comp_set.count(occ_sites.at(e.id).front().first)) continue;
            boundary.push_back(&e);
        }
        std::sort(boundary.begin(), boundary.end(), [](const Edge* a, const Edge* b) {
            if (a->kind != b->kind) return a->kind == EdgeKind::InBoundary;
            return a->position < b->position;
        });
        for (const Edge* e : boundary) {
            edge_rank[e->id] = next_rank++;
            edge_flip[e->id] = false;
        }

        std::vector<std::vector<std::pair<int, int>>> face_encodings;
        std::set<int> processed;
        std::deque<std::pair<int, int>> queue{{root_face, root_rot}};
        while (!queue.empty()) {
            auto [fid, rot] = queue.front();
            queue.pop_front();
            if (processed.count(fid)) continue;
            processed.insert(fid);
            const Face* f = m.find_face(fid);
            int len = static_cast<int>(f->word.size());
            std::vector<std::pair<int, int>> enc;
            for (int q = 0; q < len; ++q) {
                const auto& o = f->word[(rot + q) % len];
                if (!edge_rank.count(o.edge)) {
                    edge_rank[o.edge] = next_rank++;
                    edge_flip[o.edge] = !o.forward;  // first sighting reads forward
                }
                bool dir = o.forward != edge_flip[o.edge];
                enc.push_back({edge_rank[o.edge], dir ? 1 : 0});
            }
            face_encodings.push_back(enc);
            for (int q = 0; q < len; ++q) {
                const auto& o = f->word[(rot + q) % len];
                for (auto [fid2, pos2] : occ_sites.at(o.edge))
                    if (!processed.count(fid2)) queue.push_back({fid2, pos2});
            }
        }

        // vertex ranks by first appearance scanning edges in rank order,
        // normalized tail before head
        std::vector<int> edges_by_rank(next_rank, -1);
        for (auto [eid, rank] : edge_rank) edges_by_rank[rank] = eid;
        std::map<int, int> vertex_rank;
        auto vrank = [&](int vid) {
            auto it = vertex_rank.find(vid);
            if (it != vertex_rank.end()) return it->second;
            int r = static_cast<int>(vertex_rank.size());
            vertex_rank[vid] = r;
            return r;
        };

        std::vector<int> blob;
        blob.push_back(static_cast<int>(face_encodings.size()));
        for (const auto& enc : face_encodings) {
            blob.push_back(static_cast<int>(enc.size()));
            for (auto [rank, dir] : enc) {
                blob.push_back(rank);
                blob.push_back(dir);
            }
        }
        blob.push_back(next_rank);
        for (int eid : edges_by_rank) {
            const Edge* e = m.find_edge(eid);
            bool flip = edge_flip[eid];
            int tail = flip ? e->dst : e->src;
            int head = flip ? e->src : e->dst;
            blob.push_back(static_cast<int>(e->kind));
            blob.push_back(e->kind == EdgeKind::Interior ? -1 : e->position);
            blob.push_back(vrank(tail));
            blob.push_back(vrank(head));
        }
        blob.push_back(static_cast<int>(vertex_rank.size()));
        std::vector<int> verts_by_rank(vertex_rank.size(), -1);
        for (auto [vid, rank] : vertex_rank) verts_by_rank[rank] = vid;
        for (int vid : verts_by_rank) {
            const Vertex* v = m.find_vertex(vid);
            blob.push_back(static_cast<int>(v->kind));
            blob.push_back(v->kind == VertexKind::Internal ? -1 : v->position);
        }
        return blob;
    }

    std::vector<int> canonical_component(const std::vector<int>& comp_faces) const {
        std::optional<std::vector<int>> best;
        for (int fid : comp_faces) {
            int len = static_cast<int>(m.find_face(fid)->word.size());
            for (int rot = 0; rot < len; ++rot) {
                auto enc = encode_component(comp_faces, fid, rot);
                if (!best || enc < *best) best = std::move(enc);
            }
        }
        return best ? *best : std::vector<int>{};
    }
};

}  // namespace detail

/// Relabeling-invariant encoding; two complexes are isomorphic iff their
/// canonical forms are equal.
inline std::vector<int> canonical_form(const CellComplex& m) {
    detail::CanonicalEncoder enc(m);
    std::vector<std::vector<int>> blobs;
    for (const auto& comp : enc.components()) blobs.push_back(enc.canonical_component(comp));
    std::sort(blobs.begin(), blobs.end());
    std::vector<int> out{m.in_count(), m.out_count(), static_cast<int>(blobs.size())};
    for (const auto& b : blobs) {
        out.push_back(static_cast<int>(b.size()));
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

inline bool isomorphic(const CellComplex& a, const CellComplex& b) {
    return canonical_form(a) == canonical_form(b);
}

}  // namespace ccs
