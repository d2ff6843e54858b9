#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ccs/surface.hpp"

namespace ccs {

// Surface file format, one declaration per line, '#' starts a comment:
//   surface <name>
//   vertex <id> internal|in <pos>|out <pos>
//   edge <id> <src> <dst> interior|in <pos>|out <pos>
//   face <id> : <occ> ...        occ = <edgeid> or ~<edgeid>
// Ids are arbitrary word tokens; vertices, edges and faces have separate
// namespaces. Parsing rejects duplicate ids, dangling references and
// duplicate boundary positions; deeper invariants are validate()'s job.

struct ParsedSurface {
    std::string name;
    CellComplex complex;
};

inline ParsedSurface parse_surface(const std::string& text) {
    ParsedSurface result;
    CellComplex& m = result.complex;
    std::map<std::string, int> vid, eid, fid;
    std::map<std::pair<int, int>, bool> seen_vertex_pos, seen_edge_pos;  // (kind, pos)

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw parse_error("surface file line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;

        if (kw == "surface") {
            if (!(ls >> result.name)) fail("surface declaration needs a name");
        } else if (kw == "vertex") {
            std::string id, kind;
            if (!(ls >> id >> kind)) fail("vertex needs <id> and a kind");
            if (vid.count(id)) fail("duplicate vertex id '" + id + "'");
            Vertex v;
            v.id = m.fresh_vertex_id();
            if (kind == "internal") {
                v.kind = VertexKind::Internal;
            } else if (kind == "in" || kind == "out") {
                v.kind = kind == "in" ? VertexKind::InAnchor : VertexKind::OutAnchor;
                if (!(ls >> v.position) || v.position < 0) fail("vertex needs a valid position");
                auto key = std::make_pair(static_cast<int>(v.kind), v.position);
                if (seen_vertex_pos[key]) fail("duplicate " + kind + " anchor position");
                seen_vertex_pos[key] = true;
            } else {
                fail("unknown vertex kind '" + kind + "'");
            }
            vid[id] = v.id;
            m.vertices.push_back(v);
        } else if (kw == "edge") {
            std::string id, src, dst, kind;
            if (!(ls >> id >> src >> dst >> kind)) fail("edge needs <id> <src> <dst> <kind>");
            if (eid.count(id)) fail("duplicate edge id '" + id + "'");
            if (!vid.count(src)) fail("edge references unknown vertex '" + src + "'");
            if (!vid.count(dst)) fail("edge references unknown vertex '" + dst + "'");
            Edge e;
            e.id = m.fresh_edge_id();
            e.src = vid[src];
            e.dst = vid[dst];
            if (kind == "interior") {
                e.kind = EdgeKind::Interior;
            } else if (kind == "in" || kind == "out") {
                e.kind = kind == "in" ? EdgeKind::InBoundary : EdgeKind::OutBoundary;
                if (!(ls >> e.position) || e.position < 0) fail("edge needs a valid position");
                auto key = std::make_pair(static_cast<int>(e.kind), e.position);
                if (seen_edge_pos[key]) fail("duplicate " + kind + " boundary position");
                seen_edge_pos[key] = true;
            } else {
                fail("unknown edge kind '" + kind + "'");
            }
            eid[id] = e.id;
            m.edges.push_back(e);
        } else if (kw == "face") {
            std::string id, colon;
            if (!(ls >> id >> colon) || colon != ":") fail("face needs <id> : <occurrences>");
            if (fid.count(id)) fail("duplicate face id '" + id + "'");
            Face f;
            f.id = m.fresh_face_id();
            std::string tok;
            while (ls >> tok) {
                Occurrence o;
                o.forward = tok.empty() || tok[0] != '~';
                std::string ref = o.forward ? tok : tok.substr(1);
                if (!eid.count(ref)) fail("face references unknown edge '" + ref + "'");
                o.edge = eid[ref];
                f.word.push_back(o);
            }
            if (f.word.empty()) fail("face has no occurrences");
            fid[id] = f.id;
            m.faces.push_back(f);
        } else {
            fail("unknown declaration '" + kw + "'");
        }
        std::string extra;
        if (ls >> extra) fail("unexpected trailing token '" + extra + "'");
    }
    return result;
}

inline std::string dump_surface(const CellComplex& m, const std::string& name) {
    std::ostringstream os;
    os << "surface " << name << "\n";
    for (const auto& v : m.vertices) {
        os << "vertex " << v.id << " ";
        switch (v.kind) {
            case VertexKind::Internal: os << "internal"; break;
            case VertexKind::InAnchor: os << "in " << v.position; break;
            case VertexKind::OutAnchor: os << "out " << v.position; break;
        }
        os << "\n";
    }
    for (const auto& e : m.edges) {
        os << "edge " << e.id << " " << e.src << " " << e.dst << " ";
        switch (e.kind) {
            case EdgeKind::Interior: os << "interior"; break;
            case EdgeKind::InBoundary: os << "in " << e.position; break;
            case EdgeKind::OutBoundary: os << "out " << e.position; break;
        }
        os << "\n";
    }
    for (const auto& f : m.faces) {
        os << "face " << f.id << " :";
        for (const auto& o : f.word) os << " " << (o.forward ? "" : "~") << o.edge;
        os << "\n";
    }
    return os.str();
}

}  // namespace ccs
