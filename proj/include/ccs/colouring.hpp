#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "ccs/group.hpp"
#include "ccs/numeric.hpp"
#include "ccs/surface.hpp"

namespace ccs {

/// Fixed group elements on the ordered in and out boundary circles.
struct BoundaryColouring {
    std::vector<int> in_elems;
    std::vector<int> out_elems;
};

namespace detail {

// Dense view of a complex for counting: edges by index, faces as occurrence
// lists over edge indices.
struct CountingView {
    std::vector<int> edge_ids;
    std::vector<std::vector<std::pair<int, bool>>> faces;      // (edge index, forward)
    std::vector<std::vector<int>> edge_faces;                  // edge index -> face indices
    std::vector<int> interior_indices;

    static CountingView build(const CellComplex& m) {
        CountingView cv;
        std::map<int, int> index_of;
        for (const auto& e : m.edges) {
            index_of[e.id] = static_cast<int>(cv.edge_ids.size());
            cv.edge_ids.push_back(e.id);
            if (e.kind == EdgeKind::Interior)
                cv.interior_indices.push_back(static_cast<int>(cv.edge_ids.size()) - 1);
        }
        cv.edge_faces.resize(cv.edge_ids.size());
        for (const auto& f : m.faces) {
            int fi = static_cast<int>(cv.faces.size());
            cv.faces.emplace_back();
            for (const auto& o : f.word) {
                int ei = index_of.at(o.edge);
                cv.faces.back().push_back({ei, o.forward});
                cv.edge_faces[ei].push_back(fi);
            }
        }
        return cv;
    }

    bool face_flat(const Group& g, int fi, const std::vector<int>& assign) const {
        int p = g.identity;
        for (auto [ei, fwd] : faces[fi])
            p = g.op(p, fwd ? assign[ei] : g.inverse(assign[ei]));
        return p == g.identity;
    }
};

inline std::vector<int> boundary_assignment(const Group& g, const CellComplex& m,
                                            const BoundaryColouring& bc,
                                            const CountingView& cv) {
    int n = m.in_count(), mm = m.out_count();
    if (static_cast<int>(bc.in_elems.size()) != n || static_cast<int>(bc.out_elems.size()) != mm)
        throw std::invalid_argument("boundary colouring arity mismatch: surface has " +
                                    std::to_string(n) + " in and " + std::to_string(mm) +
                                    " out circles");
    for (int v : bc.in_elems)
        if (v < 0 || v >= g.order) throw std::invalid_argument("boundary element out of range");
    for (int v : bc.out_elems)
        if (v < 0 || v >= g.order) throw std::invalid_argument("boundary element out of range");

    std::vector<int> assign(cv.edge_ids.size(), -1);
    for (std::size_t i = 0; i < cv.edge_ids.size(); ++i) {
        const Edge* e = m.find_edge(cv.edge_ids[i]);
        if (e->kind == EdgeKind::InBoundary) assign[i] = bc.in_elems[e->position];
        if (e->kind == EdgeKind::OutBoundary) assign[i] = bc.out_elems[e->position];
    }
    return assign;
}

}  // namespace detail

/// Flatness of a total assignment: around every face, the product of the
/// edge colours (inverted on backward traversals) is the identity.
inline bool flat_check(const Group& g, const CellComplex& m,
                       const std::map<int, int>& assignment) {
    auto cv = detail::CountingView::build(m);
    std::vector<int> assign(cv.edge_ids.size(), -1);
    for (std::size_t i = 0; i < cv.edge_ids.size(); ++i) {
        auto it = assignment.find(cv.edge_ids[i]);
        if (it == assignment.end())
            throw std::invalid_argument("flat_check: edge " + std::to_string(cv.edge_ids[i]) +
                                        " has no assignment");
        if (it->second < 0 || it->second >= g.order)
            throw std::invalid_argument("flat_check: element out of range");
        assign[i] = it->second;
    }
    for (std::size_t fi = 0; fi < cv.faces.size(); ++fi)
        if (!cv.face_flat(g, static_cast<int>(fi), assign)) return false;
    return true;
}

/// Work budget for the exhaustive oracle; CCS_BRUTEFORCE_BUDGET overrides the
/// default of 10^8 flatness evaluations.
inline std::uint64_t default_bruteforce_budget() {
    if (const char* env = std::getenv("CCS_BRUTEFORCE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100'000'000ULL;
}

/// The oracle: plain exhaustive enumeration of all |G|^k interior
/// assignments, checking flatness of every face each time. Deliberately kept
/// free of the pruning logic below so the two counters stay independent.
inline BigInt count_colourings_bruteforce(const Group& g, const CellComplex& m,
                                          const BoundaryColouring& bc,
                                          std::uint64_t budget = 0) {
    require_valid(m, "count_colourings_bruteforce");
    if (budget == 0) budget = default_bruteforce_budget();
    auto cv = detail::CountingView::build(m);
    auto assign = detail::boundary_assignment(g, m, bc, cv);
    const auto& interior = cv.interior_indices;

    BigInt total_work = big_pow(g.order, interior.size());
    if (total_work > budget)
        throw budget_error("brute-force enumeration of " + total_work.str() +
                           " assignments exceeds budget " + std::to_string(budget));

    std::vector<int> odo(interior.size(), 0);
    for (int ei : interior) assign[ei] = 0;
    BigInt count = 0;
    while (true) {
        bool flat = true;
        for (std::size_t fi = 0; fi < cv.faces.size() && flat; ++fi)
            flat = cv.face_flat(g, static_cast<int>(fi), assign);
        if (flat) ++count;
        std::size_t p = 0;
        while (p < odo.size()) {
            if (++odo[p] < g.order) break;
            odo[p] = 0;
            ++p;
        }
        if (p == odo.size()) break;
        for (std::size_t q = 0; q <= p; ++q) assign[interior[q]] = odo[q];
    }
    return count;
}

namespace detail {

// Depth-first counting with unit propagation: whenever a face has exactly one
// occurrence of an unassigned edge left, and that edge occurs once in the
// face, the flatness equation determines it by group division. An edge
// occurring twice in an undetermined face (x a x^-1 = b patterns) is
// enumerated instead, since such equations do not have unique solutions.
class PrunedCounter {
public:
    PrunedCounter(const Group& g, const CountingView& cv, std::vector<int> assign)
        : g_(g), cv_(cv), assign_(std::move(assign)) {
        unknowns_.assign(cv_.faces.size(), 0);
        for (std::size_t fi = 0; fi < cv_.faces.size(); ++fi)
            for (auto [ei, fwd] : cv_.faces[fi])
                if (assign_[ei] < 0) ++unknowns_[fi];
    }

    BigInt count() {
        for (std::size_t fi = 0; fi < cv_.faces.size(); ++fi)
            if (unknowns_[fi] == 0 && !cv_.face_flat(g_, static_cast<int>(fi), assign_)) return 0;
        return dfs();
    }

private:
    const Group& g_;
    const CountingView& cv_;
    std::vector<int> assign_;
    std::vector<int> unknowns_;

    // Assign edge ei := val, updating face counters; faces that become fully
    // determined are checked. Returns false on contradiction (state stays
    // consistent for undo either way).
    bool set_edge(int ei, int val, std::vector<int>& trail, std::vector<int>& units) {
        assign_[ei] = val;
        trail.push_back(ei);
        bool ok = true;
        for (int fi : cv_.edge_faces[ei]) {
            if (--unknowns_[fi] == 0) {
                if (!cv_.face_flat(g_, fi, assign_)) ok = false;
            } else if (unknowns_[fi] == 1) {
                units.push_back(fi);
            }
        }
        return ok;
    }

    void undo(const std::vector<int>& trail) {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            for (int fi : cv_.edge_faces[*it]) ++unknowns_[fi];
            assign_[*it] = -1;
        }
    }

    // Solve the single unassigned occurrence of face fi by division.
    bool solve_unit(int fi, std::vector<int>& trail, std::vector<int>& units) {
        int target = -1;
        for (auto [ei, fwd] : cv_.faces[fi])
            if (assign_[ei] < 0) target = ei;
        if (target < 0) return true;  // stale queue entry
        int prefix = g_.identity, suffix = g_.identity;
        bool fwd_occ = true;
        bool before = true;
        for (auto [ei, fwd] : cv_.faces[fi]) {
            if (ei == target) {
                fwd_occ = fwd;
                before = false;
                continue;
            }
            int v = fwd ? assign_[ei] : g_.inverse(assign_[ei]);
            (before ? prefix : suffix) = g_.op(before ? prefix : suffix, v);
        }
        // prefix * u^(+-1) * suffix = identity
        int u = g_.op(suffix, prefix);  // = (prefix^-1 suffix^-1)^-1
        int val = fwd_occ ? g_.inverse(u) : u;
        return set_edge(target, val, trail, units);
    }

    bool propagate(std::vector<int>& trail) {
        std::vector<int> units;
        for (std::size_t fi = 0; fi < cv_.faces.size(); ++fi)
            if (unknowns_[fi] == 1) units.push_back(static_cast<int>(fi));
        while (!units.empty()) {
            int fi = units.back();
            units.pop_back();
            if (unknowns_[fi] != 1) continue;
            if (!solve_unit(fi, trail, units)) return false;
        }
        return true;
    }

    // Most constrained face first; its first unassigned occurrence is the
    // branch variable.
    int pick_branch_edge() const {
        int best_face = -1, best = INT32_MAX;
        for (std::size_t fi = 0; fi < cv_.faces.size(); ++fi)
            if (unknowns_[fi] >= 1 && unknowns_[fi] < best) {
                best = unknowns_[fi];
                best_face = static_cast<int>(fi);
            }
        if (best_face < 0) return -1;
        for (auto [ei, fwd] : cv_.faces[best_face])
            if (assign_[ei] < 0) return ei;
        return -1;
    }

    BigInt dfs() {
        std::vector<int> trail;
        if (!propagate(trail)) {
            undo(trail);
            return 0;
        }
        int branch = pick_branch_edge();
        if (branch < 0) {
            undo(trail);
            return 1;
        }
        BigInt total = 0;
        for (int val = 0; val < g_.order; ++val) {
            std::vector<int> sub;
            std::vector<int> units;
            bool ok = set_edge(branch, val, sub, units);
            if (ok) {
                while (ok && !units.empty()) {
                    int fi = units.back();
                    units.pop_back();
                    if (unknowns_[fi] != 1) continue;
                    ok = solve_unit(fi, sub, units);
                }
                if (ok) total += dfs();
            }
            undo(sub);
        }
        undo(trail);
        return total;
    }
};

}  // namespace detail

/// Exact count of flat colourings extending the boundary colouring, by
/// propagation-pruned depth-first search. Agrees with the oracle everywhere;
/// the test suite enforces this.
inline BigInt count_colourings(const Group& g, const CellComplex& m,
                               const BoundaryColouring& bc) {
    require_valid(m, "count_colourings");
    auto cv = detail::CountingView::build(m);
    auto assign = detail::boundary_assignment(g, m, bc, cv);
    detail::PrunedCounter counter(g, cv, std::move(assign));
    return counter.count();
}

}  // namespace ccs
