#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ccs/colouring.hpp"
#include "ccs/group.hpp"
#include "ccs/numeric.hpp"
#include "ccs/surface.hpp"

namespace ccs {

// The disk, cylinder and pants functions, straight from their counting
// definitions, and the identities that relate them. Each identity check
// iterates exhaustively over all argument tuples and reports the first
// failing tuple with both side values; on every actual group they all hold,
// so the counterexample path doubles as a regression probe for broken tables.

/// D(g): 1 iff g is the identity.
inline long long d_func(const Group& g, int a) { return a == g.identity ? 1 : 0; }

/// C(a,b) = #{k : a = k b k^-1}.
inline long long c_func(const Group& g, int a, int b) {
    long long count = 0;
    for (int k = 0; k < g.order; ++k)
        if (a == conjugate(g, k, b)) ++count;
    return count;
}

/// P(a,b,c) = #{(j1,j2) : a = j2 b j2^-1 j1 c j1^-1}.
inline long long p_func(const Group& g, int a, int b, int c) {
    long long count = 0;
    for (int j1 = 0; j1 < g.order; ++j1) {
        int right = conjugate(g, j1, c);
        for (int j2 = 0; j2 < g.order; ++j2)
            if (a == g.op(conjugate(g, j2, b), right)) ++count;
    }
    return count;
}

/// Dense |G|^3 memo of P, built from the direct definition. Worth it for the
/// identity checks, which hit each triple many times.
class PTable {
public:
    explicit PTable(const Group& g) : order_(g.order), table_(order_ * order_ * order_) {
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                for (int c = 0; c < order_; ++c) table_[idx(a, b, c)] = p_func(g, a, b, c);
    }
    long long at(int a, int b, int c) const { return table_[idx(a, b, c)]; }

private:
    std::size_t idx(int a, int b, int c) const {
        return (static_cast<std::size_t>(a) * order_ + b) * order_ + c;
    }
    int order_;
    std::vector<long long> table_;
};

struct CheckResult {
    bool ok = true;
    std::string counterexample;

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string text) { return {false, std::move(text)}; }
};

namespace detail {

inline CheckResult counterexample(const std::string& what, const std::vector<int>& args,
                                  long long lhs, long long rhs) {
    std::ostringstream os;
    os << what << " at (";
    for (std::size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i];
    os << "): lhs=" << lhs << " rhs=" << rhs;
    return CheckResult::fail(os.str());
}

}  // namespace detail

/// sum_h C(g,h) C(h,i) == |G| C(g,i) for all g, i.
inline CheckResult check_cyl_identity(const Group& g) {
    for (int a = 0; a < g.order; ++a)
        for (int c = 0; c < g.order; ++c) {
            long long lhs = 0;
            for (int h = 0; h < g.order; ++h) lhs += c_func(g, a, h) * c_func(g, h, c);
            long long rhs = g.order * c_func(g, a, c);
            if (lhs != rhs) return detail::counterexample("cylinder identity", {a, c}, lhs, rhs);
        }
    return CheckResult::pass();
}

/// sum_h C(g,h) == |G| for all g.
inline CheckResult check_sum_c(const Group& g) {
    for (int a = 0; a < g.order; ++a) {
        long long lhs = 0;
        for (int h = 0; h < g.order; ++h) lhs += c_func(g, a, h);
        if (lhs != g.order) return detail::counterexample("C sum rule", {a}, lhs, g.order);
    }
    return CheckResult::pass();
}

/// |G| / C(a,a); orbit-stabilizer guarantees exact division for actual
/// groups, so a remainder is reported as a failure by the suite check below.
inline long long class_size_via_c(const Group& g, int a) {
    long long centralizer = c_func(g, a, a);
    return g.order / centralizer;
}

/// Class sizes from C agree with brute-force class enumeration.
inline CheckResult check_class_sizes(const Group& g) {
    auto data = conjugacy_classes(g);
    for (int a = 0; a < g.order; ++a) {
        long long centralizer = c_func(g, a, a);
        if (centralizer == 0 || g.order % centralizer != 0)
            return detail::counterexample("class size divisibility", {a}, centralizer, g.order);
        long long via_c = g.order / centralizer;
        long long brute = static_cast<long long>(data.classes[data.class_of[a]].size());
        if (via_c != brute) return detail::counterexample("class size", {a}, via_c, brute);
    }
    return CheckResult::pass();
}

/// (1/|G|^2) sum_{g,h} C(g,h)^2, checked against brute-force class count.
inline long long conj_class_count_via_c(const Group& g) {
    long long total = 0;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            long long c = c_func(g, a, b);
            total += c * c;
        }
    return total / (static_cast<long long>(g.order) * g.order);
}

inline CheckResult check_class_count(const Group& g) {
    long long total = 0;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            long long c = c_func(g, a, b);
            total += c * c;
        }
    long long sq = static_cast<long long>(g.order) * g.order;
    if (total % sq != 0)
        return detail::counterexample("class count divisibility", {}, total, sq);
    long long via_c = total / sq;
    long long brute = static_cast<long long>(conjugacy_classes(g).classes.size());
    if (via_c != brute) return detail::counterexample("class count", {}, via_c, brute);
    return CheckResult::pass();
}

/// sum_{g,h,k,l} D(g) P(g,h,k) P(l,h,k) D(l) == |G|^3 #{(j,k) : jk = kj}.
/// The D factors collapse the sum to sum_{h,k} P(1,h,k)^2.
inline CheckResult check_torus_identity(const Group& g) {
    long long lhs = 0;
    for (int h = 0; h < g.order; ++h)
        for (int k = 0; k < g.order; ++k) {
            long long p = p_func(g, g.identity, h, k);
            lhs += p * p;
        }
    long long rhs = static_cast<long long>(g.order) * g.order * g.order * commuting_pair_count(g);
    if (lhs != rhs) return detail::counterexample("torus decomposition identity", {}, lhs, rhs);
    return CheckResult::pass();
}

/// (1/|G|) #commuting pairs == (1/|G|^2) sum C(g,h)^2 as exact rationals.
inline CheckResult check_two_cylinder_torus(const Group& g) {
    long long sum_c2 = 0;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            long long c = c_func(g, a, b);
            sum_c2 += c * c;
        }
    long long lhs = commuting_pair_count(g) * g.order;  // cross-multiplied by |G|^2/|G|
    if (lhs != sum_c2)
        return detail::counterexample("two-cylinder torus identity", {}, lhs, sum_c2);
    return CheckResult::pass();
}

/// |G| C(a,b) == P(a,b,1) for all a,b, and the summed form with D.
inline CheckResult c_from_p(const Group& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            long long lhs = static_cast<long long>(g.order) * c_func(g, a, b);
            long long rhs = p_func(g, a, b, g.identity);
            if (lhs != rhs) return detail::counterexample("C from P", {a, b}, lhs, rhs);
            long long summed = 0;
            for (int h = 0; h < g.order; ++h) summed += p_func(g, a, b, h) * d_func(g, h);
            if (lhs != summed)
                return detail::counterexample("C from P (summed form)", {a, b}, lhs, summed);
        }
    return CheckResult::pass();
}

/// sum_g P(g,i,h) P(g,l,m) == sum_g P(g,l^-1,i) P(g,m,h^-1) for all i,h,l,m.
/// |G|^5 table lookups with P memoized; callers cap the group order.
inline CheckResult check_pants_move_1(const Group& g) {
    PTable P(g);
    for (int i = 0; i < g.order; ++i)
        for (int h = 0; h < g.order; ++h)
            for (int l = 0; l < g.order; ++l)
                for (int mm = 0; mm < g.order; ++mm) {
                    long long lhs = 0, rhs = 0;
                    for (int a = 0; a < g.order; ++a) {
                        lhs += P.at(a, i, h) * P.at(a, l, mm);
                        rhs += P.at(a, g.inverse(l), i) * P.at(a, mm, g.inverse(h));
                    }
                    if (lhs != rhs)
                        return detail::counterexample("pants move 1", {i, h, l, mm}, lhs, rhs);
                }
    return CheckResult::pass();
}

/// sum_g P(g,h,g) == sum_g P(g,g,h) for all h, and both sides equal the
/// punctured-torus colouring counts with boundary colour h.
inline CheckResult check_pants_move_2(const Group& g) {
    CellComplex pt_a = builtin("punctured_torus_a");
    CellComplex pt_b = builtin("punctured_torus_b");
    for (int h = 0; h < g.order; ++h) {
        long long lhs = 0, rhs = 0;
        for (int a = 0; a < g.order; ++a) {
            lhs += p_func(g, a, h, a);
            rhs += p_func(g, a, a, h);
        }
        if (lhs != rhs) return detail::counterexample("pants move 2", {h}, lhs, rhs);
        BigInt count_a = count_colourings(g, pt_a, {{}, {h}});
        BigInt count_b = count_colourings(g, pt_b, {{}, {h}});
        if (count_b != lhs)
            return CheckResult::fail("pants move 2: punctured_torus_b count " + count_b.str() +
                                     " != sum_g P(g," + std::to_string(h) + ",g) = " +
                                     std::to_string(lhs));
        if (count_a != rhs)
            return CheckResult::fail("pants move 2: punctured_torus_a count " + count_a.str() +
                                     " != sum_g P(g,g," + std::to_string(h) + ") = " +
                                     std::to_string(rhs));
    }
    return CheckResult::pass();
}

/// D(g^-1) == D(g); C(h^-1,g^-1) == C(h,g) == C(g,h); P(g^-1,h^-1,i^-1) == P(g,i,h).
inline CheckResult check_symmetries(const Group& g) {
    for (int a = 0; a < g.order; ++a)
        if (d_func(g, g.inverse(a)) != d_func(g, a))
            return detail::counterexample("D inverse symmetry", {a}, d_func(g, g.inverse(a)),
                                          d_func(g, a));
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            long long base = c_func(g, b, a);
            if (c_func(g, g.inverse(b), g.inverse(a)) != base)
                return detail::counterexample("C inverse symmetry", {b, a},
                                              c_func(g, g.inverse(b), g.inverse(a)), base);
            if (c_func(g, a, b) != base)
                return detail::counterexample("C transpose symmetry", {a, b}, c_func(g, a, b),
                                              base);
        }
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c) {
                long long lhs = p_func(g, g.inverse(a), g.inverse(b), g.inverse(c));
                long long rhs = p_func(g, a, c, b);
                if (lhs != rhs)
                    return detail::counterexample("P inverse symmetry", {a, b, c}, lhs, rhs);
            }
    return CheckResult::pass();
}

/// #conjugacy classes == commuting fraction * |G|, cross-multiplied exactly.
inline CheckResult check_commuting_fraction_prop(const Group& g) {
    long long classes = static_cast<long long>(conjugacy_classes(g).classes.size());
    long long lhs = classes * g.order * g.order;
    long long rhs = commuting_pair_count(g) * g.order;
    if (lhs != rhs) return detail::counterexample("commuting fraction", {}, lhs, rhs);
    return CheckResult::pass();
}

struct NamedCheck {
    std::string name;
    std::function<CheckResult(const Group&)> run;
    int order_cap;  // 0 = unlimited
};

/// The full identity suite in a fixed order, with per-check order caps that
/// keep total work bounded on large input groups.
inline const std::vector<NamedCheck>& identity_checks() {
    static const std::vector<NamedCheck> checks = {
        {"cylinder_idempotency", check_cyl_identity, 64},
        {"sum_rule", check_sum_c, 128},
        {"class_sizes", check_class_sizes, 128},
        {"class_count", check_class_count, 128},
        {"torus_identity", check_torus_identity, 24},
        {"two_cylinder_torus", check_two_cylinder_torus, 64},
        {"c_from_p", c_from_p, 24},
        {"pants_move_1", check_pants_move_1, 8},
        {"pants_move_2", check_pants_move_2, 12},
        {"symmetries", check_symmetries, 24},
        {"commuting_fraction", check_commuting_fraction_prop, 128},
    };
    return checks;
}

}  // namespace ccs
