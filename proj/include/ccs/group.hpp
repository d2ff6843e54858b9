#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ccs/errors.hpp"
#include "ccs/numeric.hpp"

namespace ccs {

/// A finite group as a dense Cayley table. Elements are indices 0..order-1.
/// The identity is stored explicitly and is not required to be index 0
/// (tables loaded from files keep their own numbering).
///
/// Groups are immutable after construction; every operation below is a pure
/// read, so shared concurrent use is safe.
struct Group {
    int order = 0;
    std::vector<int> mul;  // row-major order x order
    int identity = 0;
    std::vector<int> inv;
    std::vector<std::string> names;  // optional element names, for display only

    int op(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
    int inverse(int a) const { return inv[a]; }

    std::string name_of(int a) const {
        if (a >= 0 && a < static_cast<int>(names.size())) return names[a];
        return std::to_string(a);
    }
};

/// All four table invariants: index range, identity law, inverse law,
/// associativity (O(n^3), always affordable at the supported orders).
inline std::vector<std::string> validate_group(const Group& g) {
    std::vector<std::string> violations;
    const int n = g.order;
    if (n <= 0) {
        violations.push_back("order must be positive");
        return violations;
    }
    if (g.mul.size() != static_cast<std::size_t>(n) * n)
        violations.push_back("multiplication table has wrong size");
    if (g.inv.size() != static_cast<std::size_t>(n))
        violations.push_back("inverse table has wrong size");
    if (g.identity < 0 || g.identity >= n)
        violations.push_back("identity index out of range");
    if (!violations.empty()) return violations;

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int p = g.op(a, b);
            if (p < 0 || p >= n) {
                std::ostringstream os;
                os << "table entry mul[" << a << "][" << b << "] = " << p << " out of range";
                violations.push_back(os.str());
                return violations;  // later checks would index out of bounds
            }
        }
    for (int a = 0; a < n; ++a) {
        if (g.op(g.identity, a) != a || g.op(a, g.identity) != a) {
            std::ostringstream os;
            os << "identity law fails at element " << a;
            violations.push_back(os.str());
        }
        if (g.inv[a] < 0 || g.inv[a] >= n) {
            std::ostringstream os;
            os << "inv[" << a << "] out of range";
            violations.push_back(os.str());
        } else if (g.op(a, g.inv[a]) != g.identity || g.op(g.inv[a], a) != g.identity) {
            std::ostringstream os;
            os << "inverse law fails at element " << a;
            violations.push_back(os.str());
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) {
                    std::ostringstream os;
                    os << "associativity fails at triple (" << a << "," << b << "," << c << ")";
                    violations.push_back(os.str());
                    if (violations.size() >= 8) return violations;
                }
    return violations;
}

namespace detail {

inline void require_valid(const Group& g, const char* ctor) {
    auto v = validate_group(g);
    if (!v.empty()) {
        std::string msg = std::string(ctor) + ": " + v.front();
        for (std::size_t i = 1; i < v.size(); ++i) msg += "; " + v[i];
        throw validation_error(msg);
    }
}

inline std::vector<int> invert_from_table(const std::vector<int>& mul, int n, int identity) {
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul[static_cast<std::size_t>(a) * n + b] == identity && inv[a] == -1) inv[a] = b;
    for (int a = 0; a < n; ++a)
        if (inv[a] == -1) throw validation_error("element " + std::to_string(a) + " has no inverse");
    return inv;
}

}  // namespace detail

/// Z_n with addition mod n; identity is index 0.
inline Group make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("make_cyclic: n must be >= 1");
    Group g;
    g.order = n;
    g.mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    g.identity = 0;
    g.inv.resize(n);
    for (int a = 0; a < n; ++a) g.inv[a] = (n - a) % n;
    for (int a = 0; a < n; ++a) g.names.push_back(std::to_string(a));
    detail::require_valid(g, "make_cyclic");
    return g;
}

/// Dihedral group of order 2n. Index k (k < n) is the rotation x -> x+k,
/// index n+k the reflection x -> k-x, both mod n.
inline Group make_dihedral(int n) {
    if (n < 2) throw std::invalid_argument("make_dihedral: n must be >= 2");
    const int order = 2 * n;
    Group g;
    g.order = order;
    g.mul.resize(static_cast<std::size_t>(order) * order);
    auto idx = [n](int k, int f) { return f * n + ((k % n) + n) % n; };
    for (int f1 = 0; f1 < 2; ++f1)
        for (int k1 = 0; k1 < n; ++k1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int k2 = 0; k2 < n; ++k2) {
                    // composition a∘b of the maps x -> (-1)^f k + x
                    int k = f1 ? k1 - k2 : k1 + k2;
                    int f = f1 ^ f2;
                    g.mul[static_cast<std::size_t>(idx(k1, f1)) * order + idx(k2, f2)] = idx(k, f);
                }
    g.identity = 0;
    g.inv = detail::invert_from_table(g.mul, order, g.identity);
    for (int k = 0; k < n; ++k) g.names.push_back("r" + std::to_string(k));
    for (int k = 0; k < n; ++k) g.names.push_back("sr" + std::to_string(k));
    detail::require_valid(g, "make_dihedral");
    return g;
}

/// Symmetric group S_n (n <= 5). Elements are permutations of {0..n-1}
/// numbered in lexicographic order of one-line notation, so the identity is
/// index 0 and the numbering is reproducible.
inline Group make_symmetric(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("make_symmetric: n must be in 1..5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int order = static_cast<int>(perms.size());

    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    Group g;
    g.order = order;
    g.mul.resize(static_cast<std::size_t>(order) * order);
    std::vector<int> comp(n);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];  // (a·b)(x) = a(b(x))
            g.mul[static_cast<std::size_t>(a) * order + b] = index_of(comp);
        }
    g.identity = 0;
    g.inv = detail::invert_from_table(g.mul, order, g.identity);
    for (const auto& q : perms) {
        std::string s;
        for (int x : q) s += std::to_string(x);
        g.names.push_back(s);
    }
    detail::require_valid(g, "make_symmetric");
    return g;
}

/// The quaternion group {1,-1,i,-i,j,-j,k,-k} in that index order.
inline Group make_quaternion8() {
    // encode q = s * u with sign s in {0,1} (plus/minus) and unit u in {1,i,j,k}
    auto enc = [](int unit, int sign) { return 2 * unit + sign; };
    Group g;
    g.order = 8;
    g.mul.assign(64, 0);
    // unit products, rows/cols 0=1, 1=i, 2=j, 3=k:
    // i*i=j*j=k*k=-1 ; i*j=k j*k=i k*i=j ; j*i=-k k*j=-i i*k=-j
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sm[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    for (int ua = 0; ua < 4; ++ua)
        for (int sa = 0; sa < 2; ++sa)
            for (int ub = 0; ub < 4; ++ub)
                for (int sb = 0; sb < 2; ++sb) {
                    int u = unit_mul[ua][ub];
                    int s = (sa + sb + sm[ua][ub]) % 2;
                    g.mul[static_cast<std::size_t>(enc(ua, sa)) * 8 + enc(ub, sb)] = enc(u, s);
                }
    g.identity = 0;
    g.inv = detail::invert_from_table(g.mul, 8, g.identity);
    g.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    detail::require_valid(g, "make_quaternion8");
    return g;
}

/// Direct product; element (x, y) has index x*|b| + y.
inline Group direct_product(const Group& a, const Group& b) {
    Group g;
    const int na = a.order, nb = b.order;
    g.order = na * nb;
    g.mul.resize(static_cast<std::size_t>(g.order) * g.order);
    for (int xa = 0; xa < na; ++xa)
        for (int ya = 0; ya < nb; ++ya)
            for (int xb = 0; xb < na; ++xb)
                for (int yb = 0; yb < nb; ++yb) {
                    int lhs = xa * nb + ya, rhs = xb * nb + yb;
                    g.mul[static_cast<std::size_t>(lhs) * g.order + rhs] =
                        a.op(xa, xb) * nb + b.op(ya, yb);
                }
    g.identity = a.identity * nb + b.identity;
    g.inv = detail::invert_from_table(g.mul, g.order, g.identity);
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) g.names.push_back("(" + a.name_of(x) + "," + b.name_of(y) + ")");
    detail::require_valid(g, "direct_product");
    return g;
}

/// Cayley file format: first significant line is the order n, then n lines of
/// n whitespace-separated indices (row a holds mul[a][0..n-1]). Lines whose
/// first non-blank character is '#' are comments. The identity is inferred as
/// the unique row e with mul[e][a] == a for all a.
inline Group from_cayley_table(const std::string& text, int max_order = 256) {
    std::istringstream in(text);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw parse_error("cayley table: empty input");

    int n = 0;
    {
        std::istringstream ls(lines[0]);
        if (!(ls >> n)) throw parse_error("cayley table: first line must be the group order");
        std::string extra;
        if (ls >> extra) throw parse_error("cayley table: unexpected token after order");
    }
    if (n < 1) throw parse_error("cayley table: order must be >= 1");
    if (n > max_order)
        throw parse_error("cayley table: order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(max_order));
    if (static_cast<int>(lines.size()) != n + 1)
        throw parse_error("cayley table: expected " + std::to_string(n) + " rows, got " +
                          std::to_string(lines.size() - 1));

    Group g;
    g.order = n;
    g.mul.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        std::istringstream ls(lines[a + 1]);
        for (int b = 0; b < n; ++b) {
            int v;
            if (!(ls >> v))
                throw parse_error("cayley table: row " + std::to_string(a) + " is too short");
            if (v < 0 || v >= n)
                throw parse_error("cayley table: entry " + std::to_string(v) + " in row " +
                                  std::to_string(a) + " out of range");
            g.mul[static_cast<std::size_t>(a) * n + b] = v;
        }
        std::string extra;
        if (ls >> extra) throw parse_error("cayley table: row " + std::to_string(a) + " is too long");
    }

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = g.op(e, a) == a;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw validation_error("cayley table: no identity element");
    g.identity = identity;
    g.inv = detail::invert_from_table(g.mul, n, identity);
    detail::require_valid(g, "from_cayley_table");
    return g;
}

/// k h k^-1
inline int conjugate(const Group& g, int k, int h) { return g.op(g.op(k, h), g.inverse(k)); }

struct ConjugacyData {
    std::vector<std::vector<int>> classes;  // each sorted; ordered by smallest member
    std::vector<int> class_of;
};

inline ConjugacyData conjugacy_classes(const Group& g) {
    ConjugacyData data;
    data.class_of.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a) {
        if (data.class_of[a] >= 0) continue;
        std::vector<int> cls;
        for (int k = 0; k < g.order; ++k) {
            int c = conjugate(g, k, a);
            if (data.class_of[c] < 0) {
                data.class_of[c] = static_cast<int>(data.classes.size());
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        data.classes.push_back(std::move(cls));
    }
    return data;
}

/// #{(j,k) : jk = kj} / |G|^2, exact.
inline Rational commuting_fraction(const Group& g) {
    long long pairs = 0;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.op(a, b) == g.op(b, a)) ++pairs;
    return Rational(pairs, static_cast<long long>(g.order) * g.order);
}

inline long long commuting_pair_count(const Group& g) {
    long long pairs = 0;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.op(a, b) == g.op(b, a)) ++pairs;
    return pairs;
}

}  // namespace ccs
