#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "ccs/colouring.hpp"
#include "ccs/group.hpp"
#include "ccs/numeric.hpp"
#include "ccs/surface.hpp"

namespace ccs {

/// An exact scalar count * order^(-half_exponent/2). No normal form is
/// imposed on (count, half_exponent); equality is semantic via values_equal,
/// which avoids divisibility edge cases and keeps composition a pure integer
/// product. Never rendered as floating point except for display.
struct InvariantValue {
    std::uint64_t group_order = 1;
    BigInt count = 0;
    std::uint64_t half_exponent = 0;
};

/// true iff the two scalars denote the same real number. Since counts are
/// nonnegative, comparing squares clears the square roots exactly:
/// a == b  iff  a.count^2 * order^b.he == b.count^2 * order^a.he.
inline bool values_equal(const InvariantValue& a, const InvariantValue& b) {
    if (a.group_order != b.group_order)
        throw std::invalid_argument("values_equal: group order mismatch");
    return a.count * a.count * big_pow(a.group_order, b.half_exponent) ==
           b.count * b.count * big_pow(b.group_order, a.half_exponent);
}

/// The linear map of a surface as an integer matrix of raw colouring counts
/// plus one shared half-exponent. Rows index out-tuples, columns in-tuples,
/// mixed-radix with the leftmost boundary circle most significant.
struct TqftMatrix {
    std::uint64_t group_order = 1;
    int in_circles = 0;
    int out_circles = 0;
    std::uint64_t half_exponent = 0;
    std::vector<BigInt> entries;  // row-major, rows = order^out, cols = order^in

    std::size_t rows() const {
        std::size_t r = 1;
        for (int i = 0; i < out_circles; ++i) r *= group_order;
        return r;
    }
    std::size_t cols() const {
        std::size_t c = 1;
        for (int i = 0; i < in_circles; ++i) c *= group_order;
        return c;
    }
    BigInt& at(std::size_t row, std::size_t col) { return entries[row * cols() + col]; }
    const BigInt& at(std::size_t row, std::size_t col) const { return entries[row * cols() + col]; }

    friend bool operator==(const TqftMatrix&, const TqftMatrix&) = default;
};

inline std::size_t encode_tuple(const std::vector<int>& tuple, std::uint64_t order) {
    std::size_t idx = 0;
    for (int v : tuple) idx = idx * order + static_cast<std::size_t>(v);
    return idx;
}

inline std::vector<int> decode_tuple(std::size_t idx, int circles, std::uint64_t order) {
    std::vector<int> tuple(circles);
    for (int i = circles - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(idx % order);
        idx /= order;
    }
    return tuple;
}

/// Normalized invariant of one boundary colouring; the half-exponent is
/// n + m + 2v for boundary counts (n, m) and v internal vertices.
inline InvariantValue invariant_scalar(const Group& g, const CellComplex& m,
                                       const BoundaryColouring& bc) {
    InvariantValue val;
    val.group_order = static_cast<std::uint64_t>(g.order);
    val.count = count_colourings(g, m, bc);
    val.half_exponent = static_cast<std::uint64_t>(m.in_count() + m.out_count() +
                                                   2 * m.internal_vertex_count());
    return val;
}

/// Full matrix of raw counts over all boundary colourings.
inline TqftMatrix invariant_matrix(const Group& g, const CellComplex& m) {
    require_valid(m, "invariant_matrix");
    TqftMatrix z;
    z.group_order = static_cast<std::uint64_t>(g.order);
    z.in_circles = m.in_count();
    z.out_circles = m.out_count();
    z.half_exponent =
        static_cast<std::uint64_t>(z.in_circles + z.out_circles + 2 * m.internal_vertex_count());
    std::size_t rows = z.rows(), cols = z.cols();
    if (rows > (1u << 22) / std::max<std::size_t>(cols, 1))
        throw budget_error("invariant_matrix: matrix too large");
    z.entries.resize(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        BoundaryColouring bc;
        bc.out_elems = decode_tuple(r, z.out_circles, z.group_order);
        for (std::size_t c = 0; c < cols; ++c) {
            bc.in_elems = decode_tuple(c, z.in_circles, z.group_order);
            z.at(r, c) = count_colourings(g, m, bc);
        }
    }
    return z;
}

/// Matrix product z2 * z1, the algebraic form of gluing z1's out circles to
/// z2's in circles; half-exponents add.
inline TqftMatrix compose(const TqftMatrix& z2, const TqftMatrix& z1) {
    if (z1.group_order != z2.group_order)
        throw std::invalid_argument("compose: group order mismatch");
    if (z1.out_circles != z2.in_circles || z1.out_circles < 1)
        throw std::invalid_argument("compose: shape mismatch (" + std::to_string(z1.out_circles) +
                                    " out vs " + std::to_string(z2.in_circles) + " in)");
    TqftMatrix r;
    r.group_order = z1.group_order;
    r.in_circles = z1.in_circles;
    r.out_circles = z2.out_circles;
    r.half_exponent = z1.half_exponent + z2.half_exponent;
    std::size_t rows = r.rows(), cols = r.cols(), mid = z1.rows();
    r.entries.assign(rows * cols, BigInt(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < mid; ++k) {
            const BigInt& a = z2.at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) r.at(i, j) += a * z1.at(k, j);
        }
    return r;
}

/// Kronecker product consistent with the index convention: z1's circles are
/// leftmost, hence most significant.
inline TqftMatrix tensor(const TqftMatrix& z1, const TqftMatrix& z2) {
    if (z1.group_order != z2.group_order)
        throw std::invalid_argument("tensor: group order mismatch");
    TqftMatrix r;
    r.group_order = z1.group_order;
    r.in_circles = z1.in_circles + z2.in_circles;
    r.out_circles = z1.out_circles + z2.out_circles;
    r.half_exponent = z1.half_exponent + z2.half_exponent;
    std::size_t r1 = z1.rows(), c1 = z1.cols(), r2 = z2.rows(), c2 = z2.cols();
    r.entries.resize(r1 * r2 * c1 * c2);
    for (std::size_t i1 = 0; i1 < r1; ++i1)
        for (std::size_t i2 = 0; i2 < r2; ++i2)
            for (std::size_t j1 = 0; j1 < c1; ++j1)
                for (std::size_t j2 = 0; j2 < c2; ++j2)
                    r.at(i1 * r2 + i2, j1 * c2 + j2) = z1.at(i1, j1) * z2.at(i2, j2);
    return r;
}

/// Transpose with in/out swapped; the matrix of the reflected surface.
inline TqftMatrix reflect_matrix(const TqftMatrix& z) {
    TqftMatrix r;
    r.group_order = z.group_order;
    r.in_circles = z.out_circles;
    r.out_circles = z.in_circles;
    r.half_exponent = z.half_exponent;
    r.entries.resize(z.entries.size());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) r.at(i, j) = z.at(j, i);
    return r;
}

/// Transpose composed with reversing each tuple and inverting each element;
/// the matrix of the 180-degree-rotated surface.
inline TqftMatrix rotate_matrix(const TqftMatrix& z, const Group& g) {
    if (static_cast<std::uint64_t>(g.order) != z.group_order)
        throw std::invalid_argument("rotate_matrix: group order mismatch");
    auto rev_inv = [&](std::vector<int> t) {
        std::reverse(t.begin(), t.end());
        for (int& v : t) v = g.inverse(v);
        return t;
    };
    TqftMatrix r;
    r.group_order = z.group_order;
    r.in_circles = z.out_circles;
    r.out_circles = z.in_circles;
    r.half_exponent = z.half_exponent;
    r.entries.resize(z.entries.size());
    for (std::size_t i = 0; i < r.rows(); ++i) {
        auto out_tuple = decode_tuple(i, r.out_circles, r.group_order);
        std::size_t zi = encode_tuple(rev_inv(out_tuple), z.group_order);
        for (std::size_t j = 0; j < r.cols(); ++j) {
            auto in_tuple = decode_tuple(j, r.in_circles, r.group_order);
            std::size_t zj = encode_tuple(rev_inv(in_tuple), z.group_order);
            r.at(i, j) = z.at(zj, zi);
        }
    }
    return r;
}

/// Entrywise semantic equality: matching shapes and every entry equal as an
/// exact scalar (half-exponents may differ).
inline bool matrices_values_equal(const TqftMatrix& a, const TqftMatrix& b) {
    if (a.group_order != b.group_order || a.in_circles != b.in_circles ||
        a.out_circles != b.out_circles)
        return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        InvariantValue va{a.group_order, a.entries[i], a.half_exponent};
        InvariantValue vb{b.group_order, b.entries[i], b.half_exponent};
        if (!values_equal(va, vb)) return false;
    }
    return true;
}

inline bool is_idempotent(const TqftMatrix& z) {
    if (z.in_circles != z.out_circles)
        throw std::invalid_argument("is_idempotent: matrix is not square");
    return matrices_values_equal(compose(z, z), z);
}

/// Text dump: header line then order^m rows of order^n counts. Bit-exact
/// across platforms.
inline std::string dump_matrix(const TqftMatrix& z) {
    std::ostringstream os;
    os << "tqft n=" << z.in_circles << " m=" << z.out_circles << " order=" << z.group_order
       << " he=" << z.half_exponent << "\n";
    for (std::size_t i = 0; i < z.rows(); ++i) {
        for (std::size_t j = 0; j < z.cols(); ++j) {
            if (j) os << ' ';
            os << z.at(i, j).str();
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace ccs
