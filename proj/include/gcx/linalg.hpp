#pragma once

#include "gcx/rational.hpp"
#include "gcx/sparse_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gcx {

// Reduced row-echelon form over Q together with the pivot columns. The
// elimination is plain rational Gaussian elimination; among candidate pivots
// in the leftmost unresolved column we pick the entry with the smallest
// |numerator * denominator| (ties: smallest row index) to keep intermediate
// fractions modest on sparse inputs.
struct RREF {
    std::vector<std::vector<Rational>> reduced; // rank rows, each of length cols
    std::vector<std::size_t> pivot_cols;
    std::size_t cols = 0;

    std::size_t rank() const { return pivot_cols.size(); }
};

inline RREF rref(const SparseRationalMatrix& m) {
    // dense row representation; matrices here are at most a few
    // thousand columns, so this is comfortably exact
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
    for (const auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;

    RREF out;
    out.cols = m.cols();
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols() && next_row < rows.size(); ++col) {
        std::size_t best = rows.size();
        Int best_weight;
        for (std::size_t r = next_row; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Int w = pivot_weight(rows[r][col]);
            if (best == rows.size() || w < best_weight) {
                best = r;
                best_weight = w;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[next_row], rows[best]);
        Rational inv = rows[next_row][col];
        for (auto& x : rows[next_row]) x /= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (std::size_t c = col; c < m.cols(); ++c) rows[r][c] -= f * rows[next_row][c];
        }
        out.pivot_cols.push_back(col);
        ++next_row;
    }
    rows.resize(next_row);
    out.reduced = std::move(rows);
    return out;
}

inline std::size_t rank_bareiss(const SparseRationalMatrix& m);

inline bool is_integer_matrix(const SparseRationalMatrix& m) {
    for (const auto& [rc, v] : m.entries())
        if (rat_den(v) != 1) return false;
    return true;
}

// dense integer blocks go through fraction-free Bareiss, everything else
// through the rational elimination
inline std::size_t rank(const SparseRationalMatrix& m) {
    std::size_t cells = m.rows() * m.cols();
    if (cells >= 64 && m.nnz() * 4 >= cells && is_integer_matrix(m)) return rank_bareiss(m);
    return rref(m).rank();
}

// Exact basis of the null space {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> kernel_basis(const SparseRationalMatrix& m) {
    RREF r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> x(m.cols(), Rational(0));
        x[free_col] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            x[r.pivot_cols[i]] = -r.reduced[i][free_col];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Coset representative of v modulo the column space of m, expressed in the
// complement of the pivot coordinates of a fixed RREF of m^T. Zero iff v lies
// in the image of m.
inline std::vector<Rational> reduce_mod_image(const std::vector<Rational>& v,
                                              const SparseRationalMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("reduce_mod_image: dimension mismatch");
    RREF r = rref(m.transposed());
    std::vector<Rational> out = v;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        Rational c = out[r.pivot_cols[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] -= c * r.reduced[i][j];
    }
    return out;
}

// Fraction-free Bareiss elimination on a dense integer copy; exact rank.
// Cross-checks the rational path on integer inputs.
inline std::size_t rank_bareiss(const SparseRationalMatrix& m) {
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols(), Int(0)));
    for (const auto& [rc, v] : m.entries()) {
        if (rat_den(v) != 1) throw std::invalid_argument("rank_bareiss: integer matrix required");
        a[rc.first][rc.second] = rat_num(v);
    }
    std::size_t rk = 0;
    Int prev(1);
    for (std::size_t col = 0; col < m.cols() && rk < m.rows(); ++col) {
        std::size_t piv = m.rows();
        for (std::size_t r = rk; r < m.rows(); ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv == m.rows()) continue;
        std::swap(a[rk], a[piv]);
        for (std::size_t r = rk + 1; r < m.rows(); ++r) {
            for (std::size_t c = col + 1; c < m.cols(); ++c)
                a[r][c] = (a[rk][col] * a[r][c] - a[r][col] * a[rk][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

// Rank modulo a prime p (int64 arithmetic). Probabilistic cross-check of the
// exact rank: rank mod p <= rank over Q, with equality for almost all p.
inline std::size_t rank_mod_p(const SparseRationalMatrix& m, std::int64_t p) {
    auto mod = [p](Int x) {
        Int r = x % p;
        if (r < 0) r += p;
        return static_cast<std::int64_t>(r);
    };
    auto pow_mod = [p](std::int64_t base, std::int64_t exp) {
        __int128 acc = 1, b = base % p;
        while (exp > 0) {
            if (exp & 1) acc = acc * b % p;
            b = b * b % p;
            exp >>= 1;
        }
        return static_cast<std::int64_t>(acc);
    };
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols(), 0));
    for (const auto& [rc, v] : m.entries()) {
        std::int64_t num = mod(rat_num(v));
        std::int64_t den = mod(rat_den(v));
        if (den == 0) throw std::invalid_argument("rank_mod_p: denominator divisible by p");
        a[rc.first][rc.second] =
            static_cast<std::int64_t>(static_cast<__int128>(num) * pow_mod(den, p - 2) % p);
    }
    std::size_t rk = 0;
    for (std::size_t col = 0; col < m.cols() && rk < m.rows(); ++col) {
        std::size_t piv = m.rows();
        for (std::size_t r = rk; r < m.rows(); ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv == m.rows()) continue;
        std::swap(a[rk], a[piv]);
        std::int64_t inv = pow_mod(a[rk][col], p - 2);
        for (std::size_t c = col; c < m.cols(); ++c)
            a[rk][c] = static_cast<std::int64_t>(static_cast<__int128>(a[rk][c]) * inv % p);
        for (std::size_t r = rk + 1; r < m.rows(); ++r) {
            if (a[r][col] == 0) continue;
            std::int64_t f = a[r][col];
            for (std::size_t c = col; c < m.cols(); ++c) {
                __int128 x = a[r][c] - static_cast<__int128>(f) * a[rk][c] % p;
                a[r][c] = static_cast<std::int64_t>((x % p + p) % p);
            }
        }
        ++rk;
    }
    return rk;
}

} // namespace gcx
