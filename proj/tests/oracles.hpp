#pragma once

// Brute-force reference computations for the tests. Everything here works
// straight from structure constants and matrix entries with its own
// elimination code, so no library algorithm is checked against itself.

#include "superalg/catalog.hpp"

#include <optional>
#include <vector>

namespace oracle {

using superalg::BilinearForm;
using superalg::LieSuperalgebra;
using superalg::LinearMap;
using superalg::Matrix;
using superalg::Scalar;
using superalg::Vec;

inline int par(const LieSuperalgebra& g, std::size_t i) { return g.basis().p(i); }
inline int sign(int e) { return (e & 1) ? -1 : 1; }

inline void add_into(Vec& a, const Vec& b, const Scalar& c) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) a[i] += c * b[i];
}

inline Vec add(Vec a, const Vec& b, const Scalar& c = 1) {
    add_into(a, b, c);
    return a;
}

inline Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n, Scalar(0));
    v[i] = 1;
    return v;
}

// Bilinear expansion over the stored table.
inline Vec br(const LieSuperalgebra& g, const Vec& x, const Vec& y) {
    const std::size_t n = g.dim();
    Vec out(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            add_into(out, g.structure(i, j), x[i] * y[j]);
        }
    }
    return out;
}

inline Vec brb(const LieSuperalgebra& g, std::size_t i, std::size_t j) {
    return br(g, basis_vec(g.dim(), i), basis_vec(g.dim(), j));
}

inline bool zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec apply(const Matrix& m, const Vec& v) {
    Vec out(m.rows(), Scalar(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (v[c] != 0) out[r] += m(r, c) * v[c];
    return out;
}

inline Scalar pair(const Matrix& b, const Vec& x, const Vec& y) {
    Scalar s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) s += x[i] * b(i, j) * y[j];
    }
    return s;
}

// First ordered triple (i, j, k) over all of n^3 on which
// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] != 0.
inline std::optional<std::vector<std::size_t>> jacobi_violation(const LieSuperalgebra& g) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const int a = par(g, i), b = par(g, j), c = par(g, k);
                const Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                Vec s(n, Scalar(0));
                add_into(s, br(g, x, br(g, y, z)), sign(a * c));
                add_into(s, br(g, y, br(g, z, x)), sign(b * a));
                add_into(s, br(g, z, br(g, x, y)), sign(c * b));
                if (!zero(s)) return std::vector<std::size_t>{i, j, k};
            }
    return std::nullopt;
}

// Row echelon rank with plain Gaussian elimination.
inline std::size_t rank_of(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][c] == 0) continue;
            const Scalar f = rows[q][c] / rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[q][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

inline std::vector<Vec> rows_of(const Matrix& m) {
    std::vector<Vec> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vec v;
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
        out.push_back(v);
    }
    return out;
}

inline Scalar det(const Matrix& m) {
    std::vector<Vec> a = rows_of(m);
    const std::size_t n = a.size();
    Scalar d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t q = c + 1; q < n; ++q) {
            const Scalar f = a[q][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[q][k] -= f * a[c][k];
        }
    }
    return d;
}

// Dimensions of C^1 = g, C^{k+1} = [g, C^k] until they stop changing.
inline std::vector<std::size_t> lower_central_dims(const LieSuperalgebra& g, std::size_t max_terms = 12) {
    const std::size_t n = g.dim();
    std::vector<Vec> span;
    for (std::size_t i = 0; i < n; ++i) span.push_back(basis_vec(n, i));
    std::vector<std::size_t> dims{n};
    for (std::size_t t = 0; t < max_terms && dims.back() > 0; ++t) {
        std::vector<Vec> next;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& v : span) next.push_back(br(g, basis_vec(n, i), v));
        const std::size_t d = rank_of(next);
        if (d == dims.back()) break;
        dims.push_back(d);
        span = next;
    }
    return dims;
}

// dim of {x : [x, b_j] = 0 for all j}.
inline std::size_t center_dim(const LieSuperalgebra& g) {
    const std::size_t n = g.dim();
    // Unknown coefficients a_i; equation rows indexed by (j, component).
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < n; ++c) {
            Vec row(n, Scalar(0));
            for (std::size_t i = 0; i < n; ++i) row[i] = g.structure(i, j)[c];
            rows.push_back(row);
        }
    return n - rank_of(rows);
}

inline bool in_center(const LieSuperalgebra& g, const Vec& x) {
    for (std::size_t j = 0; j < g.dim(); ++j)
        if (!zero(br(g, x, basis_vec(g.dim(), j)))) return false;
    return true;
}

inline bool supersymmetric(const LieSuperalgebra& g, const Matrix& b) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            if (b(i, j) != sign(par(g, i) * par(g, j)) * b(j, i)) return false;
    return true;
}

inline bool skew_supersymmetric(const LieSuperalgebra& g, const Matrix& b) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            if (b(i, j) != -sign(par(g, i) * par(g, j)) * b(j, i)) return false;
    return true;
}

inline bool invariant(const LieSuperalgebra& g, const Matrix& b) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (pair(b, brb(g, i, j), basis_vec(n, k)) != pair(b, basis_vec(n, i), brb(g, j, k))) return false;
    return true;
}

inline bool cocycle(const LieSuperalgebra& g, const Matrix& w) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const int a = par(g, i), b = par(g, j), c = par(g, k);
                const Scalar s = sign(c * a) * pair(w, basis_vec(n, i), brb(g, j, k)) +
                                 sign(a * b) * pair(w, basis_vec(n, j), brb(g, k, i)) +
                                 sign(b * c) * pair(w, basis_vec(n, k), brb(g, i, j));
                if (s != 0) return false;
            }
    return true;
}

inline bool quadratic(const LieSuperalgebra& g, const BilinearForm& b) {
    return supersymmetric(g, b.matrix()) && invariant(g, b.matrix()) && det(b.matrix()) != 0;
}

inline bool symplectic(const LieSuperalgebra& g, const BilinearForm& w) {
    return skew_supersymmetric(g, w.matrix()) && cocycle(g, w.matrix()) && det(w.matrix()) != 0;
}

// D[x,y] = [Dx,y] + (-1)^{d|x|}[x,Dy] on all basis pairs.
inline bool derivation(const LieSuperalgebra& g, const Matrix& d, int degree) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec x = basis_vec(n, i), y = basis_vec(n, j);
            const Vec lhs = oracle::apply(d, br(g, x, y));
            const Vec rhs = add(br(g, oracle::apply(d, x), y), br(g, x, oracle::apply(d, y)), sign(degree * par(g, i)));
            if (lhs != rhs) return false;
        }
    return true;
}

// beta(Dx, y) = -(-1)^{d|x|} beta(x, Dy).
inline bool skew(const LieSuperalgebra& g, const Matrix& b, const Matrix& d, int degree) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec x = basis_vec(n, i), y = basis_vec(n, j);
            if (pair(b, oracle::apply(d, x), y) != -sign(degree * par(g, i)) * pair(b, x, oracle::apply(d, y))) return false;
        }
    return true;
}

inline bool nilpotent(const LieSuperalgebra& g) { return lower_central_dims(g).back() == 0; }

inline Matrix square(const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * a(k, j);
    return out;
}

// The subspace spanned by `vs` is totally isotropic for b.
inline bool isotropic(const Matrix& b, const std::vector<Vec>& vs) {
    for (const auto& x : vs)
        for (const auto& y : vs)
            if (pair(b, x, y) != 0) return false;
    return true;
}

inline bool closed(const LieSuperalgebra& g, const std::vector<Vec>& vs) {
    const std::size_t r = rank_of(vs);
    for (const auto& x : vs)
        for (const auto& y : vs) {
            std::vector<Vec> ext = vs;
            ext.push_back(br(g, x, y));
            if (rank_of(ext) != r) return false;
        }
    return true;
}

}  // namespace oracle
