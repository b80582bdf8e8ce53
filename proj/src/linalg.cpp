#include "superalg/linalg.hpp"
#include "superalg/errors.hpp"

#include <algorithm>

namespace superalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "row length");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
    if (v.size() != rows_) fail(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector product");
    Vec r = zeros(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j] == 0) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = (*this)(i, j);
            if (a != 0) r[i] += a * v[j];
        }
    }
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

Scalar Matrix::trace() const {
    Scalar t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "matrix product");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "matrix sum");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
    return c;
}

std::string to_string(const Matrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += " ";
            out += to_string(m(i, j));
        }
    }
    return out + "]";
}

Echelon rref(Matrix m) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = zeros(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) fail(ErrorCode::DimensionMismatch, "right-hand side length");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = rref(std::move(aug));
    Vec x = zeros(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == m.cols()) return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.square()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = rref(std::move(aug));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Scalar determinant(Matrix m) {
    if (!m.square()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Scalar f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j)
                if (m(c, j) != 0) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

// Faddeev-LeVerrier; exact over the rationals.
Polynomial charpoly(const Matrix& a) {
    if (!a.square()) fail(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    Polynomial c(n + 1, Scalar(0));
    c[n] = 1;
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk + c[n - k + 1] * Matrix::identity(n);
        c[n - k] = -(a * mk).trace() / Scalar(static_cast<long>(k));
    }
    return c;
}

Polynomial poly_trim(Polynomial p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Scalar poly_eval(const Polynomial& p, const Scalar& x) {
    Scalar r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

Matrix poly_eval(const Polynomial& p, const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * m + *it * Matrix::identity(m.rows());
    return r;
}

Polynomial deflate(const Polynomial& p, const Scalar& root) {
    Polynomial q = poly_trim(p);
    if (q.size() <= 1) fail(ErrorCode::DimensionMismatch, "deflating a constant polynomial");
    Polynomial out(q.size() - 1);
    Scalar carry = 0;
    for (std::size_t i = q.size(); i-- > 1;) {
        carry = q[i] + carry * root;
        out[i - 1] = carry;
    }
    if (q[0] + carry * root != 0) fail(ErrorCode::InvariantViolation, "deflation by a non-root");
    return out;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Scale to a primitive integer polynomial with the same roots.
std::vector<mpz_class> integer_form(const Polynomial& p) {
    mpz_class l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> out;
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_class v = c.get_num() * (l / c.get_den());
        out.push_back(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g != 0)
        for (auto& v : out) v /= g;
    return out;
}

std::optional<Scalar> find_root(const Polynomial& p) {
    if (p[0] == 0) return Scalar(0);
    auto z = integer_form(p);
    auto ps = divisors(z.front());
    auto qs = divisors(z.back());
    for (const auto& q : qs)
        for (const auto& num : ps)
            for (int s : {1, -1}) {
                Scalar cand(s * num, q);
                cand.canonicalize();
                if (poly_eval(p, cand) == 0) return cand;
            }
    return std::nullopt;
}

}  // namespace

std::pair<std::vector<RationalRoot>, Polynomial> rational_roots(const Polynomial& input) {
    Polynomial p = poly_trim(input);
    std::vector<RationalRoot> roots;
    while (p.size() > 1) {
        auto r = find_root(p);
        if (!r) break;
        p = deflate(p, *r);
        auto it = std::find_if(roots.begin(), roots.end(), [&](const RationalRoot& x) { return x.value == *r; });
        if (it == roots.end())
            roots.push_back({*r, 1});
        else
            ++it->multiplicity;
    }
    std::sort(roots.begin(), roots.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return canonical_less(a.value, b.value); });
    return {roots, p};
}

}  // namespace superalg
