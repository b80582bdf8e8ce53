#include "superalg/core.hpp"
#include "superalg/errors.hpp"

#include <set>

namespace superalg {

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::optional<Parity> parse_parity(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    return std::nullopt;
}

GradedBasis::GradedBasis(std::vector<std::string> labels, std::size_t n_even)
    : labels_(std::move(labels)), n_even_(n_even) {
    if (n_even_ > labels_.size()) fail(ErrorCode::InvariantViolation, "even block larger than the basis");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) fail(ErrorCode::InvariantViolation, "empty basis label");
        if (!seen.insert(l).second) fail(ErrorCode::InvariantViolation, "duplicate basis label '" + l + "'");
    }
}

GradedBasis GradedBasis::from_parities(const std::vector<std::string>& labels, const std::vector<Parity>& parities) {
    if (labels.size() != parities.size()) fail(ErrorCode::DimensionMismatch, "labels and parities differ in length");
    std::size_t n_even = 0;
    while (n_even < parities.size() && parities[n_even] == Parity::Even) ++n_even;
    for (std::size_t i = n_even; i < parities.size(); ++i)
        if (parities[i] == Parity::Even)
            fail(ErrorCode::InvariantViolation, "even basis vector '" + labels[i] + "' follows an odd one");
    return GradedBasis(labels, n_even);
}

GradedBasis GradedBasis::standard(std::size_t n_even, std::size_t n_odd, const std::string& prefix) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n_even + n_odd; ++i) labels.push_back(prefix + std::to_string(i));
    return GradedBasis(labels, n_even);
}

std::optional<std::size_t> GradedBasis::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::optional<Parity> degree_of(const GradedBasis& basis, const Vec& v) {
    if (v.size() != basis.dim()) fail(ErrorCode::DimensionMismatch, "vector length differs from basis size");
    bool has_even = false, has_odd = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        (basis.p(i) ? has_odd : has_even) = true;
    }
    if (has_even && has_odd) return std::nullopt;
    return has_odd ? Parity::Odd : Parity::Even;
}

LieSuperalgebra::LieSuperalgebra(GradedBasis basis, const std::vector<BracketEntry>& entries)
    : basis_(std::move(basis)) {
    const std::size_t n = basis_.dim();
    table_.assign(n * n, zeros(n));
    sparse_.assign(n * n, {});
    std::vector<bool> set(n * n, false);
    for (const auto& e : entries) {
        if (e.i >= n || e.j >= n || e.value.size() != n)
            fail(ErrorCode::DimensionMismatch, "bracket entry outside the basis");
        std::size_t i = e.i, j = e.j;
        Vec v = e.value;
        const int s = -sgn(basis_.p(i) * basis_.p(j));
        if (i > j) {
            std::swap(i, j);
            v = Scalar(s) * v;
        }
        const std::string pair = "[" + basis_.label(i) + ", " + basis_.label(j) + "]";
        if (set[i * n + j]) fail(ErrorCode::InvariantViolation, "bracket " + pair + " given twice");
        set[i * n + j] = true;
        if (is_zero(v)) continue;
        if (i == j && basis_.p(i) == 0)
            fail(ErrorCode::InvariantViolation, "nonzero even diagonal bracket " + pair);
        const int target = (basis_.p(i) + basis_.p(j)) & 1;
        for (std::size_t k = 0; k < n; ++k)
            if (v[k] != 0 && basis_.p(k) != target)
                fail(ErrorCode::InvariantViolation, "bracket " + pair + " breaks parity additivity");
        table_[i * n + j] = v;
        table_[j * n + i] = Scalar(s) * v;
    }
    for (std::size_t a = 0; a < n * n; ++a)
        for (std::size_t k = 0; k < n; ++k)
            if (table_[a][k] != 0) sparse_[a].emplace_back(k, table_[a][k]);
}

LieSuperalgebra LieSuperalgebra::abelian(GradedBasis basis) { return LieSuperalgebra(std::move(basis), {}); }

LieSuperalgebra LieSuperalgebra::abelian(std::size_t n_even, std::size_t n_odd) {
    return abelian(GradedBasis::standard(n_even, n_odd));
}

Vec LieSuperalgebra::bracket(const Vec& x, const Vec& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) fail(ErrorCode::DimensionMismatch, "bracket argument length");
    Vec r = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Scalar c = x[i] * y[j];
            for (const auto& [k, v] : sparse(i, j)) r[k] += c * v;
        }
    }
    return r;
}

Vec LieSuperalgebra::bracket_basis(std::size_t i, const Vec& y) const {
    const std::size_t n = dim();
    Vec r = zeros(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        for (const auto& [k, v] : sparse(i, j)) r[k] += y[j] * v;
    }
    return r;
}

Matrix LieSuperalgebra::ad(const Vec& x) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, bracket(x, unit(n, j)));
    return m;
}

std::vector<BracketEntry> LieSuperalgebra::entries() const {
    std::vector<BracketEntry> out;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j)
            if (!sparse(i, j).empty()) out.push_back({i, j, structure(i, j)});
    return out;
}

bool LieSuperalgebra::is_abelian() const {
    for (const auto& s : sparse_)
        if (!s.empty()) return false;
    return true;
}

Subspace::Subspace(std::size_t ambient, const std::vector<Vec>& spanning) : ambient_(ambient) {
    if (spanning.empty()) return;
    for (const auto& v : spanning)
        if (v.size() != ambient) fail(ErrorCode::DimensionMismatch, "spanning vector length");
    Echelon e = rref(Matrix::from_rows(spanning, ambient));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) rows_.push_back(e.reduced.row(r));
}

Subspace Subspace::whole(std::size_t n) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(unit(n, i));
    return Subspace(n, rows);
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) fail(ErrorCode::DimensionMismatch, "vector outside the ambient space");
    // Rows are in reduced echelon form, so the coordinate on row r is the
    // entry of v at that row's pivot.
    Vec coords = zeros(rows_.size());
    Vec rest = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t p = 0;
        while (rows_[r][p] == 0) ++p;
        coords[r] = rest[p];
        axpy(rest, -coords[r], rows_[r]);
    }
    if (!is_zero(rest)) return std::nullopt;
    return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Vec> all = rows_;
    all.insert(all.end(), other.rows_.begin(), other.rows_.end());
    return Subspace(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) fail(ErrorCode::DimensionMismatch, "subspaces of different spaces");
    if (rows_.empty() || other.rows_.empty()) return Subspace(ambient_);
    // a.x = b.y  <=>  [A^T | -B^T] (x, y) = 0
    const std::size_t da = rows_.size(), db = other.rows_.size();
    Matrix m(ambient_, da + db);
    for (std::size_t k = 0; k < ambient_; ++k) {
        for (std::size_t r = 0; r < da; ++r) m(k, r) = rows_[r][k];
        for (std::size_t r = 0; r < db; ++r) m(k, da + r) = -other.rows_[r][k];
    }
    std::vector<Vec> span;
    for (const auto& sol : nullspace(m)) {
        Vec v = zeros(ambient_);
        for (std::size_t r = 0; r < da; ++r) axpy(v, sol[r], rows_[r]);
        span.push_back(v);
    }
    return Subspace(ambient_, span);
}

bool Subspace::is_graded(const GradedBasis& basis) const {
    for (const auto& r : rows_)
        if (!degree_of(basis, r)) return false;
    return true;
}

Subspace Subspace::part(const GradedBasis& basis, Parity p) const {
    std::vector<Vec> block;
    for (std::size_t i = 0; i < basis.dim(); ++i)
        if (basis.parity(i) == p) block.push_back(unit(basis.dim(), i));
    return intersect(Subspace(ambient_, block));
}

Subspace center(const LieSuperalgebra& g) {
    const std::size_t n = g.dim();
    if (n == 0) return Subspace(0);
    // Unknown x; equations sum_i x_i c_{ij}^k = 0 for every (j, k).
    Matrix m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, v] : g.sparse(i, j)) m(j * n + k, i) = v;
    return Subspace(n, nullspace(m));
}

Subspace bracket_span(const LieSuperalgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<Vec> span;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) {
            Vec z = g.bracket(x, y);
            if (!is_zero(z)) span.push_back(std::move(z));
        }
    return Subspace(g.dim(), span);
}

bool is_subalgebra(const LieSuperalgebra& g, const Subspace& s) { return s.contains(bracket_span(g, s, s)); }

std::vector<Subspace> lower_central_series(const LieSuperalgebra& g) {
    std::vector<Subspace> series{Subspace::whole(g.dim())};
    const Subspace all = Subspace::whole(g.dim());
    while (true) {
        Subspace next = bracket_span(g, all, series.back());
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

bool is_nilpotent(const LieSuperalgebra& g) { return lower_central_series(g).back().dim() == 0; }

DirectSumLayout direct_sum_layout(const GradedBasis& g, const GradedBasis& h) {
    std::set<std::string> seen(g.labels().begin(), g.labels().end());
    bool clash = false;
    for (const auto& l : h.labels()) clash = clash || seen.count(l) > 0;
    auto name = [&](const std::string& l, const char* prefix) { return clash ? prefix + l : l; };

    DirectSumLayout out;
    out.left.resize(g.dim());
    out.right.resize(h.dim());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < g.n_even(); ++i) out.left[i] = labels.size(), labels.push_back(name(g.label(i), "1."));
    for (std::size_t i = 0; i < h.n_even(); ++i) out.right[i] = labels.size(), labels.push_back(name(h.label(i), "2."));
    for (std::size_t i = g.n_even(); i < g.dim(); ++i) out.left[i] = labels.size(), labels.push_back(name(g.label(i), "1."));
    for (std::size_t i = h.n_even(); i < h.dim(); ++i) out.right[i] = labels.size(), labels.push_back(name(h.label(i), "2."));
    out.basis = GradedBasis(labels, g.n_even() + h.n_even());
    return out;
}

LieSuperalgebra direct_sum(const LieSuperalgebra& g, const LieSuperalgebra& h) {
    DirectSumLayout layout = direct_sum_layout(g.basis(), h.basis());
    const std::size_t n = layout.basis.dim();
    std::vector<BracketEntry> entries;
    auto copy = [&](const LieSuperalgebra& a, const std::vector<std::size_t>& pos) {
        for (const auto& e : a.entries()) {
            Vec v = zeros(n);
            for (std::size_t k = 0; k < a.dim(); ++k) v[pos[k]] = e.value[k];
            entries.push_back({pos[e.i], pos[e.j], v});
        }
    };
    copy(g, layout.left);
    copy(h, layout.right);
    return LieSuperalgebra(layout.basis, entries);
}

GradedBasis parity_flip_dual(const LieSuperalgebra& g) {
    const GradedBasis& b = g.basis();
    std::vector<std::string> labels;
    for (std::size_t i = b.n_even(); i < b.dim(); ++i) labels.push_back(b.label(i) + "*");
    for (std::size_t i = 0; i < b.n_even(); ++i) labels.push_back(b.label(i) + "*");
    return GradedBasis(labels, b.n_odd());
}

LieSuperalgebra change_basis(const LieSuperalgebra& g, const Matrix& change, const GradedBasis& new_basis) {
    const std::size_t n = g.dim();
    if (change.rows() != n || change.cols() != n || new_basis.dim() != n)
        fail(ErrorCode::DimensionMismatch, "change of basis size");
    auto inv = inverse(change);
    if (!inv) fail(ErrorCode::NotInvertible, "change of basis matrix is singular");
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < n; ++c) cols.push_back(change.column(c));
    std::vector<BracketEntry> entries;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Vec v = inv->apply(g.bracket(cols[a], cols[b]));
            if (!is_zero(v)) entries.push_back({a, b, v});
        }
    return LieSuperalgebra(new_basis, entries);
}

}  // namespace superalg
