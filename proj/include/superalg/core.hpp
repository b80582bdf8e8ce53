#pragma once

#include "superalg/linalg.hpp"
#include "superalg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superalg {

enum class Parity : int { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_of(int b) { return (b & 1) ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) { return parity_of(bit(a) + bit(b)); }
// (-1)^e
inline int sgn(int e) { return (e & 1) ? -1 : 1; }
std::string to_string(Parity p);
std::optional<Parity> parse_parity(const std::string& s);

// Labels in order, even block first.
class GradedBasis {
public:
    GradedBasis() = default;
    GradedBasis(std::vector<std::string> labels, std::size_t n_even);
    static GradedBasis from_parities(const std::vector<std::string>& labels, const std::vector<Parity>& parities);
    static GradedBasis standard(std::size_t n_even, std::size_t n_odd, const std::string& prefix = "b");

    std::size_t dim() const { return labels_.size(); }
    std::size_t n_even() const { return n_even_; }
    std::size_t n_odd() const { return labels_.size() - n_even_; }
    Parity parity(std::size_t i) const { return i < n_even_ ? Parity::Even : Parity::Odd; }
    int p(std::size_t i) const { return i < n_even_ ? 0 : 1; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

private:
    std::vector<std::string> labels_;
    std::size_t n_even_ = 0;
};

// Degree of a vector if all of its support lies in one parity block; the
// zero vector counts as even.
std::optional<Parity> degree_of(const GradedBasis& basis, const Vec& v);

struct BracketEntry {
    std::size_t i;
    std::size_t j;
    Vec value;  // [b_i, b_j]
};

class LieSuperalgebra {
public:
    LieSuperalgebra() = default;
    // Entries may be given in either order; [b_j, b_i] is derived from
    // super skew-symmetry. Throws InvariantViolation on parity or symmetry
    // violations and on duplicated pairs.
    LieSuperalgebra(GradedBasis basis, const std::vector<BracketEntry>& entries);
    static LieSuperalgebra abelian(GradedBasis basis);
    static LieSuperalgebra abelian(std::size_t n_even, std::size_t n_odd);

    const GradedBasis& basis() const { return basis_; }
    std::size_t dim() const { return basis_.dim(); }

    // [b_i, b_j] for any pair.
    const Vec& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    const std::vector<std::pair<std::size_t, Scalar>>& sparse(std::size_t i, std::size_t j) const {
        return sparse_[i * dim() + j];
    }
    Vec bracket(const Vec& x, const Vec& y) const;
    Vec bracket_basis(std::size_t i, const Vec& y) const;
    // Matrix of Y -> [x, Y].
    Matrix ad(const Vec& x) const;
    // Stored entries i <= j with nonzero value.
    std::vector<BracketEntry> entries() const;
    bool is_abelian() const;

    friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b) {
        return a.basis_ == b.basis_ && a.table_ == b.table_;
    }

private:
    GradedBasis basis_;
    std::vector<Vec> table_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
};

// Row-reduced spanning set of a subspace of K^n.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    Subspace(std::size_t ambient, const std::vector<Vec>& spanning);
    static Subspace whole(std::size_t n);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Coordinates of v in basis(); nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool is_graded(const GradedBasis& basis) const;
    Subspace part(const GradedBasis& basis, Parity p) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> rows_;
};

struct Report {
    bool pass = true;
    std::vector<std::size_t> witness;  // basis indices of the first violation
    Vec residual;
    std::string detail;
};

enum class Exec { Serial, Parallel };

Report graded_jacobi_check(const LieSuperalgebra& g, Exec exec = Exec::Parallel);
Subspace center(const LieSuperalgebra& g);
// Span of all [x, y] with x in a, y in b.
Subspace bracket_span(const LieSuperalgebra& g, const Subspace& a, const Subspace& b);
bool is_subalgebra(const LieSuperalgebra& g, const Subspace& s);
std::vector<Subspace> lower_central_series(const LieSuperalgebra& g);
bool is_nilpotent(const LieSuperalgebra& g);

struct DirectSumLayout {
    GradedBasis basis;
    std::vector<std::size_t> left;   // position of each basis vector of the first summand
    std::vector<std::size_t> right;  // same for the second summand
};

DirectSumLayout direct_sum_layout(const GradedBasis& g, const GradedBasis& h);
LieSuperalgebra direct_sum(const LieSuperalgebra& g, const LieSuperalgebra& h);
GradedBasis parity_flip_dual(const LieSuperalgebra& g);

// Express g in a new basis: column c of `change` is the new basis vector c in
// old coordinates. Labels and parities come from `new_basis`.
LieSuperalgebra change_basis(const LieSuperalgebra& g, const Matrix& change, const GradedBasis& new_basis);

}  // namespace superalg
