#pragma once

#include "superalg/core.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superalg {

bool matches_form_pattern(const GradedBasis& basis, const Matrix& m, Parity parity);

// Entry (i, j) is beta(b_i, b_j).
class BilinearForm {
public:
    BilinearForm() = default;
    // Throws ParityPatternViolation when the matrix has support outside the
    // blocks allowed by `parity`.
    BilinearForm(const GradedBasis& basis, Matrix m, Parity parity);
    static BilinearForm zero(const GradedBasis& basis, Parity parity);

    const Matrix& matrix() const { return m_; }
    Parity parity() const { return parity_; }
    std::size_t dim() const { return m_.rows(); }
    const Scalar& entry(std::size_t i, std::size_t j) const { return m_(i, j); }
    Scalar operator()(const Vec& x, const Vec& y) const;

    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

private:
    Matrix m_;
    Parity parity_ = Parity::Even;
};

struct FormReport {
    Parity parity = Parity::Even;
    bool supersymmetric = true;
    bool skew_supersymmetric = true;
    bool invariant = true;
    bool cocycle = true;
    bool nondegenerate = true;
    // First violating basis tuple for each failed flag, keyed by flag name.
    std::map<std::string, std::vector<std::size_t>> witnesses;

    bool quadratic() const { return supersymmetric && invariant && nondegenerate; }
    bool symplectic() const { return skew_supersymmetric && cocycle && nondegenerate; }
};

FormReport classify_form(const LieSuperalgebra& g, const BilinearForm& beta, Exec exec = Exec::Parallel);

Subspace orthogonal_subspace(const LieSuperalgebra& g, const BilinearForm& beta, const Subspace& s);

class LinearMap;
// D* with w(D X, Y) = (-1)^{|D||X|} w(X, D* Y).
LinearMap adjoint_map(const LieSuperalgebra& g, const BilinearForm& omega, const LinearMap& d);

enum class Symmetry { Supersymmetric, SkewSupersymmetricCocycle };

struct FormSpace {
    GradedBasis ambient;
    Parity parity = Parity::Even;
    std::vector<BilinearForm> basis_forms;
    std::size_t dim() const { return basis_forms.size(); }
};

// For Symmetry::Supersymmetric the constraints are supersymmetry plus
// invariance; otherwise skew-supersymmetry plus the cocycle identity.
FormSpace invariant_form_space(const LieSuperalgebra& g, Parity parity, Symmetry symmetry);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct NondegenerateAnswer {
    Verdict verdict = Verdict::Unknown;
    std::optional<BilinearForm> witness;
    bool exact = false;
};

// Decides whether some member of the space is nondegenerate. The
// determinant factors over the two parity blocks; each block determinant is
// a polynomial in the space coordinates whose total degree is at most the
// block size, so it is identically zero iff it vanishes on the simplex
// lattice {a in N^s : sum a <= size}. That exact test is used whenever the
// lattice is small enough; otherwise random sampling can only prove "yes".
NondegenerateAnswer exists_nondegenerate(const FormSpace& space);

Verdict admits_both_quadratic(const LieSuperalgebra& g);

}  // namespace superalg
