#pragma once

#include "superalg/core.hpp"
#include "superalg/forms.hpp"

#include <vector>

namespace superalg {

bool matches_map_pattern(const GradedBasis& basis, const Matrix& m, Parity degree);

// Column i is the image of basis vector i.
class LinearMap {
public:
    LinearMap() = default;
    // Throws ParityPatternViolation if the matrix does not have the block
    // shape of a homogeneous map of the given degree.
    LinearMap(const GradedBasis& basis, Matrix m, Parity degree);
    static LinearMap zero(const GradedBasis& basis, Parity degree);
    static LinearMap identity(const GradedBasis& basis);

    const Matrix& matrix() const { return m_; }
    Parity degree() const { return degree_; }
    int d() const { return bit(degree_); }
    std::size_t dim() const { return m_.rows(); }
    Vec operator()(const Vec& v) const { return m_.apply(v); }
    Vec image(std::size_t i) const { return m_.column(i); }
    bool invertible() const;

    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    friend LinearMap supercommutator(const LinearMap&, const LinearMap&);
    friend LinearMap compose(const LinearMap&, const LinearMap&);
    LinearMap(Matrix m, Parity degree) : m_(std::move(m)), degree_(degree) {}

    Matrix m_;
    Parity degree_ = Parity::Even;
};

// D1 o D2
LinearMap compose(const LinearMap& d1, const LinearMap& d2);
// D1 D2 - (-1)^{|D1||D2|} D2 D1
LinearMap supercommutator(const LinearMap& d1, const LinearMap& d2);

Report superderivation_check(const LieSuperalgebra& g, const LinearMap& d, Exec exec = Exec::Parallel);

// beta(D X, Y) = -(-1)^{|D||X|} beta(X, D Y) on basis pairs.
Report skew_report(const LieSuperalgebra& g, const BilinearForm& beta, const LinearMap& d);
bool skew_check(const LieSuperalgebra& g, const BilinearForm& beta, const LinearMap& d);

// Basis of the space of superderivations of the given degree (restricted to
// maps skew with respect to `b` when it is given).
std::vector<LinearMap> derivation_space(const LieSuperalgebra& g, Parity degree,
                                        const BilinearForm* b = nullptr);

// The unique Delta with omega(X, Y) = B(Delta X, Y), verified to be an
// invertible superderivation that is skew with respect to B.
LinearMap symplectic_derivation(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega);

// The form X, Y -> B(Delta X, Y).
BilinearForm form_from_derivation(const LieSuperalgebra& g, const BilinearForm& b, const LinearMap& delta);

struct Eigenpair {
    Scalar value;
    std::size_t multiplicity = 0;  // algebraic
    Subspace eigenspace;           // ker(D - value)
    Subspace generalized;          // ker(D - value)^multiplicity
};

struct EigenSplit {
    std::vector<Eigenpair> pairs;  // sorted by canonical_less on the value
    Subspace residual;             // invariant part without rational eigenvalues
    bool fully_rational() const { return residual.dim() == 0; }
};

// Spectrum of D restricted to the invariant subspace S.
EigenSplit rational_eigen_split(const LinearMap& d, const Subspace& s);

}  // namespace superalg
