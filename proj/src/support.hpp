#pragma once

// Validation helpers shared by the construction and decomposition code.

#include "superalg/constructions.hpp"
#include "superalg/errors.hpp"

#include <map>
#include <string>
#include <utility>

namespace superalg::detail {

inline void require(bool ok, ErrorCode code, const std::string& detail) {
    if (!ok) fail(code, detail);
}

inline void require_vector(const GradedBasis& b, const Vec& v, Parity p, const std::string& name) {
    require(v.size() == b.dim(), ErrorCode::DimensionMismatch, name + " has the wrong length");
    auto deg = degree_of(b, v);
    require(deg && (is_zero(v) || *deg == p), ErrorCode::WrongParity, name + " must be " + to_string(p));
}

inline void require_map(const LieSuperalgebra& g, const LinearMap& d, Parity p, const std::string& name) {
    require(d.dim() == g.dim(), ErrorCode::DimensionMismatch, name + " acts on a different space");
    require(d.degree() == p, ErrorCode::WrongParity, name + " must be " + to_string(p));
    Report r = superderivation_check(g, d);
    require(r.pass, ErrorCode::NotADerivation, name + ": " + r.detail);
}

inline void require_skew(const LieSuperalgebra& g, const BilinearForm& b, const LinearMap& d, const std::string& name) {
    Report r = skew_report(g, b, d);
    require(r.pass, ErrorCode::NotADerivation, name + " is not skew: " + r.detail);
}

inline void require_quadratic(const LieSuperalgebra& g, const BilinearForm& b, const std::string& name) {
    require(b.dim() == g.dim(), ErrorCode::DimensionMismatch, name + " lives on a different space");
    FormReport r = classify_form(g, b);
    require(r.nondegenerate, ErrorCode::DegenerateForm, name + " is degenerate");
    require(r.supersymmetric && r.invariant, ErrorCode::ConditionViolated, name + " is not an invariant supersymmetric form");
}

inline void require_symplectic(const LieSuperalgebra& g, const BilinearForm& w, const std::string& name) {
    require(w.dim() == g.dim(), ErrorCode::DimensionMismatch, name + " lives on a different space");
    FormReport r = classify_form(g, w);
    require(r.nondegenerate, ErrorCode::DegenerateForm, name + " is degenerate");
    require(r.skew_supersymmetric && r.cocycle, ErrorCode::ConditionViolated, name + " is not a skew-supersymmetric cocycle");
}

inline void require_equal(const Vec& a, const Vec& b, const std::string& what) {
    require(a == b, ErrorCode::ConditionViolated, what + " fails: " + to_string(a) + " vs " + to_string(b));
}

inline void require_equal(const Matrix& a, const Matrix& b, const std::string& what) {
    require(a == b, ErrorCode::ConditionViolated, what + " fails");
}

// Accumulates bracket values for a new algebra, normalising every pair to
// i <= j through super skew-symmetry.
class BracketTable {
public:
    explicit BracketTable(const GradedBasis& basis) : basis_(basis) {}

    void add(std::size_t i, std::size_t j, const Vec& v) {
        if (is_zero(v)) return;
        if (i > j) {
            add(j, i, Scalar(-sgn(basis_.p(i) * basis_.p(j))) * v);
            return;
        }
        auto& slot = values_[{i, j}];
        if (slot.empty()) slot = zeros(basis_.dim());
        slot += v;
    }

    LieSuperalgebra build() const {
        std::vector<BracketEntry> entries;
        for (const auto& [key, v] : values_)
            if (!is_zero(v)) entries.push_back({key.first, key.second, v});
        return LieSuperalgebra(basis_, entries);
    }

private:
    GradedBasis basis_;
    std::map<std::pair<std::size_t, std::size_t>, Vec> values_;
};

// The post-construction checks: the algebra satisfies Jacobi and all forms
// play their roles. A failure here means the theory and the code disagree.
inline void certify(const Extension& ext) {
    Report jac = graded_jacobi_check(ext.value.algebra);
    require(jac.pass, ErrorCode::InvariantViolation, "constructed bracket breaks Jacobi: " + jac.detail);
    verify_roles(ext.value);
}

}  // namespace superalg::detail
