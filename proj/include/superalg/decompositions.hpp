#pragma once

#include "superalg/constructions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superalg {

enum class SplitKind {
    OddSymp1d,
    EvenSymp1dDouble,
    EvenSymp1dGeneralized,
    DirectSum,
    OddQuadOddSymp1d,
    OddQuadEvenSymp2d,
    EvenQuadOddSymp2d,
};

std::string to_string(SplitKind kind);

// Inverse of one construction step. `reconstructed` is the construction
// applied to `base` with the recovered parameters, and `embedding` is the
// change of basis (columns in input coordinates) under which it equals the
// input exactly; the split functions check that equality before returning.
struct SplitResult {
    SplitKind kind = SplitKind::OddSymp1d;
    QuadSympAlgebra base;
    std::optional<Ext1Data> ext1;
    std::optional<GodeData> gode;
    std::optional<Ext2Data> ext2;
    Scalar ideal_norm = 0;  // omega(e*, e*) for the direct-sum case
    Extension reconstructed;
    Matrix embedding;
};

// Splits a symplectic algebra with nonzero center along a central vector.
SplitResult split_symplectic(const LieSuperalgebra& g, const BilinearForm& omega);

// Same along a given central e* and partner e with omega(e*, e) = 1; when
// they are the vectors a construction added, the base comes back in its
// original coordinates and labels.
SplitResult split_symplectic_along(const LieSuperalgebra& g, const BilinearForm& omega, const Vec& star,
                                   const Vec& e);

// Splits a quadratic symplectic algebra; the parity pair selects the 1- or
// 2-dimensional inverse construction. Both forms even is unsupported.
SplitResult split_quadratic_symplectic(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega);

// Same, with the central vectors e*, e0*, e1* drawn from `star` and their
// partners e, e0, e1 from `partner`.
SplitResult split_quadratic_symplectic_within(const LieSuperalgebra& g, const BilinearForm& b,
                                              const BilinearForm& omega, const Subspace& star,
                                              const Subspace& partner);

// Pinned variant: stars = {e*} and partners = {e} for the 1-dim case,
// stars = {e0*, e1*} and partners = {e0, e1} for the 2-dim cases.
SplitResult split_quadratic_symplectic_along(const LieSuperalgebra& g, const BilinearForm& b,
                                             const BilinearForm& omega, const std::vector<Vec>& stars,
                                             const std::vector<Vec>& partners);

// Reconstructed algebra (with its forms) expressed back in input
// coordinates through the embedding; equality with the input is the
// round-trip law.
bool round_trip_holds(const LieSuperalgebra& g, const std::optional<BilinearForm>& b,
                      const std::optional<BilinearForm>& omega, const SplitResult& split);

}  // namespace superalg
