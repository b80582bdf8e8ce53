#pragma once

#include "superalg/decompositions.hpp"

#include <vector>

namespace superalg {

// Graded subalgebras a, b with g = a + b (direct) and B(a, a) = B(b, b) = 0.
Report manin_pair_report(const LieSuperalgebra& g, const BilinearForm& b, const Subspace& a_part,
                         const Subspace& b_part);

struct ManinSplit {
    Subspace a;
    Subspace b;
    LinearMap delta_tilde;  // the operator whose spectrum defines the split
    std::vector<Eigenpair> spectrum;
    Subspace center_a;  // z(g) intersected with a
    Subspace center_b;
};

// a is the sum of generalized eigenspaces of positive eigenvalue, b of
// negative eigenvalue. For odd Delta the operator is [Delta, Delta] = 2 Delta^2;
// for even Delta the bracket vanishes, so Delta itself is used.
ManinSplit manin_split(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega);

// True iff (a, b) is a Manin pair on which omega is isotropic. Isotropy and
// Delta-stability are evaluated independently; if they ever disagree on a
// Manin pair an InvariantViolation is thrown.
bool special_check(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                   const Subspace& a_part, const Subspace& b_part);

struct ManinExtension {
    Extension ext;
    Subspace a;
    Subspace b;
};

// Odd-quadratic odd-symplectic step by one odd vector: k must vanish and
// Dbar, x0, c1 must live in b; delta must stabilize both factors.
ManinExtension manin_double_extension(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                                      const Subspace& a_part, const Subspace& b_part, const GodeData& data);

// Two-dimensional step: k = 0, alpha = 0, D and Dbar stabilize b,
// x0, x1, c0, c1 lie in b and delta stabilizes both factors.
ManinExtension manin_double_extension(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                                      const Subspace& a_part, const Subspace& b_part, const Ext2Data& data);

struct ManinInverse {
    SplitResult split;
    Subspace a;  // pair on the base, in base coordinates
    Subspace b;
    bool swapped = false;  // the central vectors were taken from b
};

ManinInverse manin_inverse(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                           const Subspace& a_part, const Subspace& b_part);

}  // namespace superalg
