#pragma once

#include "superalg/core.hpp"
#include "superalg/forms.hpp"
#include "superalg/maps.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superalg {

struct QuadSympAlgebra {
    LieSuperalgebra algebra;
    std::optional<BilinearForm> quadratic;
    std::optional<BilinearForm> symplectic;
    std::optional<LinearMap> derivation;  // symplectic = quadratic(derivation ., .)
};

// Checks every present form for its role (and the link through the
// derivation when all three are present). Throws InvariantViolation with the
// first failure.
void verify_roles(const QuadSympAlgebra& q);

// Result of a construction: the new algebra plus where the old basis and the
// added vectors ended up.
struct Extension {
    QuadSympAlgebra value;
    std::vector<std::size_t> base_positions;
    std::map<std::string, std::size_t> added;  // role ("e*", "e", "e0*", ...) -> index
};

// Places `duals` first and `news` last inside each parity block, keeping the
// base order in between. Labels get a shared "_k" suffix when they would
// clash with base labels.
struct ExtensionLayout {
    GradedBasis basis;
    std::vector<std::size_t> base_positions;
    std::map<std::string, std::size_t> added;
    Vec embed(const Vec& base_vector) const;
};

struct NewVector {
    std::string role;
    Parity parity;
};

ExtensionLayout extension_layout(const GradedBasis& base, const std::vector<NewVector>& duals,
                                 const std::vector<NewVector>& news);

enum class Variant { Even, Odd };

// h + h^* (even variant) or h + P(h^*) (odd variant) with the coadjoint
// action (X.f)(Z) = -(-1)^{|X||f|} f([X, Z]) and the canonical pairing.
Extension trivial_double_extension(const LieSuperalgebra& h, Variant variant);

// D~(X + f) = D(X) + D^*(f) with D^*(f)(X) = -(-1)^{|f| d} f(D X), where |f|
// is the parity of f inside the extension. Invertibility of D is required
// unless `require_invertible` is false.
LinearMap lift_derivation(const LieSuperalgebra& h, const LinearMap& d, Variant variant,
                          bool require_invertible = true);

// Finite-dimensional associative superalgebra given by its full product
// table.
struct AssocSuperalgebra {
    GradedBasis basis;
    std::vector<Vec> product;  // product[i * dim + j] = a_i a_j
    const Vec& mul(std::size_t i, std::size_t j) const { return product[i * basis.dim() + j]; }
    Vec mul(const Vec& x, const Vec& y) const;
};

Report associativity_check(const AssocSuperalgebra& a);
Report supercommutativity_check(const AssocSuperalgebra& a);

// g = h (x) A graded by A; Omega(X(x)a, Y(x)b) = omega(X, Y) B_A(a, b).
Extension tensor_odd_symmetric(const LieSuperalgebra& h, const BilinearForm& omega, const AssocSuperalgebra& a,
                               const BilinearForm& b_a);

enum class FormVariant { Odd, Even };

// gamma(X,Y) = -c [w(DX,Y) + (-1)^{|e||x|} w(X,DY)] with c = 1 for odd w and
// c = (-1)^{|e|} for even w, |e| = deg D.
BilinearForm extension_cocycle(const LieSuperalgebra& g, const BilinearForm& omega, const LinearMap& d);

Extension central_extension(const LieSuperalgebra& g, const BilinearForm& omega, const LinearMap& d,
                            FormVariant variant);

enum class Ext1Mode { Double, Generalized };

struct Ext1Data {
    LinearMap d;
    Ext1Mode mode = Ext1Mode::Double;
    std::optional<Vec> b0;  // double mode; solved for when absent
    Vec x0;                 // generalized mode
    Scalar k = 0;
};

// theta(X,Y) = s [gamma(DX,Y) + (-1)^{|e||x|} gamma(X,DY)], the form that
// must equal omega(b0, [X,Y]); s = -1 for odd omega and +1 for even omega.
BilinearForm coboundary_target(const LieSuperalgebra& g, const BilinearForm& omega, const LinearMap& d);

// The operator form w([D*((-1)^{|e||x|}D + D*) + (D + (-1)^{|e|(|x|+1)}D*)D] X, Y),
// multiplied by -(-1)^{|e|} for even omega.
BilinearForm theta_operator_form(const LieSuperalgebra& g, const BilinearForm& omega, const LinearMap& d);

// Solve omega(b0, [X,Y]) = theta(X,Y) with b0 even; free coordinates are 0.
std::optional<Vec> solve_coboundary(const LieSuperalgebra& g, const BilinearForm& omega, const BilinearForm& theta);

Extension symplectic_double_extension(const LieSuperalgebra& g, const BilinearForm& omega, const Ext1Data& data);

struct GodeData {
    LinearMap dbar;
    Vec x0;
    Scalar k = 0;
    std::optional<Vec> c1;
    std::optional<Scalar> lambda;
};

Extension gode_1d(const LieSuperalgebra& g, const BilinearForm& b, const GodeData& data);
Extension gode_1d_symplectic(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                             const GodeData& data);

struct Ext2Data {
    LinearMap d;
    LinearMap dbar;
    Vec x0;
    Vec x1;
    Scalar k = 0;
    std::optional<Vec> c0;
    std::optional<Vec> c1;
    std::optional<Scalar> lambda;
    Scalar alpha = 0;
};

// Parity of B selects the odd-quadratic or the even-quadratic variant.
Extension gde_2d(const LieSuperalgebra& g, const BilinearForm& b, const Ext2Data& data);
Extension gde_2d_symplectic(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                            const Ext2Data& data);

}  // namespace superalg
