#pragma once

#include "superalg/constructions.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superalg {

struct CatalogEntry {
    std::string name;
    std::optional<int> n;  // size parameter of A_n and h_tensor_A_n
    QuadSympAlgebra value;
    std::map<std::string, BilinearForm> forms;  // every named form, including those in `value`
    std::map<std::string, LinearMap> maps;      // maps over the algebra's basis
    std::optional<AssocSuperalgebra> associative;
    // Predicates such as "jacobi", "nilpotent", "quadratic:B",
    // "symplectic:omega", "derivation:D", "invertible:D", "skew:D:B",
    // "associative", "supercommutative".
    std::vector<std::string> expected_properties;
};

std::vector<std::string> catalog_names();

// `n` is required for "A_n" and "h_tensor_A_n" and rejected elsewhere.
CatalogEntry build_catalog(const std::string& name, std::optional<int> n = std::nullopt);

// Evaluates one predicate name against an entry.
Report check_property(const CatalogEntry& entry, const std::string& property);

namespace catalog {

// l0, k0 | l1, k1 with [l0, l1] = k1 and [l1, l1] = k0.
LieSuperalgebra L();
LinearMap L_D();      // D(l_i) = l_i, D(k_i) = 2 k_i
LinearMap L_Delta();  // odd: l0 <-> l1, k0 -> 2 k1, k1 -> k0
LinearMap L_Dbar();   // odd: l1 -> l0, k0 -> 2 k1, l0, k1 -> 0

// e1..en | f1..fn with e_i e_j = e_{i+j}, e_i f_j = f_{i+j} (i + j <= n).
AssocSuperalgebra A(int n);
BilinearForm A_pairing(int n);  // B(e_i, f_j) = delta_{i+j, n+1}

// Two-dimensional Lie algebra x, y with [x, y] = y and omega(x, y) = 1.
LieSuperalgebra h2();
BilinearForm h2_omega();

}  // namespace catalog

}  // namespace superalg
