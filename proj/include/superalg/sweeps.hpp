#pragma once

#include "superalg/manin.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace superalg::sweeps {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// A sampled structure. `a` and `b` carry a special Manin pair when the
// sample feeds a Manin construction and are empty otherwise.
struct Sample {
    QuadSympAlgebra value;
    Subspace a;
    Subspace b;
};

enum class Op {
    SymplecticOdd,   // symplectic_double_extension, odd omega
    SymplecticEven,  // symplectic_double_extension, even omega (both modes)
    Gode1d,          // gode_1d_symplectic
    Gde2dOdd,        // gde_2d_symplectic with odd B
    Gde2dEven,       // gde_2d_symplectic with even B
    ManinOddOdd1d,
    ManinOddEven2d,
    ManinEvenOdd2d,
};

std::string to_string(Op op);
std::optional<Op> parse_op(const std::string& name);
std::vector<Op> all_ops();

// Small integers in [-2, 2], nonzero scalars in {+-1, +-2, +-1/2}.
Scalar random_scalar(Rng& rng);
Scalar random_nonzero(Rng& rng);
// Random integer combination of the given vectors (zero vector of length n
// when the list is empty).
Vec random_combination(const std::vector<Vec>& span, std::size_t n, Rng& rng);

// Parameter generators. Each returns nullopt when no candidate satisfying
// the displayed conditions was found within a few draws. Candidates come
// from inner derivations (which satisfy the conditions identically) mixed
// with random elements of the derivation space filtered by the conditions.
// With `nilpotent_maps` the derivation is required to be nilpotent.
std::optional<Ext1Data> random_ext1(const LieSuperalgebra& g, const BilinearForm& omega, Rng& rng,
                                    bool nilpotent_maps = false);
// With `pair`, every parameter lives in pair->b (Manin recipes).
std::optional<GodeData> random_gode(const QuadSympAlgebra& q, Rng& rng, const Sample* pair = nullptr);
std::optional<Ext2Data> random_ext2(const QuadSympAlgebra& q, Rng& rng, const Sample* pair = nullptr);

// Starting structures of total dimension at most 8 for an op.
std::vector<Sample> seed_pool(Op op);

struct Outcome {
    std::size_t attempts = 0;  // draws including rejected parameter sets
    std::size_t accepted = 0;  // constructions actually performed
    std::size_t passed = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty() && passed == accepted; }
};

// `count` random constructions of `op`, each followed by the matching split
// and an exact rebuild. `visit` sees every constructed structure.
Outcome round_trip_sweep(Op op, std::size_t count, std::uint64_t seed,
                         const std::function<void(const QuadSympAlgebra&)>& visit = {});

// Builds algebras from the atoms {0} and (0|1) by 1 to 3 random symplectic
// double extensions with nilpotent derivations, then checks nilpotency and
// that iterated split_symplectic returns to an atom within 3 steps.
Outcome nilpotent_sweep(std::size_t count, std::uint64_t seed);

// Atoms: the zero algebra (odd or even omega) and (0|1) with omega = [1].
QuadSympAlgebra zero_atom(Parity omega_parity);
QuadSympAlgebra odd_line_atom();

}  // namespace superalg::sweeps
