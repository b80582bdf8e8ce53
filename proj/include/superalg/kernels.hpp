#pragma once

#include "superalg/core.hpp"

// Exhaustive identity checks over basis tuples. Each check has a serial
// reference and an OpenMP version; both return the lexicographically first
// violating tuple, so their reports are identical.
namespace superalg::kernels {

// (-1)^{|x||z|}[X,[Y,Z]] + (-1)^{|x||y|}[Y,[Z,X]] + (-1)^{|y||z|}[Z,[X,Y]] on i <= j <= k.
Report jacobi(const LieSuperalgebra& g, Exec exec);

// beta([X,Y],Z) = beta(X,[Y,Z]) on all triples, no Koszul signs.
Report invariance(const LieSuperalgebra& g, const Matrix& beta, Exec exec);

// (-1)^{|z||x|}w(X,[Y,Z]) + (-1)^{|x||y|}w(Y,[Z,X]) + (-1)^{|y||z|}w(Z,[X,Y]) on all triples.
Report cocycle(const LieSuperalgebra& g, const Matrix& omega, Exec exec);

// D[X,Y] = [DX,Y] + (-1)^{d|x|}[X,DY] on i <= j.
Report derivation(const LieSuperalgebra& g, const Matrix& d_matrix, int degree, Exec exec);

// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace superalg::kernels
