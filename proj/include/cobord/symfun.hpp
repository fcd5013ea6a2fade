#pragma once

#include "cobord/partition.hpp"
#include "cobord/poly.hpp"

namespace cobord {

// Classical symmetric-function routes, independent of the formal-group-law
// machinery; these are the oracles the cobordism functions are checked
// against under specialization.

// Complete/elementary symmetric polynomials in the variables var_idx of the
// space; h_m = 0 for m < 0, e_i = 0 outside 0..#vars.
Poly complete_h(const PolySpace& sp, const std::vector<int>& var_idx, int m);
Poly elementary_e(const PolySpace& sp, const std::vector<int>& var_idx, int i);

// h_m in the squares of the selected variables.
Poly complete_h_squares(const PolySpace& sp, const std::vector<int>& var_idx, int m);

// Schur polynomial s_I(x_1..x_n).  The Jacobi-Trudi determinant
// det(h_{I_i + j - i}) defines the value for arbitrary nonnegative index
// vectors (straightening happens inside the determinant); the bialternant
// quotient is the independent second route for partitions.
Poly schur_jt(const PolySpace& sp, const IndexVec& I, int n);
Poly schur_bialternant(const PolySpace& sp, const IndexVec& lambda, int n);

// Grassmann Grothendieck polynomial via set-valued tableaux: sum over
// semistandard set-valued tableaux of shape lambda with entries in {1..n}
// of (-beta)^{|T| - |lambda|} x^{content}.  The ring must carry `beta`.
Poly grothendieck_svt(const PolySpace& sp, const IndexVec& lambda, int n);

// Quadratic Schur determinant det(s_{I_i + 2(j-i)}) over the Segre classes
// of a rank-2n symplectic bundle: s_{2k} = h_k(y^2), odd classes vanish.
Poly quadratic_schur_det(const PolySpace& sp, const IndexVec& I, int n);

// Determinant of a square matrix of polynomials (Laplace over
// permutations; the matrices here stay small).
Poly poly_det(const PolySpace& sp, const std::vector<std::vector<Poly>>& m);

} // namespace cobord
