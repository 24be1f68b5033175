#pragma once

#include <vector>

#include "extshift/kernels.hpp"

namespace extshift {

enum class OperatorKind { Forward, Backward };

// Matrix of S_B (forward) or S_B* (backward). Column k holds the coordinates
// of the image of basis vector k in the same basis.
struct ShiftMatrix {
  Matrix entries;
  BasisKind basis = BasisKind::Dual;
  OperatorKind op = OperatorKind::Forward;
};

// S_B* in the primal kernel basis, from S* e_{i,l} = l e_{i,l-1} + conj(alpha_i) e_{i,l}.
// Block upper bidiagonal; every entry outside the pattern is exactly zero.
ShiftMatrix backward_shift_matrix(const ModelSpaceBasis& basis);

// S_B in the dual kernel basis, from S e*_{i,l} = alpha_i e*_{i,l} + (l+1) e*_{i,l+1}.
// Block lower bidiagonal; every entry outside the pattern is exactly zero.
ShiftMatrix shift_matrix_dual(const ModelSpaceBasis& basis);

// S_B in the primal basis by change of basis T M T^{-1}, T = C^T, T^{-1} = G.
ShiftMatrix shift_matrix_primal(const ModelSpace& space);

// S_B* in the dual basis, G M* C^T.
ShiftMatrix backward_shift_dual(const ModelSpace& space);

// Any of the four (basis, operator) combinations.
ShiftMatrix shift_matrix(const ModelSpace& space, BasisKind basis, OperatorKind op);

// dim ker (S_B - alpha_i I)^k for k = 1 .. p_i + 1, on the dual-basis matrix.
// Uses the staircase reduction: dim ker A^k = dim ker A + dim ker A'^{k-1},
// where A' is the compression of A to (ker A)^perp. Each step decides a
// nullity from singular values with cutoff rel_tol * ||A||_2 and throws
// Error(RankAmbiguous) inside the ambiguity band.
std::vector<int> jordan_kernel_dims(const ModelSpaceBasis& basis, std::size_t zero_index,
                                    double rel_tol = 1e-10, double ambiguity = 100.0);

}  // namespace extshift
