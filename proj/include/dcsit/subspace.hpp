#pragma once

#include "dcsit/types.hpp"

#include <vector>

namespace dcsit {

/// Row-span subspace of C^ambient_dim. Basis rows are kept orthonormal, so
/// dim == basis.rows() and projections stay well conditioned.
struct Subspace {
  Index ambient_dim = 0;
  Matrix basis;  // dim x ambient_dim, orthonormal rows
  Index dim = 0;

  static Subspace zero(Index ambient) {
    Subspace s;
    s.ambient_dim = ambient;
    s.basis = Matrix::Zero(0, ambient);
    return s;
  }
  static Subspace full(Index ambient) {
    Subspace s;
    s.ambient_dim = ambient;
    s.basis = Matrix::Identity(ambient, ambient);
    s.dim = ambient;
    return s;
  }
};

/// Thin wrapper around the LAPACK divide-and-conquer SVD.
struct SvdResult {
  Eigen::VectorXd sigma;
  Matrix u;   // left singular vectors (full when requested)
  Matrix vh;  // V^H, rows are conjugated right singular vectors (full when requested)
};

SvdResult svd_decompose(const Matrix& m, bool want_u, bool want_v);

/// Singular values above rel_eps * sigma_max * max(rows, cols) count toward rank.
Index rank_with_tol(const Eigen::VectorXd& sigma, Index rows, Index cols, Tolerance tol);

Index rank_tol(const Matrix& m, Tolerance tol);

/// Orthonormal basis of the row span; dim equals rank under tol.
Subspace row_space(const Matrix& m, Tolerance tol);

/// Rows r with r * m^T == 0, i.e. the (bilinear) kernel of m.
Subspace null_space(const Matrix& m, Tolerance tol);

/// Rows u with u * m == 0.
Subspace left_null_space(const Matrix& m, Tolerance tol);

/// Intersection of row-span subspaces via complement-of-sum-of-complements.
Subspace intersect(const std::vector<Subspace>& spaces, Tolerance tol);

Subspace sum(const std::vector<Subspace>& spaces, Tolerance tol);

/// True iff every basis row of `inner` projects onto `outer` with small residual.
bool contains(const Subspace& outer, const Subspace& inner, Tolerance tol);

/// Same test for the row span of a raw matrix (rows need not be orthonormal).
bool contains_rows(const Subspace& outer, const Matrix& rows, Tolerance tol);

/// Largest principal angle between two row spans, in [0, pi/2].
double max_principal_angle(const Subspace& a, const Subspace& b);

Matrix vstack(const std::vector<Matrix>& blocks);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix block_diag(const std::vector<Matrix>& blocks);

}  // namespace dcsit
