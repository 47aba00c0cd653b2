#include "dcsit/subspace.hpp"

#include <algorithm>
#include <cmath>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace dcsit {

namespace {

void check_finite(const Matrix& m) {
  if (!m.allFinite()) throw std::invalid_argument("matrix has NaN/Inf entries");
}

double inclusion_threshold(Tolerance tol, Index ambient, double row_norm) {
  return tol.rel_eps * std::sqrt(static_cast<double>(std::max<Index>(ambient, 1))) *
         std::max(1.0, row_norm);
}

}  // namespace

SvdResult svd_decompose(const Matrix& m, bool want_u, bool want_v) {
  check_finite(m);
  SvdResult r;
  const Index rows = m.rows(), cols = m.cols();
  const Index k = std::min(rows, cols);
  if (rows == 0 || cols == 0) {
    r.sigma = Eigen::VectorXd::Zero(0);
    r.u = Matrix::Identity(rows, rows);
    r.vh = Matrix::Identity(cols, cols);
    return r;
  }
  r.sigma.resize(k);
  Matrix work = m;  // zgesdd destroys its input
  char job = 'N';
  if (want_u || want_v) {
    // Full factors: null spaces need the trailing singular vectors.
    job = 'A';
    r.u.resize(rows, rows);
    r.vh.resize(cols, cols);
  }
  const int info = LAPACKE_zgesdd(
      LAPACK_COL_MAJOR, job, static_cast<int>(rows), static_cast<int>(cols), work.data(),
      static_cast<int>(rows), r.sigma.data(), job == 'N' ? nullptr : r.u.data(),
      static_cast<int>(rows), job == 'N' ? nullptr : r.vh.data(), static_cast<int>(cols));
  if (info != 0) throw std::runtime_error("zgesdd failed, info=" + std::to_string(info));
  return r;
}

Index rank_with_tol(const Eigen::VectorXd& sigma, Index rows, Index cols, Tolerance tol) {
  if (sigma.size() == 0) return 0;
  const double cutoff = tol.rel_eps * sigma(0) * static_cast<double>(std::max(rows, cols));
  Index r = 0;
  while (r < sigma.size() && sigma(r) > cutoff) ++r;
  return r;
}

Index rank_tol(const Matrix& m, Tolerance tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const SvdResult s = svd_decompose(m, false, false);
  return rank_with_tol(s.sigma, m.rows(), m.cols(), tol);
}

Subspace row_space(const Matrix& m, Tolerance tol) {
  Subspace s;
  s.ambient_dim = m.cols();
  if (m.rows() == 0) {
    s.basis = Matrix::Zero(0, m.cols());
    return s;
  }
  const SvdResult f = svd_decompose(m, false, true);
  s.dim = rank_with_tol(f.sigma, m.rows(), m.cols(), tol);
  s.basis = f.vh.topRows(s.dim);
  return s;
}

Subspace null_space(const Matrix& m, Tolerance tol) {
  Subspace s;
  s.ambient_dim = m.cols();
  if (m.rows() == 0 || m.cols() == 0) return Subspace::full(m.cols());
  const SvdResult f = svd_decompose(m, false, true);
  const Index r = rank_with_tol(f.sigma, m.rows(), m.cols(), tol);
  // Kernel vectors are the trailing right singular vectors v_i; as row vectors
  // that is V^T, i.e. the conjugate of the V^H rows.
  s.dim = m.cols() - r;
  s.basis = f.vh.bottomRows(s.dim).conjugate();
  return s;
}

Subspace left_null_space(const Matrix& m, Tolerance tol) {
  return null_space(m.transpose(), tol);
}

Subspace sum(const std::vector<Subspace>& spaces, Tolerance tol) {
  if (spaces.empty()) throw std::invalid_argument("sum: empty list");
  const Index ambient = spaces.front().ambient_dim;
  std::vector<Matrix> bases;
  for (const Subspace& s : spaces) {
    if (s.ambient_dim != ambient)
      throw DimensionMismatchError("sum: mismatched ambient dimensions");
    bases.push_back(s.basis);
  }
  return row_space(vstack(bases), tol);
}

Subspace intersect(const std::vector<Subspace>& spaces, Tolerance tol) {
  if (spaces.empty()) throw std::invalid_argument("intersect: empty list");
  const Index ambient = spaces.front().ambient_dim;
  std::vector<Subspace> complements;
  complements.reserve(spaces.size());
  for (const Subspace& s : spaces) {
    if (s.ambient_dim != ambient)
      throw DimensionMismatchError("intersect: mismatched ambient dimensions");
    complements.push_back(null_space(s.basis, tol));
  }
  return null_space(sum(complements, tol).basis, tol);
}

bool contains_rows(const Subspace& outer, const Matrix& rows, Tolerance tol) {
  if (outer.ambient_dim != rows.cols())
    throw DimensionMismatchError("contains: mismatched ambient dimensions");
  if (rows.rows() == 0) return true;
  if (outer.dim == 0) return rows.norm() <= inclusion_threshold(tol, rows.cols(), 1.0);
  // Projection onto the span of outer's rows: y - y B^H B with B orthonormal.
  const Matrix residual = rows - (rows * outer.basis.adjoint()) * outer.basis;
  for (Index i = 0; i < rows.rows(); ++i) {
    if (residual.row(i).norm() > inclusion_threshold(tol, rows.cols(), rows.row(i).norm()))
      return false;
  }
  return true;
}

bool contains(const Subspace& outer, const Subspace& inner, Tolerance tol) {
  return contains_rows(outer, inner.basis, tol);
}

double max_principal_angle(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw DimensionMismatchError("principal angle: mismatched ambient dimensions");
  if (a.dim != b.dim) return M_PI / 2.0;
  if (a.dim == 0) return 0.0;
  const SvdResult f = svd_decompose(a.basis * b.basis.adjoint(), false, false);
  const double c = std::clamp(f.sigma(f.sigma.size() - 1), 0.0, 1.0);
  return std::acos(c);
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  Index rows = 0;
  const Index cols = blocks.empty() ? 0 : blocks.front().cols();
  for (const Matrix& b : blocks) {
    if (b.cols() != cols) throw DimensionMismatchError("vstack: column mismatch");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  Index at = 0;
  for (const Matrix& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  Index cols = 0;
  const Index rows = blocks.empty() ? 0 : blocks.front().rows();
  for (const Matrix& b : blocks) {
    if (b.rows() != rows) throw DimensionMismatchError("hstack: row mismatch");
    cols += b.cols();
  }
  Matrix out(rows, cols);
  Index at = 0;
  for (const Matrix& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  Index rows = 0, cols = 0;
  for (const Matrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out = Matrix::Zero(rows, cols);
  Index r = 0, c = 0;
  for (const Matrix& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace dcsit
