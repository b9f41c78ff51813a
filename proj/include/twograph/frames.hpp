#pragma once

#include <optional>
#include <vector>

#include "twograph/graph.hpp"
#include "twograph/measures.hpp"
#include "twograph/spectral.hpp"

namespace twograph {

struct FrameParams {
  int n = 0;
  int k = 0;             // multiplicity of the larger Seidel eigenvalue
  double c = 0.0;        // frame constant c_{n,k}
  double lambda1 = 0.0;  // least eigenvalue -sqrt(k(n-1)/(n-k))
};

/// Params iff the Seidel spectrum has exactly two distinct values (clustered
/// with relative gap 1e-6).
std::optional<FrameParams> signature_check(const SeidelMatrix& s);

/// sqrt(k(n-k) / (n^2 (n-1))); throws unless 1 <= k <= n-1.
double frame_constant(int n, int k);

/// -sqrt(k(n-1)/(n-k)); throws unless 1 <= k <= n-1.
double frame_least_eigenvalue(int n, int k);

/// (k/n) I + c_{n,k} s. Throws std::invalid_argument (quoting the spectrum)
/// for a matrix with other than two eigenvalues.
Matrix autocorrelation(const SeidelMatrix& s);

/// ||P^2 - P||_F.
double projection_residual(const Matrix& p);

/// n x k matrix whose rows are the frame vectors: orthonormal eigenvectors of
/// P for eigenvalue 1, so V V^T = P and V^T V = I. Unique up to O(k).
struct FrameVectors {
  int n = 0;
  int k = 0;
  std::vector<double> rows;  // row-major n x k

  double operator()(int i, int j) const { return rows[static_cast<std::size_t>(i * k + j)]; }
  Matrix gram() const;        // V V^T
  Matrix parseval() const;    // V^T V
  double norm(int i) const;
};

FrameVectors frame_vectors(const SeidelMatrix& s);

/// Max (infinity) or l^p average of lambda_max over principal m x m blocks of
/// P. NormFamily::one is the p = 1 average.
double frame_error_norm(const SeidelMatrix& s, int m, const NormSpec& spec, int threads = 1);

/// Errors for m = 1..n. For the infinity family, once the sweep reaches
/// lambda_max(P) the remaining entries equal it: blocks only grow with m and
/// never exceed lambda_max(P).
std::vector<double> frame_error_profile(const SeidelMatrix& s, const NormSpec& spec, int threads = 1);

/// k/n + c_{n,k} (m-1).
double frame_error_bound(const FrameParams& params, int m);

/// Whether the spectrum's minimum equals the least-eigenvalue formula within tol.
bool least_eigenvalue_identity(const FrameParams& params, const Spectrum& spectrum, double tol = 1e-8);

}  // namespace twograph
