#include "twograph/frames.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace twograph {

namespace {

void check_k(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw std::out_of_range("frame dimension k=" + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
  }
}

std::vector<Spectrum::Cluster> two_point_clusters(const Spectrum& sp) {
  const double scale = std::max(1.0, std::max(std::abs(sp.largest()), std::abs(sp.smallest())));
  return sp.clusters(1e-6 * scale);
}

std::string describe(const Spectrum& sp) {
  std::string out;
  for (const auto& c : two_point_clusters(sp)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.12g^%d", out.empty() ? "" : ", ", c.value, c.multiplicity);
    out += buf;
  }
  return "{" + out + "}";
}

FrameParams require_signature(const SeidelMatrix& s) {
  auto params = signature_check(s);
  if (!params) {
    throw std::invalid_argument("not a signature matrix: Seidel spectrum " + describe(seidel_spectrum(s)) +
                                " does not have exactly two distinct eigenvalues");
  }
  return *params;
}

}  // namespace

std::optional<FrameParams> signature_check(const SeidelMatrix& s) {
  if (s.order() < 2) return std::nullopt;
  const auto clusters = two_point_clusters(seidel_spectrum(s));
  if (clusters.size() != 2) return std::nullopt;
  FrameParams p;
  p.n = s.order();
  p.k = clusters.front().multiplicity;
  p.c = frame_constant(p.n, p.k);
  p.lambda1 = frame_least_eigenvalue(p.n, p.k);
  return p;
}

double frame_constant(int n, int k) {
  check_k(n, k);
  const double nd = n;
  return std::sqrt(static_cast<double>(k) * (n - k) / (nd * nd * (n - 1)));
}

double frame_least_eigenvalue(int n, int k) {
  check_k(n, k);
  return -std::sqrt(static_cast<double>(k) * (n - 1) / (n - k));
}

Matrix autocorrelation(const SeidelMatrix& s) {
  const FrameParams params = require_signature(s);
  return (static_cast<double>(params.k) / params.n) * Matrix::identity(params.n) +
         params.c * Matrix::from_seidel(s);
}

double projection_residual(const Matrix& p) { return (p * p - p).frobenius_norm(); }

Matrix FrameVectors::gram() const {
  Matrix g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int t = 0; t < k; ++t) s += (*this)(i, t) * (*this)(j, t);
      g(i, j) = s;
    }
  }
  return g;
}

Matrix FrameVectors::parseval() const {
  Matrix g(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += (*this)(i, a) * (*this)(i, b);
      g(a, b) = s;
    }
  }
  return g;
}

double FrameVectors::norm(int i) const {
  double s = 0.0;
  for (int t = 0; t < k; ++t) s += (*this)(i, t) * (*this)(i, t);
  return std::sqrt(s);
}

FrameVectors frame_vectors(const SeidelMatrix& s) {
  const Matrix p = autocorrelation(s);
  const FrameParams params = *signature_check(s);
  const EigenSystem es = jacobi_eigensystem(p);
  FrameVectors v;
  v.n = params.n;
  v.k = params.k;
  v.rows.resize(static_cast<std::size_t>(v.n * v.k));
  // eigenvalues are descending, so the first k columns span the range of P
  for (int i = 0; i < v.n; ++i) {
    for (int j = 0; j < v.k; ++j) v.rows[static_cast<std::size_t>(i * v.k + j)] = es.vectors(i, j);
  }
  return v;
}

double frame_error_norm(const SeidelMatrix& s, int m, const NormSpec& spec, int threads) {
  const FrameParams params = require_signature(s);
  const Graph g = graph_of_seidel(s);
  const double diag = static_cast<double>(params.k) / params.n;
  switch (spec.family) {
    case NormFamily::infinity:
      return sweep_shifted_blocks(g, m, diag, params.c, 0.0, threads).max;
    case NormFamily::one:
      return sweep_shifted_blocks(g, m, diag, params.c, 0.0, threads).mean;
    case NormFamily::p: {
      if (!(spec.p >= 1.0)) throw std::invalid_argument("norm exponent p must be >= 1");
      return sweep_shifted_blocks(g, m, diag, params.c, spec.p, threads).power_mean;
    }
  }
  throw std::logic_error("bad norm family");
}

std::vector<double> frame_error_profile(const SeidelMatrix& s, const NormSpec& spec, int threads) {
  const FrameParams params = require_signature(s);
  std::vector<double> out;
  if (spec.family != NormFamily::infinity) {
    for (int m = 1; m <= params.n; ++m) out.push_back(frame_error_norm(s, m, spec, threads));
    return out;
  }
  const double top = eigenvalues_symmetric(autocorrelation(s)).largest();
  for (int m = 1; m <= params.n; ++m) {
    if (!out.empty() && std::abs(out.back() - top) <= 1e-12) {
      out.push_back(out.back());
      continue;
    }
    out.push_back(frame_error_norm(s, m, spec, threads));
  }
  return out;
}

double frame_error_bound(const FrameParams& params, int m) {
  return static_cast<double>(params.k) / params.n + params.c * (m - 1);
}

bool least_eigenvalue_identity(const FrameParams& params, const Spectrum& spectrum, double tol) {
  return std::abs(spectrum.smallest() - params.lambda1) <= tol;
}

}  // namespace twograph
