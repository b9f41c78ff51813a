#pragma once

#include <span>
#include <vector>

#include "twograph/graph.hpp"

namespace twograph {

inline constexpr double kDefaultSpectrumTol = 1e-8;

/// Dense square matrix of doubles, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n, double fill = 0.0)
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

  static Matrix identity(int n);
  static Matrix from_seidel(const SeidelMatrix& s);

  int order() const { return n_; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }
  std::span<const double> data() const { return data_; }

  double trace() const;
  double frobenius_norm() const;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix transpose(const Matrix& a);

/// Descending eigenvalues with the tolerance used for comparisons.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts the values descending.
  explicit Spectrum(std::vector<double> values, double tol = kDefaultSpectrumTol);

  const std::vector<double>& values() const { return values_; }
  double tol() const { return tol_; }
  int size() const { return static_cast<int>(values_.size()); }
  double largest() const { return values_.front(); }
  double smallest() const { return values_.back(); }
  double sum() const;

  struct Cluster {
    double value;      // mean of the members
    int multiplicity;
  };
  /// Groups consecutive values whose gap is at most gap (default: tol).
  std::vector<Cluster> clusters(double gap = -1.0) const;

  /// Entrywise agreement within tol (the larger of the two tolerances).
  bool approx_equal(const Spectrum& other) const;

 private:
  std::vector<double> values_;
  double tol_ = kDefaultSpectrumTol;
};

struct EigenSystem {
  std::vector<double> values;    // descending
  Matrix vectors;                // column k is the unit eigenvector for values[k]
  double off_diagonal_residual;  // Frobenius norm of the off-diagonal part at exit
  int sweeps;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-13 * max(1, ||m||_F), or 64 sweeps. Rejects asymmetry beyond 1e-12.
EigenSystem jacobi_eigensystem(const Matrix& m);
Spectrum eigenvalues_symmetric(const Matrix& m, double tol = kDefaultSpectrumTol);

/// Largest eigenvalue of a symmetric m x m matrix given row-major in `a`
/// (overwritten). Householder tridiagonalization then Sturm-count bisection.
double largest_eigenvalue_inplace(std::span<double> a, int m);

Spectrum seidel_spectrum(const Graph& g, double tol = kDefaultSpectrumTol);
Spectrum seidel_spectrum(const SeidelMatrix& s, double tol = kDefaultSpectrumTol);
double least_seidel_eigenvalue(const Graph& g);
/// Operator norm (largest absolute eigenvalue) of the Seidel matrix.
double seidel_operator_norm(const Graph& g);
bool is_seidel_cospectral(const Graph& g, const Graph& h, double tol = kDefaultSpectrumTol);

/// parent_i >= child_i >= parent_{i+1} within tol. Throws unless
/// child.size() == parent.size() - 1.
bool check_interlacing(const Spectrum& parent, const Spectrum& child, double tol = kDefaultSpectrumTol);

/// min eigenvalue of I + c*s >= -tol. Throws for c <= 0.
bool is_psd_shifted(const SeidelMatrix& s, double c, double tol = kDefaultSpectrumTol);

}  // namespace twograph
