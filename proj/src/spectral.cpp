#include "twograph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace twograph {

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_seidel(const SeidelMatrix& s) {
  Matrix m(s.order());
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) m(i, j) = s(i, j);
  }
  return m;
}

double Matrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("matrix size mismatch");
  const int n = a.order();
  Matrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

namespace {

Matrix combine(const Matrix& a, const Matrix& b, double sign) {
  if (a.order() != b.order()) throw std::invalid_argument("matrix size mismatch");
  Matrix c(a.order());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) c(i, j) = a(i, j) + sign * b(i, j);
  }
  return c;
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, 1.0); }
Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, -1.0); }

Matrix operator*(double s, const Matrix& a) {
  Matrix c(a.order());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) c(i, j) = s * a(i, j);
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.order());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

Spectrum::Spectrum(std::vector<double> values, double tol) : values_(std::move(values)), tol_(tol) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

std::vector<Spectrum::Cluster> Spectrum::clusters(double gap) const {
  if (gap < 0.0) gap = tol_;
  std::vector<Cluster> out;
  std::size_t i = 0;
  while (i < values_.size()) {
    std::size_t j = i + 1;
    double total = values_[i];
    while (j < values_.size() && values_[j - 1] - values_[j] <= gap) total += values_[j++];
    out.push_back({total / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

bool Spectrum::approx_equal(const Spectrum& other) const {
  if (values_.size() != other.values_.size()) return false;
  const double tol = std::max(tol_, other.tol_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (std::abs(values_[i] - other.values_[i]) > tol) return false;
  }
  return true;
}

EigenSystem jacobi_eigensystem(const Matrix& input) {
  const int n = input.order();
  const double scale = std::max(1.0, input.frobenius_norm());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(input(i, j) - input(j, i)) > 1e-12) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
      }
    }
  }
  Matrix a = input;
  Matrix v = Matrix::identity(n);
  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) s += a(i, j) * a(i, j);
      }
    }
    return std::sqrt(s);
  };

  const double threshold = 1e-13 * scale;
  int sweeps = 0;
  double off = off_norm();
  while (off > threshold && sweeps < 64) {
    ++sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // rotation angle from the classic symmetric Schur decomposition
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = off_norm();
  }

  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

  EigenSystem out{{}, Matrix(n), off, sweeps};
  out.values.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int src = idx[static_cast<std::size_t>(k)];
    out.values.push_back(a(src, src));
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, src);
  }
  return out;
}

Spectrum eigenvalues_symmetric(const Matrix& m, double tol) {
  return Spectrum(jacobi_eigensystem(m).values, tol);
}

double largest_eigenvalue_inplace(std::span<double> a, int m) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * m + j)]; };
  if (m == 1) return a[0];

  // Householder reduction to tridiagonal form (diag d, off-diagonal e).
  std::array<double, kMaxVertices> d{};
  std::array<double, kMaxVertices> e{};
  std::array<double, kMaxVertices> u{};
  std::array<double, kMaxVertices> p{};
  for (int k = 0; k < m - 2; ++k) {
    double alpha = 0.0;
    for (int i = k + 1; i < m; ++i) alpha += at(i, k) * at(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) {
      e[static_cast<std::size_t>(k)] = 0.0;
      continue;
    }
    const double x0 = at(k + 1, k);
    const double sign_alpha = x0 >= 0.0 ? -alpha : alpha;
    e[static_cast<std::size_t>(k)] = sign_alpha;
    // u = x - sign_alpha * e1, H = I - 2uu^T/(u^T u)
    double unorm2 = 0.0;
    for (int i = k + 1; i < m; ++i) {
      u[static_cast<std::size_t>(i)] = at(i, k);
    }
    u[static_cast<std::size_t>(k + 1)] -= sign_alpha;
    for (int i = k + 1; i < m; ++i) unorm2 += u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
    if (unorm2 == 0.0) continue;
    const double beta = 2.0 / unorm2;
    // p = beta * A u on the trailing block
    double up = 0.0;
    for (int i = k + 1; i < m; ++i) {
      double s = 0.0;
      for (int j = k + 1; j < m; ++j) s += at(i, j) * u[static_cast<std::size_t>(j)];
      p[static_cast<std::size_t>(i)] = beta * s;
      up += u[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)];
    }
    const double kfac = 0.5 * beta * up;
    // w = p - kfac * u; A <- A - u w^T - w u^T
    for (int i = k + 1; i < m; ++i) p[static_cast<std::size_t>(i)] -= kfac * u[static_cast<std::size_t>(i)];
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) {
        at(i, j) -= u[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)] +
                    p[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j)];
      }
    }
  }
  for (int i = 0; i < m; ++i) d[static_cast<std::size_t>(i)] = at(i, i);
  e[static_cast<std::size_t>(m - 2)] = at(m - 1, m - 2);

  // Gershgorin bounds on the tridiagonal matrix.
  double lo = d[0];
  double hi = d[0];
  for (int i = 0; i < m; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(e[static_cast<std::size_t>(i - 1)]);
    if (i < m - 1) r += std::abs(e[static_cast<std::size_t>(i)]);
    lo = std::min(lo, d[static_cast<std::size_t>(i)] - r);
    hi = std::max(hi, d[static_cast<std::size_t>(i)] + r);
  }
  // Number of eigenvalues strictly below x (Sturm sequence of LDL^T pivots).
  auto count_below = [&](double x) {
    int count = 0;
    double q = d[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < m; ++i) {
      const double ei = e[static_cast<std::size_t>(i - 1)];
      if (q == 0.0) q = 1e-300;
      q = d[static_cast<std::size_t>(i)] - x - ei * ei / q;
      if (q < 0.0) ++count;
    }
    return count;
  };
  // Largest eigenvalue: smallest x with count_below(x) == m.
  for (int iter = 0; iter < 200 && hi - lo > 4e-16 * std::max(1.0, std::abs(hi)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(mid) == m) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Spectrum seidel_spectrum(const SeidelMatrix& s, double tol) {
  return eigenvalues_symmetric(Matrix::from_seidel(s), tol);
}

Spectrum seidel_spectrum(const Graph& g, double tol) { return seidel_spectrum(seidel_matrix(g), tol); }

double least_seidel_eigenvalue(const Graph& g) { return seidel_spectrum(g).smallest(); }

double seidel_operator_norm(const Graph& g) {
  const Spectrum sp = seidel_spectrum(g);
  return std::max(std::abs(sp.largest()), std::abs(sp.smallest()));
}

bool is_seidel_cospectral(const Graph& g, const Graph& h, double tol) {
  if (g.order() != h.order()) return false;
  return seidel_spectrum(g, tol).approx_equal(seidel_spectrum(h, tol));
}

bool check_interlacing(const Spectrum& parent, const Spectrum& child, double tol) {
  if (child.size() != parent.size() - 1) {
    throw std::invalid_argument("interlacing needs child length = parent length - 1 (got " +
                                std::to_string(child.size()) + " and " + std::to_string(parent.size()) + ")");
  }
  const auto& lam = parent.values();
  const auto& mu = child.values();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] > lam[i] + tol || mu[i] < lam[i + 1] - tol) return false;
  }
  return true;
}

bool is_psd_shifted(const SeidelMatrix& s, double c, double tol) {
  if (!(c > 0.0)) throw std::invalid_argument("shift constant must be positive");
  Matrix m = Matrix::identity(s.order()) + c * Matrix::from_seidel(s);
  return eigenvalues_symmetric(m).smallest() >= -tol;
}

}  // namespace twograph
