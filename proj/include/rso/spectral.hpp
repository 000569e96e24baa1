#pragma once

#include <cstddef>
#include <vector>

#include "rso/graph.hpp"
#include "rso/rational.hpp"

namespace rso {

inline constexpr std::size_t kDenseSpectrumMaxN = 2048;

/// Dense row-major square matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t n() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j pairs with values[j]
  int sweeps = 0;
  double off_diagonal = 0.0;   // final off-diagonal Frobenius norm
};

/// Cyclic Jacobi eigensolver for symmetric matrices. Stops once the
/// off-diagonal Frobenius norm drops below 1e-12; throws NumericError
/// after 100 sweeps without convergence.
EigenDecomposition symmetric_eigen(const DenseMatrix& a);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // ascending, unclamped
  double lambda1 = 0.0;
  double lambda_max = 0.0;
  double sigma = 0.0;  // max_{i>=1} |1 - lambda_i|
};

/// I - D^{-1/2} A D^{-1/2}. Throws DomainError on an isolated vertex.
DenseMatrix normalized_laplacian(const Graph& g);

SpectrumReport spectrum(const Graph& g);

struct CheegerInequalityReport {
  Rational phi;
  double lambda1 = 0.0;
  double left_slack = 0.0;   // 2*phi - lambda1
  double right_slack = 0.0;  // lambda1 - phi^2/2
  bool holds(double tol = 1e-9) const noexcept {
    return left_slack >= -tol && right_slack >= -tol;
  }
};

CheegerInequalityReport check_cheeger_inequality(const Graph& g);

struct ExpansionBoundReport {
  std::uint64_t e_cut = 0;
  double bound = 0.0;  // (lambda1 / 2) * vol(x)
  double slack = 0.0;
};

/// e(X, X^c) >= (lambda1/2) vol(X) for vol(X) <= vol(G)/2.
ExpansionBoundReport edge_expansion_bound_check(const Graph& g, const VertexSubset& x);
/// Same, reusing a precomputed lambda1.
ExpansionBoundReport edge_expansion_bound_check(const Graph& g, const VertexSubset& x,
                                                double lambda1);

}  // namespace rso
