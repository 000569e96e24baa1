#include "rso/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rso/errors.hpp"

namespace rso {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffTolerance = 1e-12;

double off_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition symmetric_eigen(const DenseMatrix& input) {
  const std::size_t n = input.n();
  DenseMatrix a = input;
  DenseMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  EigenDecomposition out;
  double off = off_norm(a);
  int sweep = 0;
  while (off >= kOffTolerance) {
    if (sweep == kMaxSweeps) {
      throw NumericError("Jacobi eigensolver did not converge in " +
                             std::to_string(kMaxSweeps) + " sweeps",
                         off);
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = off_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  out.values.resize(n);
  out.vectors = DenseMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
  }
  out.sweeps = sweep;
  out.off_diagonal = off;
  return out;
}

DenseMatrix normalized_laplacian(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<double> inv_sqrt(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      throw DomainError("normalized Laplacian undefined: vertex " + std::to_string(v) +
                        " is isolated");
    }
    inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  DenseMatrix l(n);
  for (std::size_t i = 0; i < n; ++i) l(i, i) = 1.0;
  for (const auto& e : g.edges()) {
    const double w = -inv_sqrt[e.u] * inv_sqrt[e.v];
    l(e.u, e.v) = w;
    l(e.v, e.u) = w;
  }
  return l;
}

SpectrumReport spectrum(const Graph& g) {
  if (g.n() > kDenseSpectrumMaxN) {
    throw SizeLimitError("n exceeds dense-spectrum guard (" +
                         std::to_string(kDenseSpectrumMaxN) + ")");
  }
  if (g.n() < 2) throw DomainError("spectrum needs at least two vertices");
  auto eig = symmetric_eigen(normalized_laplacian(g));
  SpectrumReport r;
  r.eigenvalues = std::move(eig.values);
  r.lambda1 = r.eigenvalues[1];
  r.lambda_max = r.eigenvalues.back();
  for (std::size_t i = 1; i < r.eigenvalues.size(); ++i) {
    r.sigma = std::max(r.sigma, std::abs(1.0 - r.eigenvalues[i]));
  }
  return r;
}

CheegerInequalityReport check_cheeger_inequality(const Graph& g) {
  if (!is_connected(g)) throw DomainError("Cheeger inequality check needs a connected graph");
  const auto ch = cheeger_constant_exact(g);
  const auto sp = spectrum(g);
  CheegerInequalityReport r;
  r.phi = ch.phi;
  r.lambda1 = sp.lambda1;
  const double phi = ch.phi.to_double();
  r.left_slack = 2.0 * phi - sp.lambda1;
  r.right_slack = sp.lambda1 - phi * phi / 2.0;
  return r;
}

ExpansionBoundReport edge_expansion_bound_check(const Graph& g, const VertexSubset& x,
                                                double lambda1) {
  const auto vol = volume(g, x);
  if (x.empty()) throw DomainError("subset is empty");
  if (vol > static_cast<std::uint64_t>(g.m())) {
    throw DomainError("vol(X) exceeds vol(G)/2");
  }
  ExpansionBoundReport r;
  r.e_cut = edge_boundary(g, x);
  r.bound = lambda1 / 2.0 * static_cast<double>(vol);
  r.slack = static_cast<double>(r.e_cut) - r.bound;
  return r;
}

ExpansionBoundReport edge_expansion_bound_check(const Graph& g, const VertexSubset& x) {
  return edge_expansion_bound_check(g, x, spectrum(g).lambda1);
}

}  // namespace rso
