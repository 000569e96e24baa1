#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rso/graph.hpp"
#include "rso/rational.hpp"

namespace rso {

// All quantities here are evaluated in log2 space with doubles; binomial
// coefficients go through lgamma, which also provides the real extension.

double log2_binomial(double n, double k);

/// (1 + 4 a log2 n) / (a n^a log2 n): the failure probability bound of the
/// random-orientation theorem.
double failure_bound(std::uint64_t n, double alpha);

enum class PhiRoute { exact_phi, spectral };

struct HypothesisReport {
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  double phi = 0.0;                  // exact Phi, or lambda1/2 on the spectral route
  std::optional<Rational> phi_exact; // exact route only
  double lambda1 = 0.0;              // spectral route only
  double alpha = 0.0;
  double xi = 0.0;
  double degree_threshold = 0.0;     // (1 + alpha) log2 n
  double cheeger_threshold = 0.0;    // xi log2 log2 n / log2 n
  bool degree_ok = false;
  bool cheeger_ok = false;
  bool spectral_route = false;
  bool connected = true;
  double failure_bound = 0.0;
  /// Both hypotheses hold. This never certifies the probability bound:
  /// the theorem also needs n >= N0(alpha, xi), which is not explicit.
  bool hypotheses_met = false;
  std::string caveat;
};

/// Requires alpha > 0, xi > 4 and n >= 5 (so that log2 log2 n > 1).
HypothesisReport check_hypotheses(const Graph& g, double alpha, double xi, PhiRoute route);

struct RegimeOneTerm {
  std::uint64_t k = 0;
  double log2_value = 0.0;
  double value = 0.0;
  std::optional<bool> in_regime;  // k <= (alpha/2) log2 n, when alpha is given
};

/// b_k = C(n,k) 2^{-delta k + C(k,2) + 1}.
RegimeOneTerm regime1_bk(std::uint64_t n, std::uint64_t delta, std::uint64_t k,
                         std::optional<double> alpha = std::nullopt);
/// b_{k+1}/b_k = (n-k) 2^k / ((k+1) 2^delta).
double regime1_ratio(std::uint64_t n, std::uint64_t delta, std::uint64_t k);

/// kappa_{s,t} = C(s,t) 2^{1 - phi s}, with C extended to real s.
double kappa(double s, std::uint64_t t, double phi);
double log2_kappa(double s, std::uint64_t t, double phi);
/// floor(t / (1 - 2^{-phi})): the peak of kappa_{s,t} over s.
std::uint64_t s_max(std::uint64_t t, double phi);

double binary_entropy(double q);
/// 2^{n H(k/n)}, which dominates C(n, k).
double entropy_binomial_bound(double n, double k);

struct FBound {
  double f = 0.0;      // -log2(1 - 2^{-x})
  double bound = 0.0;  // 1 - log2 x
  double slack = 0.0;  // bound - f
};
FBound f_bound_check(double x);

/// log2 of the per-vertex collapse bound for a vertex with pi_j children.
double case_bound_log2(std::uint64_t pi_j, double phi, double alpha, std::uint64_t n);

/// 2^{-(log2 k + 2k + 2)}; k must be at least (alpha/2) log2 n.
double regime2_per_k(std::uint64_t n, double alpha, std::uint64_t k);

struct Regime2Tail {
  double closed_form = 0.0;  // 1 / (alpha n^alpha log2 n)
  double numeric_sum = 0.0;  // sum of regime2_per_k over k in [k_start, n]
  std::uint64_t k_start = 0;
  bool holds = false;        // numeric_sum <= closed_form
};
Regime2Tail regime2_tail(std::uint64_t n, double alpha);

/// Numeric audit of the Regime-2 inequality chain for concrete (n, alpha,
/// xi, phi). Every step is linear in k, so each flag is checked per unit k.
/// The chain only goes through for large n; failing steps are reported,
/// not asserted.
struct Regime2Chain {
  double xi = 0.0;
  bool phi_hypothesis = false;  // phi > xi log2log2 n / log2 n
  bool case3_premise = false;   // (1+alpha) log2 n > 1/(1 - 2^{-phi})
  bool lemma_step = false;      // exponent after the combinatorial lemma <= xi form
  bool xi_step = false;         // xi form <= k log2log2 n (1 - 2(1+alpha))
  bool log_step = false;        // alpha log2log2 n / 2 >= 1
  bool final_step = false;      // n c_{k-1} 2^{-(2/alpha+4)k} <= 2^{-(log2 k+2k+2)} at k_start
  bool all() const noexcept {
    return phi_hypothesis && case3_premise && lemma_step && xi_step && log_step && final_step;
  }
};
Regime2Chain regime2_chain(std::uint64_t n, double alpha, double xi, double phi);

struct BoundTable {
  std::uint64_t n = 0;
  double alpha = 0.0;
  std::uint64_t delta = 0;
  double phi = 0.0;
  std::vector<RegimeOneTerm> regime1;
  double regime1_sum = 0.0;
  double regime1_claim = 0.0;  // 4 n^{-alpha}
  std::vector<std::pair<std::uint64_t, double>> regime2;  // listed until terms are negligible
  double regime2_sum = 0.0;    // over the full range [k_start, n]
  double regime2_claim = 0.0;  // 1 / (alpha n^alpha log2 n)
  double total = 0.0;          // regime1_sum + regime2_sum
  double failure_bound = 0.0;
  Regime2Chain chain;
};

BoundTable bounds_table(std::uint64_t n, double alpha, std::uint64_t delta, double phi,
                        double xi = 4.5);

}  // namespace rso
