#include "rso/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rso/errors.hpp"
#include "rso/spectral.hpp"

namespace rso {

namespace {

constexpr double kLn2 = std::numbers::ln2;
// Absorbs rounding in thresholds such as (alpha/2) log2 n that are integral
// in exact arithmetic.
constexpr double kThresholdEps = 1e-12;

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be > 0");
}

std::uint64_t regime_split(std::uint64_t n, double alpha) {
  const double thr = alpha / 2.0 * std::log2(static_cast<double>(n));
  const auto k = static_cast<std::uint64_t>(std::ceil(thr - kThresholdEps));
  return std::max<std::uint64_t>(k, 1);
}

}  // namespace

double log2_binomial(double n, double k) {
  if (k < 0 || k > n) throw DomainError("binomial needs 0 <= k <= n");
  const double small = std::min(k, n - k);
  if (n == std::floor(n) && k == std::floor(k) && small <= 256) {
    // Direct product for integer arguments; exact for C(n, 1) and close
    // to exact otherwise, unlike the lgamma differences.
    double acc = 0.0;
    for (double i = 0; i < small; ++i) acc += std::log2(n - i) - std::log2(i + 1);
    return acc;
  }
  return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / kLn2;
}

double failure_bound(std::uint64_t n, double alpha) {
  if (n < 2) throw DomainError("failure_bound needs n >= 2");
  require_alpha(alpha);
  const double lg = std::log2(static_cast<double>(n));
  return (1.0 + 4.0 * alpha * lg) / (alpha * std::pow(static_cast<double>(n), alpha) * lg);
}

HypothesisReport check_hypotheses(const Graph& g, double alpha, double xi, PhiRoute route) {
  require_alpha(alpha);
  if (!(xi > 4.0)) throw DomainError("xi must exceed 4");
  if (g.n() < 5) {
    throw DomainError("hypothesis check needs n >= 5 (log2 log2 n degenerates below)");
  }
  HypothesisReport r;
  r.n = g.n();
  r.delta = g.min_degree();
  r.alpha = alpha;
  r.xi = xi;
  const double lg = std::log2(static_cast<double>(r.n));
  r.degree_threshold = (1.0 + alpha) * lg;
  r.cheeger_threshold = xi * std::log2(lg) / lg;
  r.degree_ok = static_cast<double>(r.delta) >= r.degree_threshold;
  r.spectral_route = route == PhiRoute::spectral;
  r.connected = is_connected(g);

  if (route == PhiRoute::exact_phi) {
    const auto ch = cheeger_constant_exact(g);
    r.phi_exact = ch.phi;
    r.phi = ch.phi.to_double();
  } else {
    r.lambda1 = spectrum(g).lambda1;
    r.phi = r.lambda1 / 2.0;
  }
  r.cheeger_ok = r.connected && r.phi > r.cheeger_threshold;
  r.failure_bound = failure_bound(r.n, alpha);
  r.hypotheses_met = r.degree_ok && r.cheeger_ok;
  r.caveat =
      "N0(alpha, xi) is not explicit; satisfied hypotheses do not certify the "
      "failure bound at this n";
  return r;
}

RegimeOneTerm regime1_bk(std::uint64_t n, std::uint64_t delta, std::uint64_t k,
                         std::optional<double> alpha) {
  if (k < 1 || k > n) throw DomainError("regime1_bk needs 1 <= k <= n");
  RegimeOneTerm t;
  t.k = k;
  const double kd = static_cast<double>(k);
  t.log2_value = log2_binomial(static_cast<double>(n), kd) - static_cast<double>(delta) * kd +
                 kd * (kd - 1.0) / 2.0 + 1.0;
  t.value = std::exp2(t.log2_value);
  if (alpha) {
    require_alpha(*alpha);
    t.in_regime = kd <= *alpha / 2.0 * std::log2(static_cast<double>(n)) + kThresholdEps;
  }
  return t;
}

double regime1_ratio(std::uint64_t n, std::uint64_t delta, std::uint64_t k) {
  if (k >= n) throw DomainError("regime1_ratio needs k < n");
  const double kd = static_cast<double>(k);
  return std::exp2(std::log2(static_cast<double>(n - k)) + kd - std::log2(kd + 1.0) -
                   static_cast<double>(delta));
}

double log2_kappa(double s, std::uint64_t t, double phi) {
  const double td = static_cast<double>(t);
  if (td > s) throw DomainError("kappa needs t <= s");
  if (!(phi > 0.0)) throw DomainError("kappa needs phi > 0");
  return log2_binomial(s, td) + 1.0 - phi * s;
}

double kappa(double s, std::uint64_t t, double phi) { return std::exp2(log2_kappa(s, t, phi)); }

std::uint64_t s_max(std::uint64_t t, double phi) {
  if (!(phi > 0.0)) throw DomainError("s_max needs phi > 0");
  if (t < 1) throw DomainError("s_max needs t >= 1");
  // 1 - 2^{-phi} = -expm1(-phi ln 2) keeps precision for small phi.
  const double x = static_cast<double>(t) / -std::expm1(-phi * kLn2);
  return static_cast<std::uint64_t>(std::floor(x + kThresholdEps));
}

double binary_entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("binary entropy needs 0 <= q <= 1");
  if (q == 0.0 || q == 1.0) return 0.0;
  return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

double entropy_binomial_bound(double n, double k) {
  if (!(k > 0.0 && k < n)) throw DomainError("entropy bound needs 0 < k < n");
  return std::exp2(n * binary_entropy(k / n));
}

FBound f_bound_check(double x) {
  if (!(x > 0.0)) throw DomainError("f_bound_check needs x > 0");
  FBound r;
  r.f = -std::log(-std::expm1(-x * kLn2)) / kLn2;
  r.bound = 1.0 - std::log2(x);
  r.slack = r.bound - r.f;
  return r;
}

double case_bound_log2(std::uint64_t pi_j, double phi, double alpha, std::uint64_t n) {
  if (!(phi > 0.0)) throw DomainError("case bound needs phi > 0");
  require_alpha(alpha);
  if (n < 4) throw DomainError("case bound needs n >= 4");
  const double lg = std::log2(static_cast<double>(n));
  const double leaf = 1.0 - phi * (1.0 + alpha) * lg;
  if (pi_j == 0) return leaf;
  if (pi_j == 1) return leaf + std::log2(1.0 + alpha) + std::log2(lg);
  const double p = static_cast<double>(pi_j);
  return 1.0 + p * std::log2(1.0 / phi) + p;
}

double regime2_per_k(std::uint64_t n, double alpha, std::uint64_t k) {
  require_alpha(alpha);
  if (n < 2) throw DomainError("regime2_per_k needs n >= 2");
  const double thr = alpha / 2.0 * std::log2(static_cast<double>(n));
  if (k < 1 || static_cast<double>(k) < thr - kThresholdEps) {
    throw DomainError("k lies below the Regime-2 threshold (alpha/2) log2 n");
  }
  const double kd = static_cast<double>(k);
  return std::exp2(-(std::log2(kd) + 2.0 * kd + 2.0));
}

Regime2Tail regime2_tail(std::uint64_t n, double alpha) {
  require_alpha(alpha);
  if (n < 4) throw DomainError("regime2_tail needs n >= 4");
  Regime2Tail r;
  const double lg = std::log2(static_cast<double>(n));
  r.closed_form = 1.0 / (alpha * std::pow(static_cast<double>(n), alpha) * lg);
  r.k_start = regime_split(n, alpha);
  for (std::uint64_t k = r.k_start; k <= n; ++k) {
    const double term = regime2_per_k(n, alpha, k);
    if (term == 0.0) break;
    r.numeric_sum += term;
  }
  r.holds = r.numeric_sum <= r.closed_form;
  return r;
}

Regime2Chain regime2_chain(std::uint64_t n, double alpha, double xi, double phi) {
  require_alpha(alpha);
  if (n < 5) throw DomainError("regime2_chain needs n >= 5");
  if (!(phi > 0.0)) throw DomainError("regime2_chain needs phi > 0");
  Regime2Chain c;
  c.xi = xi;
  const double lg = std::log2(static_cast<double>(n));
  const double ll = std::log2(lg);
  const double la = std::log2(1.0 + alpha);

  c.phi_hypothesis = phi > xi * ll / lg;
  c.case3_premise = (1.0 + alpha) * lg > 1.0 / -std::expm1(-phi * kLn2);

  // Per-unit-k exponent after the lemma, at the two extremes p = 0 and
  // p = k (it is linear in p), against the xi form.
  const double drain = phi / 2.0 * (1.0 + alpha) * lg;
  const double at_p0 = std::log2(1.0 / phi) + 1.0 - drain + 1.0;
  const double at_pk = la + ll - drain + 1.0;
  const double xi_form = ll * (1.0 - xi / 2.0 * (1.0 + alpha)) + 2.0 + la;
  c.lemma_step = std::max(at_p0, at_pk) <= xi_form;
  c.xi_step = xi_form <= ll * (1.0 - 2.0 * (1.0 + alpha));
  c.log_step = alpha * ll / 2.0 >= 1.0;

  const auto k = regime_split(n, alpha);
  const double kd = static_cast<double>(k);
  const double log2_catalan = log2_binomial(2.0 * (kd - 1.0), kd - 1.0) - std::log2(kd);
  c.final_step = lg + log2_catalan - (2.0 / alpha + 4.0) * kd <= -(std::log2(kd) + 2.0 * kd + 2.0);
  return c;
}

BoundTable bounds_table(std::uint64_t n, double alpha, std::uint64_t delta, double phi, double xi) {
  require_alpha(alpha);
  if (n < 5) throw DomainError("bounds table needs n >= 5");
  BoundTable t;
  t.n = n;
  t.alpha = alpha;
  t.delta = delta;
  t.phi = phi;
  const double lg = std::log2(static_cast<double>(n));
  const double thr = alpha / 2.0 * lg;

  for (std::uint64_t k = 1; static_cast<double>(k) <= thr + kThresholdEps && k <= n; ++k) {
    t.regime1.push_back(regime1_bk(n, delta, k, alpha));
    t.regime1_sum += t.regime1.back().value;
  }
  t.regime1_claim = 4.0 * std::pow(static_cast<double>(n), -alpha);

  const auto tail = regime2_tail(n, alpha);
  t.regime2_sum = tail.numeric_sum;
  t.regime2_claim = tail.closed_form;
  for (std::uint64_t k = tail.k_start; k <= n; ++k) {
    const double term = regime2_per_k(n, alpha, k);
    if (!t.regime2.empty() && term < t.regime2.front().second * 1e-17) break;
    t.regime2.emplace_back(k, term);
  }
  t.total = t.regime1_sum + t.regime2_sum;
  t.failure_bound = failure_bound(n, alpha);
  t.chain = regime2_chain(n, alpha, xi, phi);
  return t;
}

}  // namespace rso
