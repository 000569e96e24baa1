#include "rso/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rso {

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string rational_string(const BigRational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Json to_json(const GenSpec& s) {
  return Json{{"spec", s.str()},
              {"family", std::string(family_name(s.family))},
              {"params", s.params},
              {"seed", s.seed}};
}

Json to_json(const GraphProvenance& p) {
  Json j{{"kind", p.kind}};
  if (p.kind == "file") {
    j["path"] = p.path;
    j["fnv1a64"] = hex64(p.file_hash);
  } else if (p.kind == "generator") {
    j["generator"] = to_json(p.spec);
    if (!p.regular_method.empty()) {
      j["regular_method"] = p.regular_method;
      if (p.attempts) j["attempts"] = p.attempts;
    }
  }
  return j;
}

Json report_header(std::string_view command, const GraphProvenance& p) {
  return Json{{"schema_version", std::string(report_schema_version())},
              {"command", std::string(command)},
              {"graph_provenance", to_json(p)}};
}

Json to_json(const CheegerReport& r, const Graph& g) {
  return Json{{"n", g.n()},
              {"m", g.m()},
              {"phi_num", r.phi.num()},
              {"phi_den", r.phi.den()},
              {"phi", r.phi.to_double()},
              {"argmin_bitmask", r.argmin.mask()},
              {"argmin", r.argmin.members()},
              {"cut_edges", r.cut_edges},
              {"vol_x", r.vol_x},
              {"vol_xbar", r.vol_xbar},
              {"connected", r.connected}};
}

Json to_json(const SpectrumReport& r) {
  return Json{{"eigenvalues", r.eigenvalues},
              {"lambda1", r.lambda1},
              {"sigma", r.sigma},
              {"lambda_max", r.lambda_max}};
}

Json to_json(const OrientationCensus& c) {
  return Json{{"total", c.total},
              {"strong", c.strong},
              {"sink_free", c.sink_free},
              {"eulerian", c.eulerian}};
}

Json to_json(const MCEstimate& e) {
  return Json{{"trials", e.trials},
              {"successes", e.successes},
              {"p_hat", e.p_hat},
              {"ci_low", e.ci_low},
              {"ci_high", e.ci_high},
              {"confidence", 0.95},
              {"seed", e.seed}};
}

Json to_json(const SinkStatistics& s) {
  return Json{{"trials", s.trials},
              {"seed", s.seed},
              {"total_sinks", s.total_sinks},
              {"mean_sinks", s.mean_sinks},
              {"exact_expectation", s.exact_expectation},
              {"exact_variance", s.exact_variance},
              {"std_error", s.std_error},
              {"z_score", s.z_score}};
}

Json to_json(const HypothesisReport& h) {
  Json j{{"n", h.n},
         {"delta", h.delta},
         {"alpha", h.alpha},
         {"xi", h.xi},
         {"route", h.spectral_route ? "spectral" : "exact"},
         {"phi", h.phi}};
  if (h.phi_exact) {
    j["phi_num"] = h.phi_exact->num();
    j["phi_den"] = h.phi_exact->den();
  } else {
    j["lambda1"] = h.lambda1;
  }
  j["connected"] = h.connected;
  j["degree_threshold"] = h.degree_threshold;
  j["cheeger_threshold"] = h.cheeger_threshold;
  j["degree_ok"] = h.degree_ok;
  j["cheeger_ok"] = h.cheeger_ok;
  j["hypotheses_met"] = h.hypotheses_met;
  j["failure_bound"] = h.failure_bound;
  j["caveat"] = h.caveat;
  return j;
}

Json to_json(const Regime2Chain& c) {
  return Json{{"xi", c.xi},
              {"phi_hypothesis", c.phi_hypothesis},
              {"case3_premise", c.case3_premise},
              {"lemma_step", c.lemma_step},
              {"xi_step", c.xi_step},
              {"log_step", c.log_step},
              {"final_step", c.final_step},
              {"all", c.all()}};
}

Json to_json(const BoundTable& t) {
  Json r1 = Json::array();
  for (const auto& term : t.regime1) {
    r1.push_back({{"k", term.k}, {"log2_bk", term.log2_value}, {"bk", term.value}});
  }
  Json r2 = Json::array();
  for (const auto& [k, v] : t.regime2) r2.push_back({{"k", k}, {"bound", v}});
  return Json{{"n", t.n},
              {"alpha", t.alpha},
              {"delta", t.delta},
              {"phi", t.phi},
              {"regime1", r1},
              {"regime1_sum", t.regime1_sum},
              {"regime1_claim", t.regime1_claim},
              {"regime2", r2},
              {"regime2_sum", t.regime2_sum},
              {"regime2_claim", t.regime2_claim},
              {"total", t.total},
              {"failure_bound", t.failure_bound},
              {"regime2_chain", to_json(t.chain)}};
}

Json to_json(const ExposureSequence& s) {
  return Json{{"pi", s.pi}, {"ell", s.ell()}, {"p", s.p()}, {"dyck", sequence_to_dyck(s)}};
}

Json to_json(const LemmaCheck& l) {
  return Json{{"sum_big", l.sum_big}, {"ok1", l.ok1}, {"ok2", l.ok2}, {"identity", l.identity}};
}

Json to_json(const SieveReport& r) {
  Json j{{"k", r.k},
         {"n", r.n},
         {"independent_sets", r.independent_sets},
         {"s_k", rational_string(r.s_k)},
         {"s_k_value", r.s_k.convert_to<double>()},
         {"target", rational_string(r.target)},
         {"k_factorial_s_k", (r.s_k / r.target).convert_to<double>()}};
  if (r.upper) {
    j["degree"] = *r.degree;
    j["mode"] = *r.strict ? "strict" : "approximate";
    j["upper"] = rational_string(*r.upper);
    j["upper_value"] = r.upper->convert_to<double>();
    j["lower"] = rational_string(*r.lower);
    j["lower_value"] = r.lower->convert_to<double>();
    j["sandwich_holds"] = *r.sandwich_holds;
  }
  return j;
}

Json to_json(const Example1Result& r) {
  return Json{{"t", r.t},
              {"N", r.n},
              {"trials", r.trials},
              {"seed", r.seed},
              {"block_size", r.block_size},
              {"blocks", r.blocks},
              {"p_disconnected", to_json(r.p_disconnected)},
              {"p_has_sink", to_json(r.p_has_sink)},
              {"total_sinks", r.total_sinks},
              {"mean_sinks", r.mean_sinks},
              {"exact_mean_sinks", r.exact_mean_sinks},
              {"distance_to_one_minus_inv_e", r.distance_to_limit},
              {"sink_but_strong", r.sink_but_strong}};
}

std::string bounds_table_csv(const BoundTable& t) {
  std::ostringstream os;
  os.precision(17);
  os << "regime,k,log2_value,value\n";
  for (const auto& term : t.regime1) {
    os << "1," << term.k << ',' << term.log2_value << ',' << term.value << '\n';
  }
  for (const auto& [k, v] : t.regime2) os << "2," << k << ',' << std::log2(v) << ',' << v << '\n';
  return os.str();
}

}  // namespace rso
