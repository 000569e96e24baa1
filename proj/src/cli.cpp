#include "rso/cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rso/bounds.hpp"
#include "rso/errors.hpp"
#include "rso/exposure.hpp"
#include "rso/generators.hpp"
#include "rso/orientation.hpp"
#include "rso/report.hpp"
#include "rso/sieve.hpp"
#include "rso/spectral.hpp"

namespace rso::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string graph_file;
  std::string gen;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  double alpha = 1.0;
  double xi = 4.5;
  std::size_t k = 2;
  std::size_t t = 4;
  std::string route = "exact";
  unsigned threads = 1;
  std::string format;
  std::string out_path;
  std::uint64_t n = 1024;
  std::uint64_t delta = 0;
  double phi = 0.5;
  bool list = false, count = false, lemma = false;
};

struct LoadedGraph {
  Graph graph;
  GraphProvenance provenance;
};

LoadedGraph load_graph(const RunConfig& cfg) {
  LoadedGraph lg;
  if (!cfg.graph_file.empty()) {
    std::ifstream in(cfg.graph_file, std::ios::binary);
    if (!in) throw UsageError("cannot read graph file '" + cfg.graph_file + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    lg.graph = parse_graph(text);
    lg.provenance.kind = "file";
    lg.provenance.path = cfg.graph_file;
    lg.provenance.file_hash = fnv1a64(text);
    return lg;
  }
  if (cfg.gen.empty()) throw UsageError("a graph source is required: --graph FILE or --gen SPEC");
  const auto spec = parse_genspec(cfg.gen, cfg.seed);
  lg.provenance.kind = "generator";
  lg.provenance.spec = spec;
  if (spec.family == Family::random_regular && spec.params.size() == 2) {
    for (double x : spec.params) {
      if (!(x >= 0) || x != std::floor(x)) throw DomainError("regular parameters must be integers");
    }
    auto sample = sample_random_regular(static_cast<std::size_t>(spec.params[0]),
                                        static_cast<std::size_t>(spec.params[1]), spec.seed);
    lg.provenance.regular_method = std::string(method_name(sample.method));
    lg.provenance.attempts = sample.attempts;
    lg.graph = std::move(sample.graph);
    return lg;
  }
  if (spec.family == Family::tight_example && spec.params.size() == 2) {
    lg.provenance.regular_method = std::string(method_name(
        spec.params[0] <= kPairingRejectionMaxDegree ? RegularMethod::pairing_rejection
                                                     : RegularMethod::steger_wormald));
  }
  lg.graph = generate(spec);
  return lg;
}

void require_format(const RunConfig& cfg, bool csv_allowed) {
  if (cfg.format.empty() || cfg.format == "json") return;
  if (cfg.format == "csv" && csv_allowed) return;
  throw UsageError("--format " + cfg.format + " is not available for this subcommand");
}

std::string error_line(std::string_view kind, std::string_view message, int code) {
  Json j{{"error", std::string(message)}, {"kind", std::string(kind)}, {"exit_code", code}};
  return j.dump();
}

std::string_view error_kind(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const SizeLimitError*>(&e)) return "size_limit";
  if (dynamic_cast<const NumericError*>(&e)) return "numeric_error";
  if (dynamic_cast<const SamplingError*>(&e)) return "sampling_error";
  return "domain_error";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string run_command(const std::string& name, const RunConfig& cfg) {
  if (cfg.threads < 1) throw UsageError("--threads must be >= 1");
  GraphProvenance none;
  none.kind = "none";

  if (name == "generate") {
    if (cfg.gen.empty()) throw UsageError("generate needs --gen SPEC");
    const auto lg = load_graph(cfg);
    if (cfg.format == "json") {
      auto j = report_header(name, lg.provenance);
      j["n"] = lg.graph.n();
      j["m"] = lg.graph.m();
      Json edges = Json::array();
      for (const auto& e : lg.graph.edges()) edges.push_back({e.u, e.v});
      j["edges"] = edges;
      return dump(j);
    }
    if (!cfg.format.empty() && cfg.format != "edges") {
      throw UsageError("generate supports --format edges or json");
    }
    return to_edge_list(lg.graph);
  }

  if (name == "exposure") {
    require_format(cfg, true);
    if (cfg.list + cfg.count + cfg.lemma > 1) {
      throw UsageError("choose one of --list, --count, --lemma");
    }
    const bool csv = cfg.format == "csv";
    auto j = report_header(name, none);
    j["k"] = cfg.k;
    if (cfg.list) {
      const auto seqs = enumerate_exposure_sequences(cfg.k);
      if (csv) {
        std::ostringstream os;
        os << "index,pi,ell,p,dyck\n";
        for (std::size_t i = 0; i < seqs.size(); ++i) {
          std::string pi;
          for (std::size_t x = 0; x < seqs[i].pi.size(); ++x) {
            if (x) pi += ' ';
            pi += std::to_string(seqs[i].pi[x]);
          }
          os << i << ',' << pi << ',' << seqs[i].ell() << ',' << seqs[i].p() << ','
             << sequence_to_dyck(seqs[i]) << '\n';
        }
        return os.str();
      }
      Json arr = Json::array();
      for (const auto& s : seqs) arr.push_back(to_json(s));
      j["count"] = seqs.size();
      j["sequences"] = arr;
      return dump(j);
    }
    if (csv) throw UsageError("csv output is only available with --list");
    if (cfg.lemma) {
      std::uint64_t count = 0;
      bool ok1 = true, ok2 = true, identity = true;
      Json failures = Json::array();
      for_each_exposure_sequence(cfg.k, [&](const ExposureSequence& s) {
        ++count;
        const auto l = lemma_checks(s);
        ok1 = ok1 && l.ok1;
        ok2 = ok2 && l.ok2;
        identity = identity && l.identity;
        if (!(l.ok1 && l.ok2 && l.identity)) failures.push_back(s.pi);
      });
      j["count"] = count;
      j["all_ok1"] = ok1;
      j["all_ok2"] = ok2;
      j["all_identity"] = identity;
      j["failures"] = failures;
      return dump(j);
    }
    std::uint64_t count = 0;
    for_each_exposure_sequence(cfg.k, [&](const ExposureSequence&) { ++count; });
    j["count"] = count;
    j["catalan"] = catalan(cfg.k - 1);
    return dump(j);
  }

  if (name == "bounds-table") {
    require_format(cfg, true);
    const auto table = bounds_table(cfg.n, cfg.alpha, cfg.delta, cfg.phi, cfg.xi);
    if (cfg.format == "csv") return bounds_table_csv(table);
    auto j = report_header(name, none);
    j.update(to_json(table));
    return dump(j);
  }

  if (name == "example1") {
    require_format(cfg, false);
    const auto r = example1_experiment(cfg.t, cfg.trials, cfg.seed, cfg.threads);
    GraphProvenance p;
    p.kind = "generator";
    p.spec.family = Family::random_regular;
    p.spec.params = {static_cast<double>(r.n), static_cast<double>(cfg.t)};
    p.spec.seed = cfg.seed;
    p.regular_method = std::string(method_name(
        cfg.t <= kPairingRejectionMaxDegree ? RegularMethod::pairing_rejection
                                            : RegularMethod::steger_wormald));
    auto j = report_header(name, p);
    j["graph_provenance"]["block_seed"] = "derive_seed(seed, block)";
    j.update(to_json(r));
    return dump(j);
  }

  require_format(cfg, false);
  const auto lg = load_graph(cfg);
  const Graph& g = lg.graph;
  auto j = report_header(name, lg.provenance);

  if (name == "cheeger") {
    j.update(to_json(cheeger_constant_exact(g), g));
  } else if (name == "spectrum") {
    j["n"] = g.n();
    j["m"] = g.m();
    j.update(to_json(spectrum(g)));
  } else if (name == "census") {
    j["n"] = g.n();
    j["m"] = g.m();
    j.update(to_json(orientation_census(g, cfg.threads)));
  } else if (name == "orient-mc") {
    j["n"] = g.n();
    j["m"] = g.m();
    j.update(to_json(mc_strong_probability(g, cfg.trials, cfg.seed, cfg.threads)));
  } else if (name == "sinks") {
    j["n"] = g.n();
    j["m"] = g.m();
    j.update(to_json(mc_sink_statistics(g, cfg.trials, cfg.seed, cfg.threads)));
  } else if (name == "theorem-check") {
    if (cfg.route != "exact" && cfg.route != "spectral") {
      throw UsageError("--route must be exact or spectral");
    }
    const auto route = cfg.route == "exact" ? PhiRoute::exact_phi : PhiRoute::spectral;
    j.update(to_json(check_hypotheses(g, cfg.alpha, cfg.xi, route)));
  } else if (name == "sieve") {
    const bool regular = g.n() > 1 && g.min_degree() == g.max_degree() && g.min_degree() > 0;
    if (regular) {
      const bool strict = std::has_single_bit(g.n()) && std::bit_width(g.n()) - 1 == g.max_degree();
      j.update(to_json(sieve_sandwich(g, cfg.k, strict)));
    } else {
      j.update(to_json(sieve_term(g, cfg.k)));
    }
  } else {
    throw UsageError("unknown subcommand '" + name + "'");
  }
  return dump(j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random strong orientations toolkit", "rso"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto graph_opts = [&](CLI::App* sub) {
    auto* g = sub->add_option("--graph", cfg.graph_file, "edge-list file");
    auto* s = sub->add_option("--gen", cfg.gen, "generator spec, e.g. barbell:6, regular:16,4");
    g->excludes(s);
    s->excludes(g);
    sub->add_option("--seed", cfg.seed, "64-bit seed");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json (default) or csv");
    sub->add_option("--out", cfg.out_path, "write the report here instead of stdout");
  };
  auto mc = [&](CLI::App* sub) {
    sub->add_option("--trials", cfg.trials, "Monte Carlo trials");
    sub->add_option("--threads", cfg.threads, "worker threads (output does not depend on it)");
  };

  auto* gen = app.add_subcommand("generate", "emit a generated graph as an edge list");
  graph_opts(gen);
  common(gen);
  for (const char* name : {"cheeger", "spectrum"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " report");
    graph_opts(sub);
    common(sub);
  }
  auto* census = app.add_subcommand("census", "exact counts over all orientations");
  graph_opts(census);
  common(census);
  census->add_option("--threads", cfg.threads, "worker threads");
  for (const char* name : {"orient-mc", "sinks"}) {
    auto* sub = app.add_subcommand(name, name);
    graph_opts(sub);
    common(sub);
    mc(sub);
  }
  auto* thm = app.add_subcommand("theorem-check", "check the hypotheses on a graph");
  graph_opts(thm);
  common(thm);
  thm->add_option("--alpha", cfg.alpha);
  thm->add_option("--xi", cfg.xi);
  thm->add_option("--route", cfg.route, "exact or spectral");
  auto* bt = app.add_subcommand("bounds-table", "tabulate the probability bounds");
  common(bt);
  bt->add_option("--n", cfg.n);
  bt->add_option("--alpha", cfg.alpha);
  bt->add_option("--delta", cfg.delta)->required();
  bt->add_option("--phi", cfg.phi);
  bt->add_option("--xi", cfg.xi);
  auto* ex = app.add_subcommand("exposure", "exposure sequences of k-vertex trees");
  common(ex);
  ex->add_option("--k", cfg.k)->required();
  ex->add_flag("--list", cfg.list);
  ex->add_flag("--count", cfg.count);
  ex->add_flag("--lemma", cfg.lemma);
  auto* sv = app.add_subcommand("sieve", "exact S^(k) over independent k-sets");
  graph_opts(sv);
  common(sv);
  sv->add_option("--k", cfg.k)->required();
  auto* e1 = app.add_subcommand("example1", "sinks on random t-regular graphs with 2^t vertices");
  common(e1);
  mc(e1);
  e1->add_option("--t", cfg.t)->required();
  e1->add_option("--seed", cfg.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_line("usage", e.what(), 2) << '\n';
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  std::string report;
  try {
    report = run_command(name, cfg);
  } catch (const UsageError& e) {
    err << error_line("usage", e.what(), 2) << '\n';
    return 2;
  } catch (const Error& e) {
    err << error_line(error_kind(e), e.what(), 1) << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << error_line("internal", e.what(), 1) << '\n';
    return 1;
  }

  if (cfg.out_path.empty()) {
    out << report;
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f || !(f << report)) {
      err << error_line("io", "cannot write '" + cfg.out_path + "'", 1) << '\n';
      return 1;
    }
  }
  return 0;
}

}  // namespace rso::cli
