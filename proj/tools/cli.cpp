#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "propalloc/allocation.hpp"
#include "propalloc/error.hpp"
#include "propalloc/flow.hpp"
#include "propalloc/instance.hpp"
#include "propalloc/json_io.hpp"
#include "propalloc/random.hpp"
#include "propalloc/scaling.hpp"
#include "propalloc/structure.hpp"
#include "propalloc/twocap.hpp"

namespace propalloc::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for problems that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for domain failures; carries the JSON payload for stdout.
struct DomainFailure {
  Json payload;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string slurp(const std::string& path) {
    if (path == "-") {
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
  }

  void emit(const std::string& json_text, const std::string& path = "-") {
    if (path == "-") {
      out_ << json_text << '\n';
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << json_text << '\n';
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

Json parse_payload(const std::string& text) { return Json::parse(text); }

std::vector<std::string> right_ids(const Instance& g) {
  std::vector<std::string> ids;
  for (const auto& n : g.right()) ids.push_back(n.id);
  return ids;
}

Json id_list(const Instance& g, const std::vector<std::size_t>& lefts) {
  Json arr = Json::array();
  for (std::size_t i : lefts) arr.push_back(g.left()[i].id);
  return arr;
}

// Matching-covered verdict, or a DomainFailure when there is no perfect
// assignment.
McVerdict verdict_or_fail(const Instance& g) {
  if (!has_perfect_matching(g)) throw DomainFailure{Json{{"error", "no perfect matching"}}};
  return is_matching_covered(g);
}

Json verdict_json(const Instance& g, const McVerdict& v) {
  Json out;
  out["matching_covered"] = v.covered;
  if (v.tight_set) out["tight_set"] = id_list(g, *v.tight_set);
  if (v.disconnected) out["disconnected"] = true;
  return out;
}

WeightVector weights_arg(const std::string& spec, Io& io, const std::vector<std::string>& ids) {
  if (spec == "uniform") return WeightVector::uniform(ids.size());
  return json::read_weights(ids, io.slurp(spec));
}

struct Options {
  std::string gen_kind;
  std::size_t n = 0;
  std::size_t extra = 0;
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string instance;
  std::string allocation;
  double tol = 1e-9;
  std::int64_t max_iter = 1'000'000;
  std::string strategy;
  std::string weights;
  std::size_t samples = 1000;
};

void cmd_gen(const Options& o, CLI::App& sub, Io& io) {
  const bool has_n = sub.count("--n") > 0;
  auto need_n = [&] {
    if (!has_n) throw UsageError("gen " + o.gen_kind + " requires --n");
  };
  try {
    if (o.gen_kind == "path3") {
      io.emit(json::write_instance(gen_path3()), o.out);
    } else if (o.gen_kind == "complete") {
      need_n();
      io.emit(json::write_instance(gen_complete(o.n)), o.out);
    } else if (o.gen_kind == "cycle") {
      need_n();
      io.emit(json::write_instance(gen_even_cycle(o.n)), o.out);
    } else if (o.gen_kind == "random-mc") {
      need_n();
      io.emit(json::write_instance(gen_random_mc(o.n, o.extra, o.seed)), o.out);
    } else {
      need_n();
      io.emit(json::write_twocap(gen_powers(o.n)), o.out);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void cmd_opt(const Options& o, Io& io) {
  const Instance g = json::read_instance(io.slurp(o.instance));
  Json out;
  out["opt"] = max_matching_value(g).value;
  out["perfect"] = has_perfect_matching(g);
  io.emit(out.dump());
}

void cmd_check_mc(const Options& o, Io& io) {
  const Instance g = json::read_instance(io.slurp(o.instance));
  io.emit(verdict_json(g, verdict_or_fail(g)).dump());
}

void cmd_weights(const Options& o, Io& io) {
  const Instance g = json::read_instance(io.slurp(o.instance));
  const McVerdict v = verdict_or_fail(g);
  if (!v.covered) {
    Json fail;
    fail["error"] = "not matching covered";
    if (v.tight_set) fail["tight_set"] = id_list(g, *v.tight_set);
    if (v.disconnected) fail["disconnected"] = true;
    throw DomainFailure{fail};
  }
  ScalingOptions opts;
  opts.tolerance = o.tol;
  opts.max_iterations = o.max_iter;
  const ScalingResult r = sinkhorn(g, opts);
  if (r.status != ScalingStatus::converged) {
    Json fail;
    fail["error"] = "scaling did not converge";
    fail["status"] = std::string(to_string(r.status));
    fail["iterations"] = r.iterations;
    fail["residual"] = r.residual;
    throw DomainFailure{fail};
  }
  const WeightVector alpha = weights_from_scaling(r);
  Json weights = Json::object();
  for (std::size_t j = 0; j < g.right_count(); ++j) weights[g.right()[j].id] = alpha[j];
  Json out;
  out["weights"] = std::move(weights);
  out["iterations"] = r.iterations;
  out["residual"] = r.residual;
  io.emit(out.dump());
}

void cmd_strategy(const Options& o, Io& io) {
  const Instance g = json::read_instance(io.slurp(o.instance));
  if (!has_perfect_matching(g)) throw DomainFailure{Json{{"error", "no perfect matching"}}};
  io.emit(json::write_strategy(g, perfect_strategy(g)));
}

void cmd_allocate(const Options& o, Io& io) {
  if (o.strategy.empty() && o.weights.empty()) {
    throw UsageError("allocate requires --strategy or --weights");
  }
  const Instance g = json::read_instance(io.slurp(o.instance));
  if (!o.strategy.empty()) {
    const RankedStrategy s = json::read_strategy(g, io.slurp(o.strategy));
    io.emit(json::write_allocation(g, ranked(g, s)));
  } else {
    io.emit(json::write_allocation(g, proportional(g, weights_arg(o.weights, io, right_ids(g)))));
  }
}

void cmd_eval(const Options& o, Io& io) {
  const Instance g = json::read_instance(io.slurp(o.instance));
  const Allocation x = json::read_allocation(g, io.slurp(o.allocation));
  Json out;
  out["value"] = allocation_value(g, x);
  out["opt"] = max_matching_value(g).value;
  io.emit(out.dump());
}

void cmd_twocap_violation(const Options& o, CLI::App& sub, Io& io) {
  const TwoCapInstance g = json::read_twocap(io.slurp(o.instance));
  std::vector<std::string> ids;
  for (const auto& b : g.bins()) ids.push_back(b.id);

  std::vector<WeightVector> batch;
  if (sub.count("--weights") > 0) {
    batch.push_back(weights_arg(o.weights, io, ids));
  } else {
    std::vector<double> caps;
    std::vector<double> vols;
    for (const auto& b : g.bins()) {
      caps.push_back(b.weight_capacity);
      vols.push_back(b.volume_capacity);
    }
    batch.push_back(WeightVector::uniform(ids.size()));
    batch.emplace_back(std::move(caps));
    batch.emplace_back(std::move(vols));
    Rng rng(o.seed);
    std::vector<double> alpha(ids.size());
    for (std::size_t s = 0; s < o.samples; ++s) {
      for (double& a : alpha) a = rng.log_uniform(1e-6, 1e6);
      batch.emplace_back(alpha);
    }
  }

  double min_factor = std::numeric_limits<double>::infinity();
  for (const WeightVector& alpha : batch) {
    min_factor = std::min(min_factor, violation_factor(g, alpha).factor);
  }

  Json out;
  out["min_factor_observed"] = min_factor;
  const std::size_t n = g.items().size();
  const bool square = n == g.bins().size() && g.edges().size() == n * n;
  if (square && n >= 2 && n % 2 == 0) {
    const double bound = lower_bound(n);
    out["lower_bound"] = bound;
    out["bound_holds"] = min_factor >= bound;
  } else {
    out["lower_bound"] = nullptr;
    out["bound_holds"] = nullptr;
  }
  io.emit(out.dump());
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Proportional and rank-based allocation on bipartite instances", "propalloc"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a generated instance as JSON");
  gen->add_option("kind", o.gen_kind, "path3 | complete | cycle | random-mc | twocap-powers")
      ->required()
      ->check(CLI::IsMember({"path3", "complete", "cycle", "random-mc", "twocap-powers"}));
  gen->add_option("--n", o.n, "Size parameter");
  gen->add_option("--extra", o.extra, "Extra random chords (random-mc)")->capture_default_str();
  gen->add_option("--seed", o.seed, "Random seed (random-mc)")->capture_default_str();
  gen->add_option("--out", o.out, "Output path, '-' for stdout")->capture_default_str();

  auto* opt = app.add_subcommand("opt", "Maximum assignment value and perfect-matching check");
  opt->add_option("instance", o.instance, "Instance JSON path or '-'")->required();

  auto* check = app.add_subcommand("check-mc", "Decide whether the instance is matching covered");
  check->add_option("instance", o.instance, "Instance JSON path or '-'")->required();

  auto* weights = app.add_subcommand("weights", "Perfect proportional weights via matrix scaling");
  weights->add_option("instance", o.instance, "Instance JSON path or '-'")->required();
  weights->add_option("--tol", o.tol, "Scaling tolerance")->capture_default_str();
  weights->add_option("--max-iter", o.max_iter, "Iteration cap")->capture_default_str();

  auto* strategy = app.add_subcommand("strategy", "Rank-based perfect strategy");
  strategy->add_option("instance", o.instance, "Instance JSON path or '-'")->required();

  auto* allocate = app.add_subcommand("allocate", "Allocation from a strategy or weight file");
  allocate->add_option("instance", o.instance, "Instance JSON path or '-'")->required();
  auto* strat_opt = allocate->add_option("--strategy", o.strategy, "Strategy JSON path");
  auto* weights_opt = allocate->add_option("--weights", o.weights, "Weights JSON path or 'uniform'");
  strat_opt->excludes(weights_opt);

  auto* eval = app.add_subcommand("eval", "Value of an allocation and OPT");
  eval->add_option("instance", o.instance, "Instance JSON path or '-'")->required();
  eval->add_option("allocation", o.allocation, "Allocation JSON path or '-'")->required();

  auto* twocap = app.add_subcommand("twocap-violation", "Violation factor of proportional weights");
  twocap->add_option("instance", o.instance, "Two-capacity instance JSON path or '-'")->required();
  auto* tw_weights = twocap->add_option("--weights", o.weights, "Weights JSON path or 'uniform'");
  auto* tw_samples =
      twocap->add_option("--samples", o.samples, "Random weight vectors")->capture_default_str();
  twocap->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  tw_weights->excludes(tw_samples);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "propalloc: " << e.what() << '\n';
    return kUsageError;
  }

  Io io(in, out);
  try {
    if (*gen) cmd_gen(o, *gen, io);
    else if (*opt) cmd_opt(o, io);
    else if (*check) cmd_check_mc(o, io);
    else if (*weights) cmd_weights(o, io);
    else if (*strategy) cmd_strategy(o, io);
    else if (*allocate) cmd_allocate(o, io);
    else if (*eval) cmd_eval(o, io);
    else if (*twocap) cmd_twocap_violation(o, *twocap, io);
    return kOk;
  } catch (const DomainFailure& f) {
    err << "propalloc: " << f.payload.value("error", std::string("failure")) << '\n';
    out << f.payload.dump() << '\n';
    return kDomainFailure;
  } catch (const UsageError& e) {
    err << "propalloc: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "propalloc: " << e.what() << '\n';
    return kUsageError;
  } catch (const ValidationError& e) {
    err << "propalloc: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "propalloc: " << e.what() << '\n';
    out << Json{{"error", e.what()}}.dump() << '\n';
    return kDomainFailure;
  } catch (const std::invalid_argument& e) {
    err << "propalloc: " << e.what() << '\n';
    out << Json{{"error", e.what()}}.dump() << '\n';
    return kDomainFailure;
  }
}

}  // namespace propalloc::cli
