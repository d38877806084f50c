#include "acyclekit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acyclekit/complex_io.hpp"
#include "acyclekit/error.hpp"
#include "acyclekit/experiments.hpp"
#include "acyclekit/homology.hpp"
#include "acyclekit/persistence.hpp"
#include "acyclekit/random_models.hpp"
#include "acyclekit/spanning_acycle.hpp"
#include "acyclekit/stability.hpp"
#include "acyclekit/svg.hpp"
#include "acyclekit/version.hpp"

namespace acyclekit {

namespace {

using json = nlohmann::ordered_json;

// Writes to a file when a path is given, else to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw Error("cannot write " + path);
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void write_provenance(std::ostream& out, const json& config) {
  out << "# acyclekit " << kVersion << "\n# config " << config.dump() << "\n";
}

void write_json(std::ostream& out, const json& config, json body) {
  json doc;
  doc["version"] = kVersion;
  doc["config"] = config;
  for (auto& [key, value] : body.items()) doc[key] = value;
  out << doc.dump(2) << "\n";
}

json real_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json face_json(const Face& f) { return json(std::vector<Vertex>(f.vertices().begin(), f.vertices().end())); }

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "sup") return kSupNorm;
  try {
    std::size_t used = 0;
    double p = std::stod(s, &used);
    if (used != s.size()) throw ValidationError("bad exponent " + s);
    return p;
  } catch (const std::logic_error&) {
    throw ValidationError("bad exponent " + s);
  }
}

TieBreak parse_tie(const std::string& s) {
  if (s == "lex") return TieBreak::lexicographic();
  if (s == "revlex") return TieBreak::reverse_lexicographic();
  throw ValidationError("unknown tie-break " + s);
}

NoiseModel parse_noise(const std::string& spec, std::optional<double> a_n) {
  if (spec == "none") return {};
  if (spec == "iid_uniform" || spec == "iid") return IidScaledNoise{NoiseLaw::Uniform, a_n};
  if (spec == "iid_normal") return IidScaledNoise{NoiseLaw::Normal, a_n};
  if (spec.rfind("shift:", 0) == 0) {
    try {
      return SharedShiftNoise{std::stod(spec.substr(6))};
    } catch (const std::logic_error&) {
    }
  }
  throw ValidationError("unknown noise model " + spec + " (none, iid_uniform, iid_normal, shift:<c>)");
}

BaseDistribution parse_base(const std::string& name) {
  if (name == "uniform") return BaseDistribution::uniform();
  if (name == "exponential") return BaseDistribution::exponential();
  throw ValidationError("unknown base distribution " + name);
}

Face parse_face(const std::string& s) {
  std::vector<Vertex> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      v.push_back(static_cast<Vertex>(std::stoul(tok)));
    } catch (const std::logic_error&) {
      throw ValidationError("bad face " + s);
    }
  }
  return Face(std::move(v));
}

// ---------------------------------------------------------------------------

struct InputOptions {
  std::string path;
  bool auto_close_zero = false;
  std::string tie = "lex";

  WeightedComplex load() const { return read_complex_file(path, {auto_close_zero, parse_tie(tie)}); }
  void add_to(CLI::App* cmd) {
    cmd->add_option("--in", path, "complex file")->required();
    cmd->add_flag("--auto-close-zero", auto_close_zero, "add missing sub-faces with weight 0");
    cmd->add_option("--tie", tie, "tie-break for equal weights: lex or revlex");
  }
  json config() const { return {{"in", path}, {"auto_close_zero", auto_close_zero}, {"tie", tie}}; }
};

int cmd_homology(const InputOptions& in, std::ostream& out) {
  json config = {{"command", "homology"}};
  config.update(in.config());
  auto wc = in.load();
  auto bv = betti_numbers(wc.complex);
  json dims = json::array(), betti = json::array();
  for (int d = -1; d <= bv.max_dim; ++d) {
    dims.push_back(d);
    betti.push_back(bv.beta(d));
  }
  write_json(out, config, {{"dims", dims}, {"betti", betti}});
  return kExitOk;
}

int cmd_persistence(const InputOptions& in, bool reduced_row, const std::string& out_path, std::ostream& out) {
  json config = {{"command", "persistence"}};
  config.update(in.config());
  config["include_reduced"] = reduced_row;
  auto wc = in.load();
  auto dgm = build_diagram(wc.complex, wc.filtration);
  Sink sink(out_path, out);
  write_provenance(sink.stream(), config);
  write_diagram_csv(sink.stream(), dgm, reduced_row);
  return kExitOk;
}

int cmd_msa(const InputOptions& in, int d, const std::string& algo, const std::string& seed_face, std::ostream& out) {
  json config = {{"command", "msa"}};
  config.update(in.config());
  config["d"] = d;
  config["algo"] = algo;
  if (!seed_face.empty()) config["seed_face"] = seed_face;
  auto wc = in.load();
  SpanningAcycle msa;
  if (algo == "kruskal") {
    msa = kruskal_msa(wc.complex, wc.filtration, d);
  } else if (algo == "prim") {
    msa = seed_face.empty() ? prim_msa(wc.complex, wc.filtration, d)
                            : prim_msa(wc.complex, wc.filtration, d, parse_face(seed_face));
  } else if (algo == "brute") {
    msa = brute_force_msa(wc.complex, wc.filtration, d);
  } else {
    throw ValidationError("unknown algorithm " + algo);
  }
  auto idx = msa.indices;
  std::sort(idx.begin(), idx.end(), [&](FaceIndex a, FaceIndex b) {
    return wc.filtration.position(d, a) < wc.filtration.position(d, b);
  });
  json faces = json::array(), weights = json::array();
  for (FaceIndex i : idx) {
    faces.push_back(face_json(wc.complex.face(d, i)));
    weights.push_back(real_json(wc.filtration.weight(d, i)));
  }
  write_json(out, config, {{"faces", faces}, {"weights", weights}, {"total_weight", msa.total_weight}});
  return kExitOk;
}

int cmd_stability(const InputOptions& f_in, const std::string& g_path, int d, const std::vector<std::string>& ps,
                  std::ostream& out) {
  json config = {{"command", "stability"}};
  config.update(f_in.config());
  config["g"] = g_path;
  config["d"] = d;
  config["p"] = ps;
  auto f = f_in.load();
  auto g = read_complex_file(g_path, {f_in.auto_close_zero, parse_tie(f_in.tie)});
  if (!(f.complex == g.complex)) throw ValidationError("the two files describe different complexes");

  json rows = json::array();
  bool all_hold = true;
  for (const auto& p_str : ps) {
    double p = parse_exponent(p_str);
    auto r = stability_check(f.complex, f.filtration.weights(), g.filtration.weights(), d, p);
    all_hold = all_hold && r.holds();
    rows.push_back({{"p", p_str},
                    {"lhs_death", real_json(r.lhs_death)},
                    {"lhs_birth", real_json(r.lhs_birth)},
                    {"rhs", real_json(r.rhs)},
                    {"holds", r.holds()}});
  }
  auto mf = run_incremental(f.complex, f.filtration);
  auto mg = run_incremental(g.complex, g.filtration);
  PointMeasure df(mf.deaths(d - 1)), dg(mg.deaths(d - 1));
  write_json(out, config,
             {{"results", rows},
              {"bottleneck_death", real_json(bottleneck_distance(df, dg))},
              {"vague_death", vague_metric(df, dg, 32)}});
  return all_hold ? kExitOk : kExitAssertion;
}

struct SimulateOptions {
  std::size_t n = 10;
  int d = 2;
  std::uint64_t seed = 1;
  std::string model = "uniform";
  std::string noise = "iid_uniform";
  std::optional<double> a_n;
  std::string base = "uniform";
  std::string out;
};

int cmd_simulate(const SimulateOptions& o, std::ostream& out) {
  json config = {{"command", "simulate"}, {"n", o.n}, {"d", o.d}, {"seed", o.seed}, {"model", o.model}};
  if (o.model == "perturbed") {
    config["noise"] = o.noise;
    if (o.a_n) config["a_n"] = *o.a_n;
    config["base"] = o.base;
  }
  std::string body;
  std::string diagnostics;
  if (o.model == "uniform") {
    auto wc = gen_uniform_complex({o.n, o.d, o.seed});
    body = serialize_complex(wc.complex, wc.filtration);
  } else if (o.model == "perturbed") {
    auto pc = gen_perturbed_complex({o.n, o.d, o.seed, parse_base(o.base), parse_noise(o.noise, o.a_n)});
    body = serialize_complex(pc.complex, pc.filtrations.perturbed);
    const auto& diag = pc.filtrations.diagnostics;
    diagnostics = "# noise sup_norm " + format_real(diag.sup_norm) + " l1_norm " + format_real(diag.l1_norm) +
                  " clamped " + std::to_string(diag.clamped) + "\n";
  } else {
    throw ValidationError("unknown model " + o.model + " (uniform, perturbed)");
  }
  Sink sink(o.out, out);
  write_provenance(sink.stream(), config);
  sink.stream() << diagnostics << body;
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ExperimentOptions {
  std::string name;
  std::string config_path;
  std::vector<std::size_t> n;
  std::optional<int> d;
  std::optional<std::size_t> trials;
  std::vector<double> c;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> noise;
  std::optional<double> a_n;
  std::optional<double> band;
  std::vector<std::string> intervals;
  std::string out;
  std::string svg;
};

struct ResolvedExperiment {
  std::string name;
  std::vector<std::size_t> n;
  int d;
  std::size_t trials;
  std::vector<double> c;
  std::uint64_t seed;
  std::string noise;
  std::optional<double> a_n;
  double band;
  std::vector<Interval> intervals;
  std::string out;
  std::string svg;
};

Interval parse_interval(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ValidationError("interval must look like lo:hi");
  auto value = [&](const std::string& t) {
    if (t == "inf") return kInfinity;
    try {
      return std::stod(t);
    } catch (const std::logic_error&) {
      throw ValidationError("bad interval " + s);
    }
  };
  return {value(s.substr(0, colon)), value(s.substr(colon + 1))};
}

template <typename T>
std::vector<T> json_list(const json& v) {
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

ResolvedExperiment resolve(ExperimentOptions o) {
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw Error("cannot read " + o.config_path);
    json cfg;
    try {
      cfg = json::parse(in);
    } catch (const json::exception& e) {
      throw ValidationError(std::string("bad config: ") + e.what());
    }
    try {
      if (o.name.empty() && cfg.contains("experiment")) o.name = cfg["experiment"].get<std::string>();
      if (o.n.empty() && cfg.contains("n")) o.n = json_list<std::size_t>(cfg["n"]);
      if (!o.d && cfg.contains("d")) o.d = cfg["d"].get<int>();
      if (!o.trials && cfg.contains("T")) o.trials = cfg["T"].get<std::size_t>();
      if (o.c.empty() && cfg.contains("c")) o.c = json_list<double>(cfg["c"]);
      if (!o.seed && cfg.contains("seed")) o.seed = cfg["seed"].get<std::uint64_t>();
      if (!o.noise && cfg.contains("noise")) o.noise = cfg["noise"].get<std::string>();
      if (!o.a_n && cfg.contains("a_n")) o.a_n = cfg["a_n"].get<double>();
      if (!o.band && cfg.contains("band")) o.band = cfg["band"].get<double>();
      if (o.intervals.empty() && cfg.contains("intervals")) o.intervals = json_list<std::string>(cfg["intervals"]);
      if (o.out.empty() && cfg.contains("out")) o.out = cfg["out"].get<std::string>();
      if (o.svg.empty() && cfg.contains("svg")) o.svg = cfg["svg"].get<std::string>();
    } catch (const json::exception& e) {
      throw ValidationError(std::string("bad config: ") + e.what());
    }
  }

  ResolvedExperiment r;
  r.name = o.name;
  const bool growth = r.name == "growth";
  const bool frieze = r.name == "frieze";
  const bool gap = r.name == "gap";
  if (r.name.empty()) throw ValidationError("no experiment named");
  if (r.name != "poisson" && r.name != "moments" && r.name != "gap" && !frieze && !growth && r.name != "perturbation")
    throw ValidationError("unknown experiment " + r.name +
                          " (poisson, moments, gap, frieze, growth, perturbation)");
  r.d = o.d.value_or(growth ? 2 : 1);
  if (o.n.empty()) {
    if (growth) o.n = {8, 12, 16};
    else if (gap) o.n = {20, 50, 100};
    else if (frieze) o.n = {150};
    else o.n = {r.d == 1 ? std::size_t{200} : std::size_t{60}};
  }
  r.n = o.n;
  r.trials = o.trials.value_or(growth ? 50 : frieze ? 100 : 300);
  r.c = o.c.empty() ? std::vector<double>{0.0} : o.c;
  r.seed = o.seed.value_or(1);
  r.noise = o.noise.value_or(r.name == "perturbation" ? "iid_uniform" : "none");
  r.a_n = o.a_n;
  r.band = o.band.value_or(3.0);
  if (o.intervals.empty()) o.intervals = {"0:inf", "1:2"};
  for (const auto& s : o.intervals) r.intervals.push_back(parse_interval(s));
  r.out = o.out;
  r.svg = o.svg;
  if (frieze && r.d != 1) throw ValidationError("the frieze experiment needs d = 1");
  if (r.name == "perturbation" && r.noise == "none") throw ValidationError("the perturbation experiment needs noise");
  return r;
}

json experiment_config(const ResolvedExperiment& r) {
  json c = {{"command", "experiment"}, {"experiment", r.name}, {"n", r.n},   {"d", r.d},
            {"T", r.trials},           {"c", r.c},               {"seed", r.seed}, {"noise", r.noise}};
  if (r.a_n) c["a_n"] = *r.a_n;
  if (r.name == "growth") c["band"] = r.band;
  if (r.name == "moments") {
    json iv = json::array();
    for (const auto& i : r.intervals) iv.push_back({real_json(i.lo), real_json(i.hi)});
    c["intervals"] = iv;
  }
  if (!r.out.empty()) c["out"] = r.out;
  if (!r.svg.empty()) c["svg"] = r.svg;
  return c;
}

std::string fr(double x) { return format_real(x); }
const char* yes(bool b) { return b ? "true" : "false"; }

int cmd_experiment(const ExperimentOptions& opts, std::ostream& out) {
  const ResolvedExperiment r = resolve(opts);
  const json config = experiment_config(r);
  std::optional<NoiseModel> noise;
  if (r.noise != "none") noise = parse_noise(r.noise, r.a_n);

  Sink sink(r.out, out);
  std::ostream& csv = sink.stream();
  write_provenance(csv, config);
  bool pass = true;
  std::optional<TrialBatch> first_batch;
  auto batch_for = [&](std::size_t n) {
    auto b = run_batch({n, r.d, r.trials, r.seed, noise, BaseDistribution::uniform()});
    if (!first_batch) first_batch = b;
    return b;
  };

  if (r.name == "poisson") {
    csv << "n,d,T,c,process,mean,se,target,variance,chi_square,p_value,identities,pass\n";
    for (std::size_t n : r.n) {
      auto batch = batch_for(n);
      for (double c : r.c) {
        for (Process p : {Process::Nearest, Process::Death, Process::Msa}) {
          auto fit = poisson_gof(batch, c, p);
          bool ok = fit.pass() && batch.identities_hold();
          pass = pass && ok;
          csv << n << ',' << r.d << ',' << r.trials << ',' << fr(c) << ',' << process_name(p) << ','
              << fr(fit.mean.empirical) << ',' << fr(fit.mean.standard_error) << ',' << fr(fit.mean.target) << ','
              << fr(fit.variance) << ',' << fr(fit.chi_square) << ',' << fr(fit.p_value) << ','
              << yes(batch.identities_hold()) << ',' << yes(ok) << '\n';
        }
      }
    }
  } else if (r.name == "moments") {
    csv << "n,d,T,lo,hi,order,estimate,se,target,pass\n";
    for (std::size_t n : r.n) {
      auto batch = batch_for(n);
      for (const auto& iv : r.intervals) {
        auto reports = estimate_factorial_moments(batch, {iv}, 2);
        for (std::size_t l = 0; l < reports.size(); ++l) {
          pass = pass && reports[l].pass;
          csv << n << ',' << r.d << ',' << r.trials << ',' << fr(iv.lo) << ',' << fr(iv.hi) << ',' << l + 1 << ','
              << fr(reports[l].empirical) << ',' << fr(reports[l].standard_error) << ',' << fr(reports[l].target)
              << ',' << yes(reports[l].pass) << '\n';
        }
      }
    }
  } else if (r.name == "gap") {
    csv << "n,d,T,c,mean_gap,se,non_increasing\n";
    for (double c : r.c) {
      auto rows = betti_isolated_gap(r.n, r.d, c, r.trials, r.seed);
      bool ok = gap_non_increasing(rows);
      pass = pass && ok;
      for (const auto& row : rows)
        csv << row.n << ',' << r.d << ',' << r.trials << ',' << fr(c) << ',' << fr(row.mean_gap) << ','
            << fr(row.standard_error) << ',' << yes(ok) << '\n';
    }
  } else if (r.name == "frieze") {
    csv << "n,T,mean,se,target,tolerance,max_identity_residual,pass\n";
    for (std::size_t n : r.n) {
      auto res = frieze_lifetime_experiment(n, r.trials, r.seed);
      bool ok = res.report.pass && res.max_identity_residual < 1e-9;
      pass = pass && ok;
      csv << n << ',' << r.trials << ',' << fr(res.report.empirical) << ',' << fr(res.report.standard_error) << ','
          << fr(res.report.target) << ',' << fr(res.report.tolerance) << ',' << fr(res.max_identity_residual) << ','
          << yes(ok) << '\n';
    }
  } else if (r.name == "growth") {
    auto res = growth_rate_experiment(r.n, r.d, r.trials, r.seed, r.band, noise);
    pass = res.pass;
    csv << "n,d,T,mean_lifetime,se,ratio,spread,band,pass\n";
    for (const auto& row : res.rows)
      csv << row.n << ',' << r.d << ',' << r.trials << ',' << fr(row.mean_lifetime) << ',' << fr(row.standard_error)
          << ',' << fr(row.ratio) << ',' << fr(res.spread) << ',' << fr(res.band) << ',' << yes(res.pass) << '\n';
  } else {
    csv << "n,d,T,c,noise,mean_scaled_noise,clamped,bound_hold_rate,process,mean,se,target,p_value,pass\n";
    for (std::size_t n : r.n) {
      auto batch = batch_for(n);
      for (double c : r.c) {
        auto row = perturbation_row(batch, c);
        for (const PoissonFit* fit : {&row.nearest, &row.death, &row.msa}) {
          const char* name = fit == &row.nearest ? "nearest" : fit == &row.death ? "death" : "msa";
          bool ok = fit->pass() && row.bound_hold_rate == 1.0;
          pass = pass && ok;
          csv << n << ',' << r.d << ',' << r.trials << ',' << fr(c) << ',' << r.noise << ','
              << fr(row.mean_scaled_noise) << ',' << row.clamped << ',' << fr(row.bound_hold_rate) << ',' << name
              << ',' << fr(fit->mean.empirical) << ',' << fr(fit->mean.standard_error) << ','
              << fr(fit->mean.target) << ',' << fr(fit->p_value) << ',' << yes(ok) << '\n';
        }
      }
    }
  }

  if (!r.svg.empty()) {
    if (!first_batch) throw ValidationError("an SVG histogram needs a poisson, moments or perturbation run");
    std::vector<double> pooled;
    for (const auto& t : first_batch->trials)
      pooled.insert(pooled.end(), t.base.death.points().begin(), t.base.death.points().end());
    std::ofstream svg(r.svg, std::ios::binary);
    if (!svg) throw Error("cannot write " + r.svg);
    svg << "<!-- acyclekit " << kVersion << " config " << config.dump() << " -->\n";
    write_intensity_svg(svg, pooled, first_batch->trials.size(),
                        {-1.0, 5.0, 24,
                         "scaled death times, n = " + std::to_string(first_batch->params.n) +
                             ", d = " + std::to_string(r.d)});
  }
  return pass ? kExitOk : kExitAssertion;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted simplicial complexes, persistence and minimal spanning acycles", "acyclekit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  InputOptions homology_in;
  auto* homology = app.add_subcommand("homology", "reduced Betti numbers of a complex");
  homology_in.add_to(homology);

  InputOptions persistence_in;
  bool include_reduced = false;
  std::string persistence_out;
  auto* persistence = app.add_subcommand("persistence", "persistence diagram as CSV");
  persistence_in.add_to(persistence);
  persistence->add_flag("--include-reduced", include_reduced, "also print the dimension -1 point");
  persistence->add_option("--out", persistence_out, "output file (default stdout)");

  InputOptions msa_in;
  int msa_d = 1;
  std::string algo = "kruskal";
  std::string seed_face;
  auto* msa = app.add_subcommand("msa", "minimal spanning acycle as JSON");
  msa_in.add_to(msa);
  msa->add_option("--d", msa_d, "dimension of the acycle")->required();
  msa->add_option("--algo", algo, "kruskal, prim or brute")->check(CLI::IsMember({"kruskal", "prim", "brute"}));
  msa->add_option("--seed-face", seed_face, "start face for prim, e.g. 1,2");

  InputOptions stab_in;
  std::string g_path;
  int stab_d = 1;
  std::vector<std::string> ps{"0", "1", "2", "inf"};
  auto* stability = app.add_subcommand("stability", "compare birth/death multisets of two weightings");
  stab_in.add_to(stability);
  stability->add_option("--g", g_path, "second complex file, same faces")->required();
  stability->add_option("--d", stab_d, "top dimension compared")->required();
  stability->add_option("--p", ps, "exponents: 0, reals >= 1, inf");

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "write a random weighted complex");
  simulate->add_option("--n", sim.n, "vertex count")->required();
  simulate->add_option("--d", sim.d, "top dimension")->required();
  simulate->add_option("--seed", sim.seed, "RNG seed");
  simulate->add_option("--model", sim.model, "uniform or perturbed");
  simulate->add_option("--noise", sim.noise, "none, iid_uniform, iid_normal or shift:<c>");
  simulate->add_option("--a-n", sim.a_n, "noise scale (default n (log n)^2)");
  simulate->add_option("--base", sim.base, "uniform or exponential");
  simulate->add_option("--out", sim.out, "output file (default stdout)");

  ExperimentOptions exp;
  auto* experiment = app.add_subcommand("experiment", "Monte-Carlo experiments");
  experiment->add_option("name", exp.name, "poisson, moments, gap, frieze, growth or perturbation");
  experiment->add_option("--config", exp.config_path, "JSON config; flags override it");
  experiment->add_option("--n", exp.n, "vertex counts");
  experiment->add_option("--d", exp.d, "dimension");
  experiment->add_option("--T", exp.trials, "trials per n");
  experiment->add_option("--c", exp.c, "thresholds on the scaled axis");
  experiment->add_option("--seed", exp.seed, "master seed");
  experiment->add_option("--noise", exp.noise, "none, iid_uniform, iid_normal or shift:<c>");
  experiment->add_option("--a-n", exp.a_n, "noise scale (default n (log n)^2)");
  experiment->add_option("--band", exp.band, "growth ratio band");
  experiment->add_option("--interval", exp.intervals, "moment intervals lo:hi");
  experiment->add_option("--out", exp.out, "CSV output (default stdout)");
  experiment->add_option("--svg", exp.svg, "SVG histogram of scaled death times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (homology->parsed()) return cmd_homology(homology_in, out);
    if (persistence->parsed()) return cmd_persistence(persistence_in, include_reduced, persistence_out, out);
    if (msa->parsed()) return cmd_msa(msa_in, msa_d, algo, seed_face, out);
    if (stability->parsed()) return cmd_stability(stab_in, g_path, stab_d, ps, out);
    if (simulate->parsed()) return cmd_simulate(sim, out);
    if (experiment->parsed()) return cmd_experiment(exp, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace acyclekit
