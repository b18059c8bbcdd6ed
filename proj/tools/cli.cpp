#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "hyperb/amenability.hpp"
#include "hyperb/barycenter.hpp"
#include "hyperb/boundary_metrics.hpp"
#include "hyperb/cocycles.hpp"
#include "hyperb/generators.hpp"
#include "hyperb/growth.hpp"
#include "hyperb/horizon.hpp"
#include "hyperb/hyperbolicity.hpp"
#include "hyperb/hyperbolization.hpp"
#include "hyperb/measure_approx.hpp"
#include "hyperb/parallel.hpp"

namespace hyperb::cli {

namespace {

/// Input that could not be read (graph spec, graph file, measure file).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string gen;
  std::string graph_file;
  int R = 0;
  std::string estimator = "4pt";
  std::string delta_mode = "both";
  double a = 0;
  int tail = 0;
  std::uint64_t seed = 1;
  std::string out;
  int threads = 0;

  std::string x = "base";
  std::string xp;
  std::string gamma;
  std::string measure_file;
  std::string n_list = "2,4,8,16";
  std::string base_spec = "euclid:1";
  std::string p_point, q_point;
  int n = 0;
  int r_int = 0;
  int rmax = -1;
  int atoms = 3;
  int triples = 1000;
  int pool_radius = 4;
  int nmax = 8;
  int truncation = -1;
  int samples = 1000;
  int pairs = 16;
  int ball = -1;
  double r = -1;
  double delta = 0;
  bool insize = false;
  bool classify = false;
  bool csv = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const Options& o) {
  try {
    if (!o.gen.empty() && !o.graph_file.empty()) throw GraphError("use only one of --gen and --graph");
    if (!o.gen.empty()) return generate(o.gen);
    if (!o.graph_file.empty()) return Graph::load(o.graph_file);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
  throw InputError("a graph is required (--gen SPEC or --graph FILE)");
}

Vertex parse_vertex(const Graph& g, const std::string& s, const char* what) {
  if (s == "base") return g.base();
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    g.check_vertex(static_cast<Vertex>(v));
    return static_cast<Vertex>(v);
  } catch (const std::logic_error&) {
    throw InputError(std::string("bad vertex for ") + what + ": '" + s + "'");
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::logic_error&) {
      throw InputError("bad integer list '" + s + "'");
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::logic_error&) {
      throw InputError("bad number list '" + s + "'");
    }
  }
  return out;
}

double visual_exponent(const Graph& g, const Options& o) {
  if (o.a > 0) return o.a;
  return default_visual_exponent(estimate_delta(g, parse_estimator(o.estimator)));
}

CocycleContext make_context(const Graph& g, const Options& o) {
  CocycleOptions co;
  co.estimator = parse_estimator(o.estimator);
  if (o.a > 0) co.a = o.a;
  if (o.R > 0) co.horizon_radius = o.R;
  if (o.tail > 0) co.tail_radius = o.tail;
  return CocycleContext::build(g, co);
}

BoundaryMeasure load_boundary_measure(const Graph& g, const Options& o, Distance radius) {
  try {
    return parse_boundary_measure(read_file(o.measure_file), g, radius);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
}

BoundaryMeasure random_atoms(const CocycleContext& ctx, int k, std::mt19937_64& rng) {
  auto horizon = ctx.horizon();
  if (k < 1 || static_cast<std::size_t>(k) > horizon.size()) {
    throw GraphError("cannot pick " + std::to_string(k) + " distinct horizon atoms");
  }
  std::shuffle(horizon.begin(), horizon.end(), rng);
  BoundaryMeasure m;
  m.radius = ctx.horizon_radius();
  for (int i = 0; i < k; ++i) m.weights.add(horizon[static_cast<std::size_t>(i)], 1.0 / k);
  return m;
}

std::string join(const std::vector<Vertex>& v, char sep = ';') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// ---------------------------------------------------------------- commands

void cmd_gen(const Options& o, std::ostream& out) { out << load_graph(o).serialize(); }

void cmd_delta(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const std::string& which = o.delta_mode;
  if (which == "4pt" || which == "both") out << "delta_4pt," << delta_four_point(g).to_string() << '\n';
  if (which == "rips" || which == "both") {
    const auto est = delta_rips(g, 64);
    out << "delta_rips," << est.delta.to_string() << '\n';
    out << "rips_exact," << (est.exact ? "true" : "false") << '\n';
    if (o.insize) {
      const auto rep = check_insize(g, est.delta, 64);
      out << "insize_checks," << rep.checks << '\n';
      out << "insize_failures," << rep.failures << '\n';
      out << "insize_max_gap," << rep.max_gap.to_string() << '\n';
    }
  }
  if (which != "4pt" && which != "rips" && which != "both") {
    throw InputError("--estimator must be 4pt, rips or both");
  }
}

void cmd_metrics(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const Vertex x = parse_vertex(g, o.x, "--x");
  std::vector<Vertex> points;
  if (o.ball >= 0) {
    points = g.ball(x, o.ball);
  } else if (g.vertex_count() > 400) {
    throw GraphError("graph has more than 400 vertices; restrict the table with --ball");
  }
  const double a = visual_exponent(g, o);
  const auto table = inner_metric(g, x, a, points);
  const auto rep = check_half_sandwich(table);
  out << "# a=" << format_double(a) << " pairs=" << rep.pairs << " sandwich_failures=" << rep.failures
      << '\n';
  write_table_csv(table, out);
}

void cmd_cocycle_check(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const auto ctx = make_context(g, o);
  std::mt19937_64 rng(o.seed);
  const auto lambda = random_atoms(ctx, o.atoms, rng);
  const auto pool = g.ball(g.base(), o.pool_radius);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::array<Vertex, 3>> triples(static_cast<std::size_t>(o.triples));
  for (auto& t : triples) t = {pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]};
  const auto rep = check_quasicocycle(ctx, lambda, triples);
  out << "# C2=" << format_double(ctx.C2()) << " atoms=" << join(lambda.weights.support_size() ? [&] {
    std::vector<Vertex> v;
    for (const auto& [z, w] : lambda.weights) v.push_back(z);
    return v;
  }() : std::vector<Vertex>{}) << '\n';
  out << "property,checks,failures,worst\n";
  const char* names[4] = {"lipschitz", "antisymmetry", "cocycle", "Bxx"};
  for (int k = 0; k < 4; ++k) {
    const auto& p = rep.parts[static_cast<std::size_t>(k)];
    out << names[k] << ',' << p.checks << ',' << p.failures << ',' << format_double(p.worst) << '\n';
  }
  out << "max_oscillation," << rep.max_oscillation << '\n';
  out << (rep.pass() ? "PASS" : "FAIL") << '\n';
}

void cmd_barycenter(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const auto ctx = make_context(g, o);
  std::mt19937_64 rng(o.seed);
  const auto lambda = o.measure_file.empty() ? random_atoms(ctx, o.atoms, rng)
                                             : load_boundary_measure(g, o, ctx.horizon_radius());
  nlohmann::json j;
  if (o.r >= 0 && !o.classify) {
    const Vertex x = parse_vertex(g, o.x, "--x");
    const auto res = quasi_barycenter(ctx, lambda, x, o.r);
    j["basepoint"] = res.basepoint;
    j["r"] = res.r;
    j["infimum"] = res.infimum;
    j["set"] = res.set;
    j["global_set"] = res.global_set;
  } else {
    const auto c = classify_measure(ctx, lambda);
    j["kind"] = to_string(c.kind);
    j["set"] = c.set;
  }
  out << j.dump() << '\n';
}

void cmd_growth(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const Distance rmax = o.rmax >= 0 ? o.rmax : interior_radius(g);
  const auto p = growth_profile(g, rmax);
  out << "# growth_rate=" << format_double(p.growth_rate)
      << " critical_exponent=" << format_double(p.critical_exponent_estimate) << '\n';
  write_growth_csv(p, out);
}

void cmd_lambda_decay(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const Vertex x = parse_vertex(g, o.x, "--x");
  const Vertex xp = parse_vertex(g, o.xp.empty() ? o.x : o.xp, "--xp");
  if (o.gamma.empty()) throw InputError("--gamma is required");
  const Vertex gamma = parse_vertex(g, o.gamma, "--gamma");
  std::vector<Distance> ns;
  for (int n : parse_int_list(o.n_list)) ns.push_back(n);
  const auto rows = lambda_decay_experiment(g, x, xp, gamma, ns, o.r_int);
  write_decay_csv(rows, out);
}

void cmd_patterson(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const Vertex x = parse_vertex(g, o.x, "--x");
  if (!(o.delta > 0)) throw InputError("--delta is required");
  const auto row = g.row(x);
  const Distance trunc =
      o.truncation >= 0 ? o.truncation : *std::max_element(row->begin(), row->end());
  const auto nu = pre_patterson(g, x, o.delta, trunc);
  out << "# normalizer=" << format_double(nu.normalizer)
      << " growth_rate=" << format_double(nu.growth_rate)
      << " tail_bound=" << format_double(nu.tail_bound) << '\n';
  if (!o.xp.empty()) {
    const Vertex xp = parse_vertex(g, o.xp, "--xp");
    const auto nu2 = pre_patterson(g, xp, o.delta, trunc, nu.growth_rate);
    out << "# tv=" << format_double(total_variation(nu.measure, nu2.measure))
        << " lipschitz_bound=" << format_double(3 * o.delta * g.dist(x, xp)) << '\n';
  }
  write_measure_csv(nu.measure, out);
}

void cmd_pi_project(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const Vertex x = parse_vertex(g, o.x, "--x");
  if (o.n < 1) throw InputError("--n must be positive");
  if (o.measure_file.empty()) throw InputError("--measure is required");
  FiniteMeasure theta;
  try {
    theta = parse_measure(read_file(o.measure_file), g);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
  std::vector<Vertex> domain;
  for (const auto& [z, w] : theta) domain.push_back(z);
  const double a = visual_exponent(g, o);
  const auto p = build_partition(g, x, o.n, a, std::nullopt, domain);
  const auto pi = project_pi_n(p, theta);
  out << "# a=" << format_double(a) << " epsilon=" << format_double(p.epsilon)
      << " mass=" << format_double(pi.mass()) << '\n';
  write_measure_csv(pi, out);
}

void cmd_atoms(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const Vertex x = parse_vertex(g, o.x, "--x");
  if (o.measure_file.empty()) throw InputError("--measure is required");
  const Distance R = o.R > 0 ? o.R : default_horizon_radius(g);
  const auto theta = load_boundary_measure(g, o, R);
  const double a = visual_exponent(g, o);
  const auto rep = extract_atoms(g, x, a, theta, o.nmax);
  out << "# a=" << format_double(a) << '\n';
  out << "W," << format_double(rep.W) << '\n';
  out << "W_series,";
  for (std::size_t i = 0; i < rep.W_series.size(); ++i) {
    out << (i ? ";" : "") << format_double(rep.W_series[i]);
  }
  out << '\n';
  out << "argmax," << join(rep.argmax) << '\n';
  out << "atomic_support," << join(rep.atomic_support) << '\n';
  out << "unresolved_pairs," << rep.unresolved.size() << '\n';
}

// Hyperbolization bases are given as `euclid:k` or `tree:n:seed`.
struct BaseSpec {
  bool euclid = true;
  int dim = 1;
  int tree_n = 50;
  std::uint64_t tree_seed = 1;
};

BaseSpec parse_base(const std::string& s) {
  BaseSpec b;
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  try {
    if (parts.size() == 2 && parts[0] == "euclid") {
      b.dim = std::stoi(parts[1]);
      if (b.dim < 1) throw std::invalid_argument("dim");
      return b;
    }
    if (parts.size() == 3 && parts[0] == "tree") {
      b.euclid = false;
      b.tree_n = std::stoi(parts[1]);
      b.tree_seed = std::stoull(parts[2]);
      if (b.tree_n < 1) throw std::invalid_argument("n");
      return b;
    }
  } catch (const std::logic_error&) {
  }
  throw InputError("bad --base '" + s + "' (expected euclid:k or tree:n:seed)");
}

void cmd_hyperbolize(const Options& o, std::ostream& out) {
  const BaseSpec b = parse_base(o.base_spec);
  const auto p = parse_double_list(o.p_point);
  const auto q = parse_double_list(o.q_point);
  double d = 0;
  if (b.euclid) {
    const auto dim = static_cast<std::size_t>(b.dim);
    if (p.size() != dim + 1 || q.size() != dim + 1) {
      throw InputError("points must be t,y1,...,yk for euclid:k");
    }
    HSpace<EuclideanBase> X{EuclideanBase(dim)};
    d = X.distance({p[0], {p.begin() + 1, p.end()}}, {q[0], {q.begin() + 1, q.end()}});
  } else {
    if (p.size() != 3 || q.size() != 3) throw InputError("points must be t,vertex,up for tree bases");
    HSpace<MetricTreeBase> X{MetricTreeBase::random(b.tree_n, b.tree_seed)};
    auto mk = [&](const std::vector<double>& v) {
      const int vert = static_cast<int>(v[1]);
      if (vert < 0 || vert >= b.tree_n || v[2] < 0 || v[2] > X.base().length(vert)) {
        throw GraphError("tree point outside the base");
      }
      return HSpace<MetricTreeBase>::Point{v[0], {vert, v[2]}};
    };
    d = X.distance(mk(p), mk(q));
  }
  out << "distance," << format_double(d) << '\n';
}

template <class Base, class Sampler>
void run_cat(const HSpace<Base>& X, Sampler sample, const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> height(-3.0, 3.0);
  std::size_t passed = 0;
  double worst = -std::numeric_limits<double>::infinity();
  if (o.csv) out << "triangle,max_violation\n";
  for (int k = 0; k < o.samples; ++k) {
    std::array<typename HSpace<Base>::Point, 3> tri;
    for (auto& v : tri) v = {height(rng), sample(rng)};
    const auto rep = cat_minus1_check(X, tri, static_cast<std::size_t>(o.pairs), rng());
    if (rep.pass()) ++passed;
    worst = std::max(worst, rep.max_violation);
    if (o.csv) out << k << ',' << format_double(rep.max_violation) << '\n';
  }
  out << (passed == static_cast<std::size_t>(o.samples) ? "PASS " : "FAIL ") << passed << '/'
      << o.samples << '\n';
  out << "max_violation," << format_double(worst) << '\n';
}

void cmd_cat_check(const Options& o, std::ostream& out) {
  const BaseSpec b = parse_base(o.base_spec);
  if (o.samples < 1 || o.pairs < 1) throw InputError("--samples and --pairs must be positive");
  if (b.euclid) {
    const EuclideanBase Y(static_cast<std::size_t>(b.dim));
    const HSpace<EuclideanBase> X{Y};
    run_cat(X, [&](std::mt19937_64& rng) { return Y.random_point(rng, 5.0); }, o, out);
  } else {
    const auto Y = MetricTreeBase::random(b.tree_n, b.tree_seed);
    const HSpace<MetricTreeBase> X{Y};
    run_cat(X, [&](std::mt19937_64& rng) { return Y.random_point(rng); }, o, out);
  }
}

void write_header(std::ostream& out, const std::vector<std::string>& args, std::uint64_t seed) {
  out << "# hyperb " << HYPERB_VERSION << '\n';
  out << "# command: hyperb";
  for (const auto& a : args) out << ' ' << a;
  out << '\n';
  out << "# seed: " << seed << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite-scale experiments on hyperbolic graphs and hyperbolized spaces", "hyperb"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Random seed (recorded in the output header)");
  app.add_option("--out", o.out, "Write output to this file instead of stdout");
  app.add_option("--threads", o.threads, "Worker threads (overrides HYPERB_THREADS)")
      ->check(CLI::NonNegativeNumber);

  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--gen", o.gen, "Generator spec, e.g. tree:3:6, freegroup:2:8, grid:9:9");
    sub->add_option("--graph", o.graph_file, "Graph file (`n m base` then edge lines)");
  };
  auto context_opts = [&](CLI::App* sub) {
    sub->add_option("--R", o.R, "Horizon radius (default: base eccentricity)");
    sub->add_option("--estimator", o.estimator, "Delta estimator: 4pt or rips");
    sub->add_option("--a", o.a, "Visual exponent override");
    sub->add_option("--tail", o.tail, "Tail radius R' of the horizon cells");
  };

  std::map<std::string, std::function<void(const Options&, std::ostream&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help,
                 std::function<void(const Options&, std::ostream&)> fn) {
    handlers[name] = std::move(fn);
    return app.add_subcommand(name, help);
  };

  graph_opts(add("gen", "Write a generated graph in the text format", cmd_gen));

  auto* delta = add("delta", "Hyperbolicity constants", cmd_delta);
  graph_opts(delta);
  delta->add_option("--estimator", o.delta_mode, "4pt, rips or both");
  delta->add_flag("--insize", o.insize, "Also check the insize inequality against delta_rips");

  auto* metrics = add("metrics", "Visual quasi-metric and inner metric table", cmd_metrics);
  graph_opts(metrics);
  context_opts(metrics);
  metrics->add_option("--x", o.x, "Basepoint (vertex id or 'base')");
  metrics->add_option("--ball", o.ball, "Restrict the table to B(x, ball)");

  auto* cocycle = add("cocycle-check", "Quasi-cocycle inequalities on sampled triples",
                      cmd_cocycle_check);
  graph_opts(cocycle);
  context_opts(cocycle);
  cocycle->add_option("--atoms", o.atoms, "Number of uniform horizon atoms in lambda");
  cocycle->add_option("--triples", o.triples, "Number of sampled triples");
  cocycle->add_option("--pool-radius", o.pool_radius, "Triples are drawn from B(base, r)");

  auto* bary = add("barycenter", "Quasi-barycenter set or elementarity class", cmd_barycenter);
  graph_opts(bary);
  context_opts(bary);
  bary->add_option("--measure", o.measure_file, "Boundary measure file (`vertex weight` lines)");
  bary->add_option("--atoms", o.atoms, "Random uniform atoms when no measure file is given");
  bary->add_option("--x", o.x, "Basepoint");
  bary->add_option("--r", o.r, "Sublevel radius; prints C(lambda, x, r)");
  bary->add_flag("--classify", o.classify, "Print the elementarity classification");

  auto* growth = add("growth", "Ball, sphere and packing statistics", cmd_growth);
  graph_opts(growth);
  growth->add_option("--rmax", o.rmax, "Largest radius (default: interior radius)");

  auto* decay = add("lambda-decay", "Displacement of the lambda_n sequence", cmd_lambda_decay);
  graph_opts(decay);
  decay->add_option("--x", o.x, "First basepoint");
  decay->add_option("--xp", o.xp, "Second basepoint");
  decay->add_option("--gamma", o.gamma, "Horizon endpoint of gamma");
  decay->add_option("--n", o.n_list, "Comma-separated n values");
  decay->add_option("--r", o.r_int, "Neighbourhood radius of the Y sets");

  auto* patterson = add("patterson", "Pre-Patterson measure on the vertex set", cmd_patterson);
  graph_opts(patterson);
  patterson->add_option("--x", o.x, "Centre");
  patterson->add_option("--xp", o.xp, "Second centre; prints the total variation");
  patterson->add_option("--delta", o.delta, "Exponent (must exceed the growth rate)");
  patterson->add_option("--truncation", o.truncation, "Truncation radius around x");

  auto* pi = add("pi-project", "Project a measure onto S(x, n)", cmd_pi_project);
  graph_opts(pi);
  context_opts(pi);
  pi->add_option("--x", o.x, "Basepoint");
  pi->add_option("--n", o.n, "Sphere radius");
  pi->add_option("--measure", o.measure_file, "Measure file (`vertex weight` lines)");

  auto* atoms = add("atoms", "Maximal atom weight of a boundary measure", cmd_atoms);
  graph_opts(atoms);
  context_opts(atoms);
  atoms->add_option("--x", o.x, "Basepoint");
  atoms->add_option("--nmax", o.nmax, "Largest sphere radius");
  atoms->add_option("--measure", o.measure_file, "Boundary measure file");

  auto* hyp = add("hyperbolize", "Distance in the hyperbolization of a base", cmd_hyperbolize);
  hyp->add_option("--base", o.base_spec, "euclid:k or tree:n:seed");
  hyp->add_option("--p", o.p_point, "t,y... (euclid) or t,vertex,up (tree)")->required();
  hyp->add_option("--q", o.q_point, "Second point")->required();

  auto* cat = add("cat-check", "Comparison-triangle tests in the hyperbolization", cmd_cat_check);
  cat->add_option("--base", o.base_spec, "euclid:k or tree:n:seed");
  cat->add_option("--samples", o.samples, "Number of random triangles");
  cat->add_option("--pairs", o.pairs, "Sampled point pairs per triangle");
  cat->add_flag("--csv", o.csv, "Per-triangle rows");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ERR Parse " << e.what() << '\n';
    return 1;
  }

  std::string name;
  for (auto* sub : app.get_subcommands()) name = sub->get_name();

  if (o.threads > 0) set_thread_count(static_cast<std::size_t>(o.threads));

  std::ostringstream buffer;
  try {
    write_header(buffer, args, o.seed);
    handlers.at(name)(o, buffer);
  } catch (const InputError& e) {
    err << "ERR Parse " << e.what() << '\n';
    return 1;
  } catch (const AtomTooHeavy& e) {
    err << "ERR AtomTooHeavy " << e.what() << '\n';
    return 2;
  } catch (const GraphError& e) {
    err << "ERR Precondition " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "ERR Precondition " << e.what() << '\n';
    return 2;
  }

  if (o.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "ERR Io cannot write '" << o.out << "'\n";
      return 2;
    }
    file << buffer.str();
  }
  return 0;
}

}  // namespace hyperb::cli
