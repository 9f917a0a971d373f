#include "cli.hpp"

#include "ihara/entropy.hpp"
#include "ihara/error.hpp"
#include "ihara/formal_group.hpp"
#include "ihara/graph.hpp"
#include "ihara/prime_cycles.hpp"
#include "ihara/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

namespace ihara::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Graphs with at most this many directed edges get the Euler-product
/// cross-check in `zeta`.
constexpr std::size_t kEulerCheckMaxEdges = 40;
constexpr std::size_t kEulerCheckMaxOrder = 8;
/// Denominator bound when the group-law command converts a to an exact rational.
constexpr std::uint64_t kGroupLawMaxDenominator = 1u << 20;
/// Exact associativity costs grow steeply with the order; beyond this the
/// check runs on the truncation.
constexpr std::size_t kAssociativityMaxOrder = 16;

/// Value rounded to `digits` significant digits, as a JSON number.
double rounded(Real x, int digits) { return std::strtod(format_real(x, digits).c_str(), nullptr); }

double lambda_number(Real x) { return rounded(x, 15); }
double real_number(Real x) { return rounded(x, 17); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const RunConfig& cfg) {
  if (cfg.graph_path.empty()) throw Error(ErrorKind::Io, "--graph is required");
  return read_edge_list_file(cfg.graph_path);
}

std::shared_ptr<const ZetaModel> load_model(const RunConfig& cfg) {
  if (cfg.order < 1) throw Error(ErrorKind::InvalidParams, "--order must be at least 1");
  const Graph g = load_graph(cfg);
  PowerIterationOptions options;
  options.tolerance = cfg.tol;
  return std::make_shared<const ZetaModel>(build_zeta_model(g, cfg.order, options));
}

Real resolve_a(const RunConfig& cfg, const ZetaModel& model) {
  if (cfg.a && cfg.a_fraction) throw Error(ErrorKind::InvalidParams, "--a and --a-frac are mutually exclusive");
  if (cfg.a) return *cfg.a;
  const Real fraction = cfg.a_fraction.value_or(0.5L);
  if (!(fraction > 0) || !(fraction < 1)) throw Error(ErrorKind::InvalidParams, "--a-frac must lie in (0, 1)");
  return fraction / model.lambda().lambda;
}

ProbabilityDistribution load_distribution(const RunConfig& cfg) {
  if (cfg.dist_path.empty()) throw Error(ErrorKind::Io, "--dist is required");
  return ProbabilityDistribution::parse(read_file(cfg.dist_path));
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    out << prefix << ":";
    for (const auto& item : j) out << " " << (item.is_string() ? item.get<std::string>() : item.dump());
    out << "\n";
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const RunConfig& cfg, const Json& j, std::ostream& out) {
  if (cfg.format == OutputFormat::Json) {
    out << j.dump(2) << "\n";
  } else {
    flatten(j, "", out);
  }
}

Json lambda_json(const SpectralRadius& lambda) {
  return Json{{"value", lambda_number(lambda.lambda)},
              {"residual", real_number(lambda.residual)},
              {"iterations", lambda.iterations}};
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const AdmissibilityReport report = validate_admissible(g);
  Json violations = Json::array();
  for (Violation v : report.violations) violations.push_back(std::string(to_string(v)));
  emit(cfg,
       Json{{"admissible", report.admissible()},
            {"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"violations", violations}},
       out);
  return report.admissible() ? kSuccess : kDomainRejection;
}

int cmd_zeta(const RunConfig& cfg, std::ostream& out) {
  const auto model = load_model(cfg);
  const ZetaSeries& zs = model->series;
  const Real a = resolve_a(cfg, *model);

  Json checks;
  checks["c0_is_one"] = zs.coefficients[0] == 1;
  checks["c1_is_zero"] = zs.order() < 1 || zs.coefficients[1] == 0;
  bool nonnegative = true;
  for (const auto& c : zs.coefficients.coefficients()) nonnegative = nonnegative && c >= 0;
  checks["coefficients_nonnegative"] = nonnegative;
  checks["lambda_at_least_trace_bound"] =
      model->lambda().lambda + 1e-9L >= trace_lower_bound(model->traces, model->olg.size());
  if (model->olg.size() <= kEulerCheckMaxEdges) {
    const std::size_t check_order = std::min(zs.order(), kEulerCheckMaxOrder);
    const auto primes = enumerate_primes(model->olg, check_order, budget_from_environment());
    const bool match = euler_product_series(primes, check_order) == zs.coefficients.truncated(check_order);
    checks["euler_product"] = match ? "match" : "mismatch";
    checks["euler_product_order"] = check_order;
  } else {
    checks["euler_product"] = "skipped";
  }

  const Real x = std::min(a, domain_limit(model->lambda()) * 0.999L);
  emit(cfg,
       Json{{"lambda", lambda_json(model->lambda())},
            {"N", zs.order()},
            {"directed_edges", zs.directed_edges},
            {"coefficients", series::to_strings(zs.coefficients)},
            {"tail_bound_at", Json{{"x", lambda_number(x)}, {"bound", real_number(zeta_tail_bound(zs, x))}}},
            {"checks", checks}},
       out);
  return kSuccess;
}

int cmd_entropy(const RunConfig& cfg, std::ostream& out) {
  const auto model = load_model(cfg);
  const ProbabilityDistribution dist = load_distribution(cfg);
  const IharaEntropy entropy(model, resolve_a(cfg, *model));
  EntropyReport report = entropy.entropy(dist);
  report.maximizer = entropy.maximizer(cfg.tol).c;
  if (cfg.q) report.tsallis = std::make_pair(*cfg.q, tsallis_entropy(dist, *cfg.q));

  Json terms = Json::array();
  for (Real t : report.terms) terms.push_back(real_number(t));
  Json tsallis = nullptr;
  if (report.tsallis) tsallis = Json{{"q", real_number(report.tsallis->first)}, {"value", real_number(report.tsallis->second)}};
  emit(cfg,
       Json{{"S", real_number(report.entropy)},
            {"terms", terms},
            {"a", lambda_number(report.a)},
            {"N", report.order},
            {"lambda", lambda_number(report.lambda)},
            {"maximizer_c", real_number(*report.maximizer)},
            {"comparators", Json{{"shannon", real_number(report.shannon)}, {"tsallis_q", tsallis}}}},
       out);
  return kSuccess;
}

int cmd_max(const RunConfig& cfg, std::ostream& out) {
  const auto model = load_model(cfg);
  const IharaEntropy entropy(model, resolve_a(cfg, *model));
  const MaximizerResult m = entropy.maximizer(cfg.tol);
  const Real h0 = entropy.h(0), h1 = entropy.h(1);
  const bool certified = h0 > 0 && h1 < 0 && m.c > 0 && m.c < 1 && std::fabs(m.h_at_c) <= cfg.tol;
  emit(cfg,
       Json{{"a", lambda_number(entropy.a())},
            {"lambda", lambda_number(model->lambda().lambda)},
            {"N", model->series.order()},
            {"c", real_number(m.c)},
            {"h_at_c", real_number(m.h_at_c)},
            {"s_at_c", real_number(entropy.term(m.c))},
            {"iterations", m.iterations},
            {"tol", real_number(cfg.tol)},
            {"h_at_0", real_number(h0)},
            {"h_at_1", real_number(h1)},
            {"certificate", verdict(certified)}},
       out);
  return certified ? kSuccess : kDomainRejection;
}

int cmd_primes(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_length < 1) throw Error(ErrorKind::InvalidParams, "--max-length must be at least 1");
  const Graph g = load_graph(cfg);
  const OrientedLineGraph olg = build_line_graph(g);
  const PrimeCycleList primes = enumerate_primes(olg, cfg.max_length, budget_from_environment());
  for (const PrimeCycle& p : primes.cycles) {
    for (std::size_t i = 0; i < p.edges.size(); ++i) out << (i ? " " : "") << p.edges[i];
    out << "\n";
  }
  Json histogram = Json::object();
  for (const auto& [length, count] : primes.length_histogram()) histogram[std::to_string(length)] = count;
  const Json summary{{"max_length", primes.max_length}, {"total", primes.cycles.size()}, {"histogram", histogram}};
  if (cfg.format == OutputFormat::Json) {
    out << summary.dump() << "\n";
  } else {
    flatten(summary, "", out);
  }
  return kSuccess;
}

int cmd_group_law(const RunConfig& cfg, std::ostream& out) {
  const auto model = load_model(cfg);
  const Real a = resolve_a(cfg, *model);
  // Exact arithmetic needs a rational a; a bounded denominator keeps the
  // coefficient sizes manageable.
  const Rational a_exact = rationalize(a, kGroupLawMaxDenominator);
  if (!(to_real(a_exact) > 0) || !(to_real(a_exact) < domain_limit(model->lambda()))) {
    throw Error(ErrorKind::InvalidParams, "rational approximation of a leaves the domain");
  }
  const std::size_t n = model->series.order();
  const auto log = formal_group_log_series(model->series, a_exact, n);
  const auto exp_map = series::inverse_composition(log);
  const bool inverse_ok = series::compose(log, exp_map) == TruncatedSeries<Rational>::identity(n) &&
                          series::compose(exp_map, log) == TruncatedSeries<Rational>::identity(n);
  const auto phi = lazard_law(log, exp_map, n);
  const auto checks = check_group_law(phi, n, Rational(0), kAssociativityMaxOrder);

  Json table = Json::array();
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi.coefficient(i) == 0) continue;
    const auto& e = phi.monomial(i);
    table.push_back(Json{{"i", e[0]}, {"j", e[1]}, {"value", format_real(to_real(phi.coefficient(i)))}});
  }
  emit(cfg,
       Json{{"a", lambda_number(a)},
            {"a_exact", to_string(a_exact)},
            {"lambda", lambda_number(model->lambda().lambda)},
            {"N", n},
            {"log_series", series::to_strings(series::to_real(log))},
            {"phi", table},
            {"checks", Json{{"log_normalized", verdict(log[0] == 0 && (n < 1 || log[1] == 1))},
                            {"inverse", verdict(inverse_ok)},
                            {"leading_terms", verdict(checks.leading_terms)},
                            {"unit", verdict(checks.unit)},
                            {"commutativity", verdict(checks.commutative)},
                            {"associativity", verdict(checks.associative)},
                            {"order", checks.order},
                            {"associativity_order", checks.associativity_order}}}},
       out);
  return inverse_ok && checks.all_pass() ? kSuccess : kDomainRejection;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const auto model = load_model(cfg);
  const ProbabilityDistribution dist = load_distribution(cfg);
  const IharaEntropy entropy(model, resolve_a(cfg, *model));
  const Real q = cfg.q.value_or(2.0L);
  emit(cfg,
       Json{{"a", lambda_number(entropy.a())},
            {"lambda", lambda_number(model->lambda().lambda)},
            {"ihara", real_number(entropy.entropy(dist).entropy)},
            {"shannon", real_number(shannon_entropy(dist))},
            {"tsallis", Json{{"q", real_number(q)}, {"value", real_number(tsallis_entropy(dist, q))}}}},
       out);
  return kSuccess;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ihara zeta function and Ihara entropy of admissible graphs"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  double a = 0, a_fraction = 0, tol = 1e-12, q = 0;

  auto add_common = [&](CLI::App* sub, bool needs_dist, bool needs_q) {
    sub->add_option("--graph", cfg.graph_path, "edge-list file")->required();
    sub->add_option("--order", cfg.order, "truncation order N")->check(CLI::PositiveNumber);
    auto* a_opt = sub->add_option("--a", a, "scaling parameter a in (0, 1/lambda)");
    auto* f_opt = sub->add_option("--a-frac", a_fraction, "a as a fraction of 1/lambda");
    a_opt->excludes(f_opt);
    sub->add_option("--tol", tol, "power-iteration and bisection tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    if (needs_dist) sub->add_option("--dist", cfg.dist_path, "distribution file (JSON array or text)")->required();
    if (needs_q) sub->add_option("--q", q, "Tsallis index");
  };

  auto* validate = app.add_subcommand("validate", "check admissibility");
  validate->add_option("--graph", cfg.graph_path, "edge-list file")->required();
  validate->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* zeta = app.add_subcommand("zeta", "zeta coefficients and Perron root");
  add_common(zeta, false, false);
  auto* entropy = app.add_subcommand("entropy", "Ihara entropy of a distribution");
  add_common(entropy, true, true);
  auto* max = app.add_subcommand("max", "maximizer of the entropy term s(p)");
  add_common(max, false, false);
  auto* primes = app.add_subcommand("primes", "enumerate prime cycles");
  primes->add_option("--graph", cfg.graph_path, "edge-list file")->required();
  primes->add_option("--max-length", cfg.max_length, "longest prime to list")->check(CLI::PositiveNumber);
  primes->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* group_law = app.add_subcommand("group-law", "formal group law coefficients and axiom checks");
  add_common(group_law, false, false);
  auto* compare = app.add_subcommand("compare", "Ihara, Shannon and Tsallis entropies");
  add_common(compare, true, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  auto given = [](CLI::App* sub, const char* name) {
    try {
      return sub->count(name) > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  CLI::App* chosen = app.get_subcommands().front();
  if (given(chosen, "--a")) cfg.a = a;
  if (given(chosen, "--a-frac")) cfg.a_fraction = a_fraction;
  if (given(chosen, "--q")) cfg.q = q;
  cfg.tol = tol;
  cfg.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;

  try {
    if (chosen == validate) return cmd_validate(cfg, out);
    if (chosen == zeta) return cmd_zeta(cfg, out);
    if (chosen == entropy) return cmd_entropy(cfg, out);
    if (chosen == max) return cmd_max(cfg, out);
    if (chosen == primes) return cmd_primes(cfg, out);
    if (chosen == group_law) return cmd_group_law(cfg, out);
    if (chosen == compare) return cmd_compare(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? kInputError : kDomainRejection;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace ihara::cli
