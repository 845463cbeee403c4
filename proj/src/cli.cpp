#include "trigapprox/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "trigapprox/analysis.hpp"
#include "trigapprox/functions.hpp"
#include "trigapprox/kernels.hpp"

namespace trigapprox::cli {

namespace {

constexpr double kPi = std::numbers::pi;

double to_double(std::string_view text, std::string_view flag) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError(fmt::format("{}: malformed number '{}'", flag, text));
  }
  return v;
}

int to_int(std::string_view text, std::string_view flag) {
  int v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError(fmt::format("{}: malformed integer '{}'", flag, text));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = text.find(sep);
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text = text.substr(pos + 1);
  }
  return out;
}

std::vector<double> parse_list(const std::string& text, std::string_view flag) {
  std::vector<double> out;
  for (auto item : split(text, ',')) out.push_back(to_double(item, flag));
  return out;
}

// "1..5" or "1,3,7" or a mix such as "1..3,8".
std::vector<int> parse_int_ranges(const std::string& text, std::string_view flag) {
  std::vector<int> out;
  for (auto item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(to_int(item, flag));
      continue;
    }
    const int lo = to_int(item.substr(0, dots), flag);
    const int hi = to_int(item.substr(dots + 2), flag);
    if (hi < lo) throw UsageError(fmt::format("{}: empty range '{}'", flag, item));
    for (int m = lo; m <= hi; ++m) out.push_back(m);
  }
  return out;
}

std::string num(double v) { return fmt::format("{:.17g}", v); }

// One output table; rendered as CSV or as a JSON document.
using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        std::visit([&os](const auto& c) {
          using C = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<C, double>) os << num(c);
          else os << c;
        }, row[i]);
      }
      os << '\n';
    }
  }

  void write_json(std::ostream& os) const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["columns"] = columns;
    auto rows_json = nlohmann::json::array();
    for (const auto& row : rows) {
      auto r = nlohmann::json::array();
      for (const auto& c : row) std::visit([&r](const auto& v) { r.push_back(v); }, c);
      rows_json.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows_json);
    os << doc.dump(2) << '\n';
  }
};

const char* subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::Converge: return "converge";
    case Subcommand::Lemma2: return "lemma2";
    case Subcommand::Counterexample: return "counterexample";
    case Subcommand::Inequalities: return "inequalities";
    case Subcommand::Coeffs: return "coeffs";
    case Subcommand::Lewitan: return "lewitan";
  }
  return "?";
}

struct RawOptions {
  std::string fn;
  std::string p;
  std::string tau;
  std::string sigma;
  std::string delta;
  std::string m;
  std::string x;
  std::string terms;
  std::string mode;
  std::string n_points;
  std::string output;
  std::string format = "csv";
  std::string abs_tol;
  std::string rel_tol;
  std::string max_depth;
};

void add_common(CLI::App* app, RawOptions& raw) {
  app->add_option("-o,--output", raw.output, "Write output to this file instead of standard output");
  app->add_option("--format", raw.format, "Output format: csv or json");
  app->add_option("--abs-tol", raw.abs_tol, "Quadrature absolute tolerance (default 1e-10)");
  app->add_option("--rel-tol", raw.rel_tol, "Quadrature relative tolerance (default 1e-10)");
  app->add_option("--max-depth", raw.max_depth, "Quadrature bisection depth limit (default 50)");
}

void require_positive(const std::vector<double>& values, std::string_view flag) {
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(fmt::format("{}: values must be positive, got {}", flag, v));
  }
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Approximation of bandlimited functions by truncated trigonometric sums", "trigapprox"};
  app.require_subcommand(1);
  RawOptions raw;

  auto* converge = app.add_subcommand("converge", "L^p and sup-norm error of phi_{f,tau} along a tau ladder");
  converge->add_option("--fn", raw.fn, "Catalog function id, e.g. sinc:sigma=1 (required)");
  converge->add_option("--p", raw.p, "Exponent, 1 < p < inf (default 2)");
  converge->add_option("--tau", raw.tau, "Comma-separated increasing tau list (default 10,20,40,80)");

  auto* lemma2 = app.add_subcommand("lemma2", "Kernel-gap scan against its uniform bound");
  lemma2->add_option("--sigma", raw.sigma, "Comma-separated sigma list");
  lemma2->add_option("--tau", raw.tau, "Comma-separated tau list");
  lemma2->add_option("--delta", raw.delta, "Comma-separated delta list, 0 <= delta < 1");
  lemma2->add_option("--n-points", raw.n_points, "Minimum grid size (>= 1000)");

  auto* counter = app.add_subcommand("counterexample", "Im (f - f_tau)(tau) for f = e^{ix}, tau = pi/2 + 2 pi m");
  counter->add_option("--m", raw.m, "m values: list and/or ranges such as 1..5 (default 1..10)");

  auto* ineq = app.add_subcommand("inequalities", "Plancherel-Polya and Nikolskii inequality checks");
  ineq->add_option("--fn", raw.fn, "Semicolon-separated function ids (default sinc:sigma=1;fejer:sigma=2)");
  ineq->add_option("--p", raw.p, "Exponent for the L^p checks (default 2)");
  ineq->add_option("--tau", raw.tau, "tau of the approximant used for the polynomial check (default 10)");

  auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficients c_{k,tau}");
  coeffs->add_option("--fn", raw.fn, "Catalog function id")->required();
  coeffs->add_option("--tau", raw.tau, "tau > 0")->required();

  auto* lew = app.add_subcommand("lewitan", "Lewitan polynomial partial sums");
  lew->add_option("--fn", raw.fn, "Catalog function id")->required();
  lew->add_option("--tau", raw.tau, "tau > 0")->required();
  lew->add_option("--x", raw.x, "Comma-separated evaluation points")->required();
  lew->add_option("--K", raw.terms, "Truncation |k| <= K; 0 picks K from the decay envelope (default 0)");
  lew->add_option("--mode", raw.mode, "Weights: verbatim or classical (default verbatim)");

  for (auto* sub : {converge, lemma2, counter, ineq, coeffs, lew}) add_common(sub, raw);

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    // Subcommand-level --help surfaces here as well.
    if (e.get_exit_code() == 0) throw HelpRequested(app.help());
    throw UsageError(e.what());
  }

  RunConfig cfg;
  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "converge") cfg.subcommand = Subcommand::Converge;
  else if (name == "lemma2") cfg.subcommand = Subcommand::Lemma2;
  else if (name == "counterexample") cfg.subcommand = Subcommand::Counterexample;
  else if (name == "inequalities") cfg.subcommand = Subcommand::Inequalities;
  else if (name == "coeffs") cfg.subcommand = Subcommand::Coeffs;
  else cfg.subcommand = Subcommand::Lewitan;

  if (raw.format == "csv") cfg.format = Format::Csv;
  else if (raw.format == "json") cfg.format = Format::Json;
  else throw UsageError(fmt::format("--format: expected csv or json, got '{}'", raw.format));
  if (!raw.output.empty()) cfg.output_path = raw.output;

  if (!raw.abs_tol.empty()) cfg.quad.abs_tol = to_double(raw.abs_tol, "--abs-tol");
  if (!raw.rel_tol.empty()) cfg.quad.rel_tol = to_double(raw.rel_tol, "--rel-tol");
  if (!raw.max_depth.empty()) cfg.quad.max_depth = to_int(raw.max_depth, "--max-depth");
  try {
    cfg.quad.validate();
  } catch (const DomainError& e) {
    throw UsageError(fmt::format("quadrature options: {}", e.what()));
  }

  if (!raw.p.empty()) cfg.p = to_double(raw.p, "--p");

  // Function ids are resolved now so unknown ids fail before any computation.
  if (!raw.fn.empty()) {
    if (cfg.subcommand == Subcommand::Inequalities) {
      for (auto id : split(raw.fn, ';')) cfg.function_ids.emplace_back(id);
    } else {
      cfg.function_ids.push_back(raw.fn);
    }
    for (const auto& id : cfg.function_ids) {
      try {
        (void)parse_function_id(id);
      } catch (const DomainError& e) {
        throw UsageError(fmt::format("--fn: {}", e.what()));
      }
    }
  }

  switch (cfg.subcommand) {
    case Subcommand::Converge: {
      if (!(cfg.p > 1.0) || !std::isfinite(cfg.p)) throw UsageError("--p: p must satisfy 1 < p < ∞");
      cfg.taus = raw.tau.empty() ? std::vector<double>{10, 20, 40, 80} : parse_list(raw.tau, "--tau");
      require_positive(cfg.taus, "--tau");
      for (std::size_t i = 1; i < cfg.taus.size(); ++i) {
        if (!(cfg.taus[i] > cfg.taus[i - 1])) throw UsageError("--tau: values must be strictly increasing");
      }
      if (cfg.function_ids.empty()) throw UsageError("--fn is required");
      const auto f = parse_function_id(cfg.function_ids.front());
      if (!f.membership().contains(cfg.p)) {
        throw UsageError(fmt::format("--p: {} is not in the membership set {} of {}", cfg.p,
                                     f.membership().describe(), f.id()));
      }
      break;
    }
    case Subcommand::Lemma2: {
      cfg.sigmas = raw.sigma.empty() ? std::vector<double>{0.5, 1.0, kPi, 5.0} : parse_list(raw.sigma, "--sigma");
      cfg.taus = raw.tau.empty() ? std::vector<double>{1, 5, 10, 40} : parse_list(raw.tau, "--tau");
      cfg.deltas = raw.delta.empty() ? std::vector<double>{0.0, 0.25, 0.5, 0.9} : parse_list(raw.delta, "--delta");
      require_positive(cfg.sigmas, "--sigma");
      require_positive(cfg.taus, "--tau");
      for (double d : cfg.deltas) {
        if (!(d >= 0.0 && d < 1.0)) throw UsageError(fmt::format("--delta: delta must satisfy 0 <= delta < 1, got {}", d));
      }
      if (!raw.n_points.empty()) cfg.n_points = to_int(raw.n_points, "--n-points");
      if (cfg.n_points < 1000) throw UsageError("--n-points: must be >= 1000");
      break;
    }
    case Subcommand::Counterexample: {
      cfg.ms = raw.m.empty() ? parse_int_ranges("1..10", "--m") : parse_int_ranges(raw.m, "--m");
      for (int m : cfg.ms) {
        if (m < 1) throw UsageError(fmt::format("--m: m must be a positive integer, got {}", m));
      }
      break;
    }
    case Subcommand::Inequalities: {
      if (cfg.function_ids.empty()) cfg.function_ids = {"sinc:sigma=1", "fejer:sigma=2"};
      if (!(cfg.p >= 1.0) || !std::isfinite(cfg.p)) throw UsageError("--p: p must satisfy 1 <= p < ∞");
      cfg.taus = raw.tau.empty() ? std::vector<double>{10} : parse_list(raw.tau, "--tau");
      require_positive(cfg.taus, "--tau");
      break;
    }
    case Subcommand::Coeffs: {
      cfg.taus = parse_list(raw.tau, "--tau");
      if (cfg.taus.size() != 1) throw UsageError("--tau: coeffs takes a single tau");
      require_positive(cfg.taus, "--tau");
      break;
    }
    case Subcommand::Lewitan: {
      cfg.taus = parse_list(raw.tau, "--tau");
      if (cfg.taus.size() != 1) throw UsageError("--tau: lewitan takes a single tau");
      require_positive(cfg.taus, "--tau");
      cfg.xs = parse_list(raw.x, "--x");
      if (!raw.terms.empty()) cfg.terms = to_int(raw.terms, "--K");
      if (cfg.terms < 0) throw UsageError("--K: must be >= 0");
      if (raw.mode.empty() || raw.mode == "verbatim") cfg.lewitan_mode = LewitanMode::Verbatim;
      else if (raw.mode == "classical") cfg.lewitan_mode = LewitanMode::Classical;
      else throw UsageError(fmt::format("--mode: expected verbatim or classical, got '{}'", raw.mode));
      break;
    }
  }
  return cfg;
}

namespace {

std::string join_params(std::initializer_list<std::pair<const char*, double>> items) {
  std::string out;
  for (const auto& [k, v] : items) {
    if (!out.empty()) out += ';';
    out += fmt::format("{}={}", k, std::isinf(v) ? std::string("inf") : fmt::format("{}", v));
  }
  return out;
}

Table run_converge(const RunConfig& cfg) {
  Table t{"converge", {"tau", "p", "interior", "interior_err", "tail", "total", "sup_cert", "sup_grid"}, {}};
  const auto f = parse_function_id(cfg.function_ids.front());
  for (const auto& r : convergence_study(f, cfg.p, cfg.taus, cfg.quad)) {
    t.rows.push_back({r.tau, r.p, r.interior_error.value, r.interior_error.error_bound, r.tail_error.value,
                      r.total_error, r.sup_error->certified_bound, r.sup_error->grid_max});
  }
  return t;
}

Table run_lemma2(const RunConfig& cfg) {
  Table t{"lemma2", {"sigma", "tau", "delta", "n_points", "observed_max", "argmax", "bound", "ratio"}, {}};
  for (double sigma : cfg.sigmas) {
    for (double tau : cfg.taus) {
      for (double delta : cfg.deltas) {
        const auto r = kernel_gap_scan(sigma, tau, delta, cfg.n_points);
        t.rows.push_back({r.sigma, r.tau, r.delta, r.n_points, r.observed_max, r.argmax, r.bound, r.ratio()});
      }
    }
  }
  return t;
}

Table run_counterexample(const RunConfig& cfg) {
  Table t{"counterexample", {"m", "tau", "imag_gap"}, {}};
  for (const auto& r : counterexample_run(cfg.ms)) t.rows.push_back({std::int64_t{r.m}, r.tau, r.imag_gap});
  return t;
}

Table run_inequalities(const RunConfig& cfg) {
  Table t{"inequalities", {"check", "function", "params", "lhs", "rhs", "margin"}, {}};
  auto add = [&t](const char* check, const std::string& id, std::string params, const InequalityCheck& c) {
    t.rows.push_back({std::string(check), id, std::move(params), c.lhs, c.rhs, c.margin});
  };
  for (const auto& id : cfg.function_ids) {
    const auto f = parse_function_id(id);
    const double p = cfg.p;
    if (f.supports_complex() && f.parts().line_decay && f.membership().contains(p) &&
        f.decay().exponent * p > 1.0) {
      for (double y : {0.0, 0.5, 1.0, 2.0}) {
        add("plancherel_polya", f.id(), join_params({{"p", p}, {"y", y}}), check_plancherel_polya(f, y, p, cfg.quad));
      }
    }
    std::vector<std::pair<double, double>> pairs;
    for (double r1 : {1.0, 2.0, p, kInf}) {
      if (!f.membership().contains(r1)) continue;
      for (double r2 : {r1, 2.0, 4.0, kInf}) {
        if (r2 < r1) continue;
        if (std::isfinite(r2) && f.decay().exponent * r2 <= 1.0) continue;
        if (std::find(pairs.begin(), pairs.end(), std::pair{r1, r2}) == pairs.end()) pairs.emplace_back(r1, r2);
      }
    }
    for (const auto& [r1, r2] : pairs) {
      add("nikolskii", f.id(), join_params({{"r1", r1}, {"r2", r2}}), check_nikolskii(f, r1, r2, cfg.quad));
    }
    for (double tau : cfg.taus) {
      const auto approx = fourier_coefficients(f, tau, cfg.quad);
      if (approx.degree() < 1) continue;
      for (double q : {1.0, 2.0, p}) {
        add("poly_nikolskii", f.id(), join_params({{"tau", tau}, {"p", q}}), check_poly_nikolskii(approx, q, cfg.quad));
        if (q == p) break;
      }
    }
  }
  return t;
}

Table run_lewitan(const RunConfig& cfg) {
  Table t{"lewitan", {"x", "re", "im", "tail_bound", "K"}, {}};
  const auto f = parse_function_id(cfg.function_ids.front());
  for (double x : cfg.xs) {
    const auto r = lewitan(f, cfg.taus.front(), x, cfg.terms, cfg.lewitan_mode);
    t.rows.push_back({x, r.value.real(), r.value.imag(), r.tail_bound, r.terms});
  }
  return t;
}

void write_coeffs(const RunConfig& cfg, std::ostream& os) {
  const auto f = parse_function_id(cfg.function_ids.front());
  const auto a = fourier_coefficients(f, cfg.taus.front(), cfg.quad);
  if (cfg.format == Format::Json) {
    os << a.to_json();
    return;
  }
  Table t{"coeffs", {"k", "re", "im", "abs_error"}, {}};
  for (std::int64_t k = -a.degree(); k <= a.degree(); ++k) {
    const cplx c = a.coefficient(k);
    t.rows.push_back({k, c.real(), c.imag(), cfg.quad.abs_tol});
  }
  t.write_csv(os);
}

void dispatch(const RunConfig& cfg, std::ostream& os) {
  if (cfg.subcommand == Subcommand::Coeffs) {
    write_coeffs(cfg, os);
    return;
  }
  Table t;
  switch (cfg.subcommand) {
    case Subcommand::Converge: t = run_converge(cfg); break;
    case Subcommand::Lemma2: t = run_lemma2(cfg); break;
    case Subcommand::Counterexample: t = run_counterexample(cfg); break;
    case Subcommand::Inequalities: t = run_inequalities(cfg); break;
    case Subcommand::Lewitan: t = run_lewitan(cfg); break;
    case Subcommand::Coeffs: break;
  }
  if (cfg.format == Format::Json) t.write_json(os);
  else t.write_csv(os);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    // Render fully before touching the output file so failures leave no partial output.
    std::ostringstream buffer;
    dispatch(config, buffer);
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) throw Error(fmt::format("cannot open '{}' for writing", *config.output_path));
      file << buffer.str();
      if (!file) throw Error(fmt::format("failed writing '{}'", *config.output_path));
    } else {
      out << buffer.str();
    }
    return 0;
  } catch (const std::exception& e) {
    err << "trigapprox " << subcommand_name(config.subcommand) << ": " << e.what() << '\n';
    return 1;
  }
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun 'trigapprox --help' for the list of subcommands and flags\n";
    return 2;
  }
  return run(cfg, out, err);
}

}  // namespace trigapprox::cli
