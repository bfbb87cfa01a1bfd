// Command-line front end: table ingestion, evidence reports, and plot-data
// emission in JSON or RFC-4180 CSV. Exit codes: 0 success, 1 computation-
// domain error, 2 usage error. Errors go to stderr as a JSON record
// {"error": {"code": ..., "message": ...}}.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "swingbf/ci_intrinsic.hpp"
#include "swingbf/default_test.hpp"
#include "swingbf/frequentist.hpp"
#include "swingbf/full_intrinsic.hpp"
#include "swingbf/model_core.hpp"
#include "swingbf/sensitivity.hpp"

namespace {

using nlohmann::ordered_json;
using namespace swingbf;

// Command-line misuse distinct from CLI11's own parse failures (unknown
// method names, empty method lists, unreadable input files, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest decimal representation that round-trips to the same double; used
// for every numeric field in machine-readable output so CSV and JSON carry
// bit-identical values.
std::string format_double(double v) {
  std::array<char, 64> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), ptr);
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

class CsvBuilder {
 public:
  explicit CsvBuilder(const std::vector<std::string>& header) { row(header); }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i != 0) text_ += ',';
      text_ += csv_escape(fields[i]);
    }
    text_ += "\r\n";
  }

  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

// Space-aligned text table for --human output.
class HumanBuilder {
 public:
  explicit HumanBuilder(const std::vector<std::string>& header) { row(header); }

  void row(const std::vector<std::string>& fields) { rows_.push_back(fields); }

  std::string text() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i)
        width[i] = std::max(width[i], r[i].size());
    }
    std::string out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size())
          line.append(width[i] - r[i].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line;
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void write_output(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + path);
  f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!f) throw UsageError("failed writing output file: " + path);
}

void emit_error(const std::string& code, const std::string& message) {
  ordered_json record;
  record["error"] = ordered_json{{"code", code}, {"message", message}};
  std::string line = record.dump() + "\n";
  std::fwrite(line.data(), 1, line.size(), stderr);
}

// ---------------------------------------------------------------------------
// Shared option groups.

struct IoOptions {
  std::string format = "json";
  std::string output;
  bool human = false;
};

void add_io_options(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--format", io.format, "Output format (json|csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", io.output,
                  "Write the report to this file instead of standard output");
  cmd->add_flag("--human", io.human,
                "Aligned text output with probabilities rounded to 4 places");
}

struct HyperOptions {
  DirichletHyper a;
  CLI::Option* opts[4] = {nullptr, nullptr, nullptr, nullptr};
};

void add_hyper_options(CLI::App* cmd, HyperOptions& h) {
  h.opts[0] = cmd->add_option("--a00", h.a.a00, "Dirichlet hyperparameter a00")
                  ->capture_default_str();
  h.opts[1] = cmd->add_option("--a01", h.a.a01, "Dirichlet hyperparameter a01")
                  ->capture_default_str();
  h.opts[2] = cmd->add_option("--a10", h.a.a10, "Dirichlet hyperparameter a10")
                  ->capture_default_str();
  h.opts[3] = cmd->add_option("--a11", h.a.a11, "Dirichlet hyperparameter a11")
                  ->capture_default_str();
}

struct TableOptions {
  ContingencyTable n;
  std::string file;
  CLI::Option* opts[4] = {nullptr, nullptr, nullptr, nullptr};
};

void add_table_options(CLI::App* cmd, TableOptions& t) {
  t.opts[0] = cmd->add_option("--n00", t.n.n00, "Count of (0,0) pairs");
  t.opts[1] = cmd->add_option("--n01", t.n.n01, "Count of (0,1) pairs");
  t.opts[2] = cmd->add_option("--n10", t.n.n10, "Count of (1,0) pairs");
  t.opts[3] = cmd->add_option("--n11", t.n.n11, "Count of (1,1) pairs");
  cmd->add_option("--table-json", t.file,
                  "JSON file with keys n00,n01,n10,n11 (a00..a11 optional); "
                  "explicit flags override file values");
}

// Loads counts (and optional hyperparameters) from --table-json; flags that
// were passed explicitly win over file values.
void apply_table_file(TableOptions& t, HyperOptions& h) {
  if (t.file.empty()) return;
  std::ifstream f(t.file);
  if (!f) throw UsageError("cannot read table file: " + t.file);
  ordered_json doc;
  try {
    doc = ordered_json::parse(f);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid table JSON: ") + e.what());
  }
  const char* count_keys[4] = {"n00", "n01", "n10", "n11"};
  std::int64_t* count_slots[4] = {&t.n.n00, &t.n.n01, &t.n.n10, &t.n.n11};
  for (int i = 0; i < 4; ++i) {
    if (!doc.contains(count_keys[i]))
      throw UsageError(std::string("table file missing key: ") + count_keys[i]);
    if (!doc[count_keys[i]].is_number_integer())
      throw UsageError(std::string("table key is not an integer: ") +
                       count_keys[i]);
    if (t.opts[i]->count() == 0)
      *count_slots[i] = doc[count_keys[i]].get<std::int64_t>();
  }
  const char* hyper_keys[4] = {"a00", "a01", "a10", "a11"};
  double* hyper_slots[4] = {&h.a.a00, &h.a.a01, &h.a.a10, &h.a.a11};
  for (int i = 0; i < 4; ++i) {
    if (!doc.contains(hyper_keys[i])) continue;
    if (!doc[hyper_keys[i]].is_number())
      throw UsageError(std::string("hyperparameter key is not numeric: ") +
                       hyper_keys[i]);
    if (h.opts[i]->count() == 0)
      *hyper_slots[i] = doc[hyper_keys[i]].get<double>();
  }
}

ordered_json table_to_json(const ContingencyTable& n) {
  return ordered_json{{"n00", n.n00}, {"n01", n.n01}, {"n10", n.n10},
                      {"n11", n.n11}};
}

ordered_json hyper_to_json(const DirichletHyper& a) {
  return ordered_json{{"a00", a.a00}, {"a01", a.a01}, {"a10", a.a10},
                      {"a11", a.a11}};
}

// Validates the requested method names against `allowed` and returns them in
// canonical order, deduplicated.
std::vector<std::string> canonical_methods(
    const std::vector<std::string>& requested,
    const std::vector<std::string>& allowed) {
  std::set<std::string> want;
  for (const auto& m : requested) {
    if (m.empty()) continue;
    if (std::find(allowed.begin(), allowed.end(), m) == allowed.end())
      throw UsageError("unknown method: " + m);
    want.insert(m);
  }
  if (want.empty()) throw UsageError("at least one method must be selected");
  std::vector<std::string> out;
  for (const auto& m : allowed)
    if (want.count(m) != 0) out.push_back(m);
  return out;
}

McnemarVariant parse_variant(const std::string& s) {
  if (s == "cc" || s == "chi_square_cc") return McnemarVariant::chi_square_cc;
  if (s == "plain" || s == "chi_square_plain")
    return McnemarVariant::chi_square_plain;
  if (s == "exact" || s == "exact_binomial")
    return McnemarVariant::exact_binomial;
  throw UsageError("unknown mcnemar variant: " + s);
}

const char* variant_name(McnemarVariant v) {
  switch (v) {
    case McnemarVariant::chi_square_cc: return "chi_square_cc";
    case McnemarVariant::chi_square_plain: return "chi_square_plain";
    case McnemarVariant::exact_binomial: return "exact_binomial";
  }
  return "chi_square_cc";
}

// ---------------------------------------------------------------------------
// test

struct TestArgs {
  TableOptions table;
  HyperOptions hyper;
  IoOptions io;
  std::vector<std::string> methods{"default", "ci", "intrinsic", "mcnemar"};
  std::int64_t x_triangle = -1;   // -1: default to the table's swing total
  std::int64_t x_plus_plus = -1;  // -1: default to the table's grand total
  std::string variant = "chi_square_cc";
  bool favor_null = false;
};

int run_test(TestArgs& args) {
  apply_table_file(args.table, args.hyper);
  auto methods = canonical_methods(
      args.methods, {"default", "ci", "intrinsic", "mcnemar"});
  const McnemarVariant variant = parse_variant(args.variant);
  const ContingencyTable& n = args.table.n;
  const DirichletHyper& a = args.hyper.a;
  n.validate();
  a.validate();
  const std::int64_t x_tri =
      args.x_triangle < 0 ? n.n_triangle() : args.x_triangle;
  const std::int64_t x_pp =
      args.x_plus_plus < 0 ? n.n_plus_plus() : args.x_plus_plus;

  const char* lbf_key = args.favor_null ? "log_bf_h0_vs_h" : "log_bf_h_vs_h0";
  const char* bf_key = args.favor_null ? "bf_h0_vs_h" : "bf_h_vs_h0";

  ordered_json results = ordered_json::array();
  CsvBuilder csv({"method", "log_bf", "bf", "pr_h0", "x_triangle",
                  "x_plus_plus", "statistic", "p_value"});
  HumanBuilder human({"method", "log BF", "BF", "Pr(H0|n)", "statistic",
                      "p-value"});

  for (const auto& m : methods) {
    if (m == "mcnemar") {
      FrequentistResult r = mcnemar_test(n, variant);
      ordered_json rec;
      rec["method"] = "mcnemar";
      rec["variant"] = variant_name(variant);
      rec["statistic"] = r.statistic;
      rec["p_value"] = r.p_value;
      results.push_back(rec);
      csv.row({"mcnemar", "", "", "", "", "", format_double(r.statistic),
               format_double(r.p_value)});
      human.row({"mcnemar", "", "", "", fixed4(r.statistic),
                 fixed4(r.p_value)});
      continue;
    }
    ordered_json rec;
    rec["method"] = m;
    double log_bf = 0.0;
    Method method = Method::default_bf;
    std::optional<ImaginaryData> cfg;
    std::string csv_xtri;
    std::string csv_xpp;
    if (m == "default") {
      log_bf = default_log_bf(n, a);
    } else if (m == "ci") {
      log_bf = ci_log_bf(n, a, x_tri);
      method = Method::ci_intrinsic;
      cfg = ImaginaryData{0, x_tri, 0};
      rec["x_triangle"] = x_tri;
      csv_xtri = std::to_string(x_tri);
    } else {
      log_bf = i_log_bf(n, a, x_pp);
      method = Method::i_intrinsic;
      cfg = ImaginaryData{0, 0, x_pp};
      rec["x_plus_plus"] = x_pp;
      csv_xpp = std::to_string(x_pp);
    }
    EvidenceSummary s = to_summary(log_bf, method, cfg);
    const double out_lbf =
        args.favor_null ? -s.log_bf_h_vs_h0 : s.log_bf_h_vs_h0;
    rec[lbf_key] = out_lbf;
    rec[bf_key] = std::exp(out_lbf);
    rec["pr_h0"] = s.posterior_prob_h0;
    results.push_back(rec);
    csv.row({m, format_double(out_lbf), format_double(std::exp(out_lbf)),
             format_double(s.posterior_prob_h0), csv_xtri, csv_xpp, "", ""});
    human.row({m, fixed4(out_lbf), fixed4(std::exp(out_lbf)),
               fixed4(s.posterior_prob_h0), "", ""});
  }

  ordered_json report;
  report["request"] = ordered_json{
      {"command", "test"},       {"table", table_to_json(n)},
      {"hyper", hyper_to_json(a)}, {"methods", methods},
      {"x_triangle", x_tri},     {"x_plus_plus", x_pp},
      {"mcnemar_variant", variant_name(variant)},
      {"favor_null", args.favor_null}, {"format", args.io.format}};
  report["results"] = results;

  std::string payload = args.io.human ? human.text()
                        : args.io.format == "csv" ? csv.text()
                                                  : report.dump(2) + "\n";
  write_output(payload, args.io.output);
  return 0;
}

// ---------------------------------------------------------------------------
// sensitivity

struct SensitivityArgs {
  TableOptions table;
  HyperOptions hyper;
  IoOptions io;
  std::vector<std::string> methods{"ci", "intrinsic"};
  int q_points = 21;
  std::vector<double> q_grid;
  CLI::Option* q_grid_opt = nullptr;
};

int run_sensitivity(SensitivityArgs& args) {
  apply_table_file(args.table, args.hyper);
  auto methods = canonical_methods(args.methods, {"ci", "intrinsic"});
  const ContingencyTable& n = args.table.n;
  const DirichletHyper& a = args.hyper.a;
  n.validate();
  a.validate();

  std::vector<double> grid;
  if (args.q_grid_opt != nullptr && args.q_grid_opt->count() > 0) {
    grid = args.q_grid;
  } else {
    if (args.q_points < 2) throw UsageError("--q-points must be at least 2");
    grid.reserve(static_cast<std::size_t>(args.q_points));
    for (int i = 0; i < args.q_points; ++i)
      grid.push_back(static_cast<double>(i) /
                     static_cast<double>(args.q_points - 1));
  }

  ordered_json results = ordered_json::array();
  CsvBuilder csv({"method", "q", "x", "pr_h0"});
  HumanBuilder human({"method", "q", "x", "Pr(H0|n)"});
  for (const auto& m : methods) {
    const SensitivityMethod sm = m == "ci" ? SensitivityMethod::ci_intrinsic
                                           : SensitivityMethod::i_intrinsic;
    SensitivityCurve curve = sensitivity_curve(n, a, sm, grid);
    for (const SensitivityPoint& p : curve.points) {
      results.push_back(ordered_json{{"method", m},
                                     {"q", p.q},
                                     {"x", p.x},
                                     {"pr_h0", p.posterior_prob_h0}});
      csv.row({m, format_double(p.q), std::to_string(p.x),
               format_double(p.posterior_prob_h0)});
      human.row({m, fixed4(p.q), std::to_string(p.x),
                 fixed4(p.posterior_prob_h0)});
    }
  }

  ordered_json report;
  report["request"] = ordered_json{{"command", "sensitivity"},
                                   {"table", table_to_json(n)},
                                   {"hyper", hyper_to_json(a)},
                                   {"methods", methods},
                                   {"q_grid", grid},
                                   {"format", args.io.format}};
  report["results"] = results;

  std::string payload = args.io.human ? human.text()
                        : args.io.format == "csv" ? csv.text()
                                                  : report.dump(2) + "\n";
  write_output(payload, args.io.output);
  return 0;
}

// ---------------------------------------------------------------------------
// prior-density

struct PriorDensityArgs {
  HyperOptions hyper;
  IoOptions io;
  std::string mode;
  std::int64_t x_triangle = 0;
  std::int64_t x_plus_plus = 0;
  int grid_points = -1;  // -1: 513 for ci, 201 for intrinsic
};

int run_prior_density(PriorDensityArgs& args) {
  const DirichletHyper& a = args.hyper.a;
  a.validate();
  if (args.mode != "ci" && args.mode != "intrinsic")
    throw UsageError("--mode must be ci or intrinsic");

  ordered_json results;
  CsvBuilder csv({"kind", "eta", "theta", "density"});
  HumanBuilder human({"kind", "eta", "theta", "density"});

  int points = args.grid_points;
  if (args.mode == "ci") {
    if (points < 0) points = 513;
    if (points < 2) throw UsageError("--grid-points must be at least 2");
    BetaMixture mix = ci_prior(a, args.x_triangle);
    std::vector<double> grid = grid_midpoints(points);
    ordered_json curve = ordered_json::array();
    for (double theta : grid) {
      const double d = mixture_density(mix, theta);
      curve.push_back(ordered_json{{"theta", theta}, {"density", d}});
      csv.row({"ci", "", format_double(theta), format_double(d)});
      human.row({"ci", "", fixed4(theta), fixed4(d)});
    }
    results = ordered_json{{"mode", "ci"}, {"curve", curve}};
  } else {
    if (points < 0) points = 201;
    if (points < 2) throw UsageError("--grid-points must be at least 2");
    IntrinsicPriorGrid grid = i_prior_grid(a, args.x_plus_plus, points);
    ordered_json joint = ordered_json::array();
    for (std::size_t i = 0; i < grid.eta_grid.size(); ++i) {
      for (std::size_t j = 0; j < grid.theta_grid.size(); ++j) {
        joint.push_back(ordered_json{{"eta", grid.eta_grid[i]},
                                     {"theta", grid.theta_grid[j]},
                                     {"density", grid.density[i][j]}});
        csv.row({"joint", format_double(grid.eta_grid[i]),
                 format_double(grid.theta_grid[j]),
                 format_double(grid.density[i][j])});
        human.row({"joint", fixed4(grid.eta_grid[i]),
                   fixed4(grid.theta_grid[j]), fixed4(grid.density[i][j])});
      }
    }
    std::vector<double> etam =
        i_prior_eta_marginal(a, args.x_plus_plus, grid.eta_grid);
    ordered_json eta_marginal = ordered_json::array();
    for (std::size_t i = 0; i < grid.eta_grid.size(); ++i) {
      eta_marginal.push_back(
          ordered_json{{"eta", grid.eta_grid[i]}, {"density", etam[i]}});
      csv.row({"eta_marginal", format_double(grid.eta_grid[i]), "",
               format_double(etam[i])});
      human.row({"eta_marginal", fixed4(grid.eta_grid[i]), "",
                 fixed4(etam[i])});
    }
    BetaMixture thm = i_prior_theta_marginal(a, args.x_plus_plus);
    ordered_json theta_marginal = ordered_json::array();
    for (double theta : grid.theta_grid) {
      const double d = mixture_density(thm, theta);
      theta_marginal.push_back(
          ordered_json{{"theta", theta}, {"density", d}});
      csv.row({"theta_marginal", "", format_double(theta), format_double(d)});
      human.row({"theta_marginal", "", fixed4(theta), fixed4(d)});
    }
    results = ordered_json{{"mode", "intrinsic"},
                           {"joint", joint},
                           {"eta_marginal", eta_marginal},
                           {"theta_marginal", theta_marginal}};
  }

  ordered_json report;
  report["request"] = ordered_json{{"command", "prior-density"},
                                   {"mode", args.mode},
                                   {"hyper", hyper_to_json(a)},
                                   {"x_triangle", args.x_triangle},
                                   {"x_plus_plus", args.x_plus_plus},
                                   {"grid_points", points},
                                   {"format", args.io.format}};
  report["results"] = results;

  std::string payload = args.io.human ? human.text()
                        : args.io.format == "csv" ? csv.text()
                                                  : report.dump(2) + "\n";
  write_output(payload, args.io.output);
  return 0;
}

// ---------------------------------------------------------------------------
// npp-curve

struct NppCurveArgs {
  HyperOptions hyper;
  IoOptions io;
  std::int64_t n01 = 0;
  std::int64_t n10 = 0;
  std::int64_t x_plus_plus = 0;
  std::int64_t x_triangle = 0;
  std::vector<std::int64_t> npp;
  bool even_split = false;
};

int run_npp_curve(NppCurveArgs& args) {
  const DirichletHyper& a = args.hyper.a;
  a.validate();
  if (args.npp.empty())
    throw UsageError("--npp requires at least one total sample size");
  const DiagonalSplit split =
      args.even_split ? DiagonalSplit::even : DiagonalSplit::all_n00;
  NppCurves curves = npp_dependence_curve(args.n01, args.n10,
                                          args.x_plus_plus, args.x_triangle,
                                          a, args.npp, split);

  ordered_json results = ordered_json::array();
  CsvBuilder csv({"n_plus_plus", "ci_pr_h0", "i_pr_h0"});
  HumanBuilder human({"n_plus_plus", "CI Pr(H0|n)", "I Pr(H0|n)"});
  for (std::size_t i = 0; i < curves.n_plus_plus.size(); ++i) {
    results.push_back(ordered_json{{"n_plus_plus", curves.n_plus_plus[i]},
                                   {"ci_pr_h0", curves.ci_prob[i]},
                                   {"i_pr_h0", curves.i_prob[i]}});
    csv.row({std::to_string(curves.n_plus_plus[i]),
             format_double(curves.ci_prob[i]),
             format_double(curves.i_prob[i])});
    human.row({std::to_string(curves.n_plus_plus[i]),
               fixed4(curves.ci_prob[i]), fixed4(curves.i_prob[i])});
  }

  ordered_json report;
  report["request"] = ordered_json{{"command", "npp-curve"},
                                   {"n01", args.n01},
                                   {"n10", args.n10},
                                   {"x_plus_plus", args.x_plus_plus},
                                   {"x_triangle", args.x_triangle},
                                   {"npp", args.npp},
                                   {"even_split", args.even_split},
                                   {"hyper", hyper_to_json(a)},
                                   {"format", args.io.format}};
  report["results"] = results;

  std::string payload = args.io.human ? human.text()
                        : args.io.format == "csv" ? csv.text()
                                                  : report.dump(2) + "\n";
  write_output(payload, args.io.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "swingbf: Bayesian evidence for equality of two correlated proportions "
      "from a 2x2 matched-pairs table"};
  app.require_subcommand(1);

  TestArgs test_args;
  CLI::App* c_test = app.add_subcommand(
      "test", "Evidence report for one table (default/ci/intrinsic/mcnemar)");
  add_table_options(c_test, test_args.table);
  add_hyper_options(c_test, test_args.hyper);
  c_test->add_option("--methods", test_args.methods,
                     "Comma-separated subset of default,ci,intrinsic,mcnemar")
      ->delimiter(',');
  c_test->add_option("--x-triangle", test_args.x_triangle,
                     "Imaginary swing total for ci (default: table's n01+n10)")
      ->check(CLI::NonNegativeNumber);
  c_test->add_option("--x-plus-plus", test_args.x_plus_plus,
                     "Imaginary grand total for intrinsic (default: table total)")
      ->check(CLI::NonNegativeNumber);
  c_test->add_option("--mcnemar-variant", test_args.variant,
                     "cc|plain|exact_binomial (default cc)");
  c_test->add_flag("--favor-null", test_args.favor_null,
                   "Report Bayes factors in favor of H0 instead of H");
  add_io_options(c_test, test_args.io);

  SensitivityArgs sens_args;
  CLI::App* c_sens = app.add_subcommand(
      "sensitivity",
      "Posterior probability of H0 against the prior-to-actual size ratio q");
  add_table_options(c_sens, sens_args.table);
  add_hyper_options(c_sens, sens_args.hyper);
  c_sens->add_option("--methods", sens_args.methods,
                     "Comma-separated subset of ci,intrinsic")
      ->delimiter(',');
  CLI::Option* q_points_opt =
      c_sens->add_option("--q-points", sens_args.q_points,
                         "Number of equally spaced q values in [0,1]")
          ->capture_default_str();
  sens_args.q_grid_opt =
      c_sens->add_option("--q-grid", sens_args.q_grid,
                         "Explicit comma-separated q values (overrides --q-points)")
          ->delimiter(',');
  sens_args.q_grid_opt->excludes(q_points_opt);
  add_io_options(c_sens, sens_args.io);

  PriorDensityArgs prior_args;
  CLI::App* c_prior = app.add_subcommand(
      "prior-density", "Tabulate the ci prior curve or the intrinsic joint "
                       "density with its marginals");
  c_prior->add_option("--mode", prior_args.mode, "ci|intrinsic")->required();
  add_hyper_options(c_prior, prior_args.hyper);
  c_prior->add_option("--x-triangle", prior_args.x_triangle,
                      "Imaginary swing total (ci mode)")
      ->check(CLI::NonNegativeNumber);
  c_prior->add_option("--x-plus-plus", prior_args.x_plus_plus,
                      "Imaginary grand total (intrinsic mode)")
      ->check(CLI::NonNegativeNumber);
  c_prior->add_option("--grid-points", prior_args.grid_points,
                      "Interior grid points per axis (default 513 ci, 201 "
                      "intrinsic)");
  add_io_options(c_prior, prior_args.io);

  NppCurveArgs npp_args;
  CLI::App* c_npp = app.add_subcommand(
      "npp-curve", "Posterior probabilities against the total sample size at "
                   "fixed off-diagonal counts");
  c_npp->add_option("--n01", npp_args.n01, "Count of (0,1) pairs")
      ->required()
      ->check(CLI::NonNegativeNumber);
  c_npp->add_option("--n10", npp_args.n10, "Count of (1,0) pairs")
      ->required()
      ->check(CLI::NonNegativeNumber);
  c_npp->add_option("--x-plus-plus", npp_args.x_plus_plus,
                    "Imaginary grand total for the intrinsic curve")
      ->required()
      ->check(CLI::NonNegativeNumber);
  c_npp->add_option("--x-triangle", npp_args.x_triangle,
                    "Imaginary swing total for the ci curve")
      ->required()
      ->check(CLI::NonNegativeNumber);
  c_npp->add_option("--npp", npp_args.npp,
                    "Comma-separated total sample sizes to sweep")
      ->delimiter(',');
  c_npp->add_flag("--even-split", npp_args.even_split,
                  "Split the diagonal remainder evenly between n00 and n11");
  add_hyper_options(c_npp, npp_args.hyper);
  add_io_options(c_npp, npp_args.io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    emit_error("usage", e.what());
    return 2;
  }

  try {
    if (app.got_subcommand(c_test)) return run_test(test_args);
    if (app.got_subcommand(c_sens)) return run_sensitivity(sens_args);
    if (app.got_subcommand(c_prior)) return run_prior_density(prior_args);
    if (app.got_subcommand(c_npp)) return run_npp_curve(npp_args);
    emit_error("usage", "no subcommand selected");
    return 2;
  } catch (const UsageError& e) {
    emit_error("usage", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    emit_error("domain", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    emit_error("domain", e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
}
