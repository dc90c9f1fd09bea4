#include "pqbasis/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "pqbasis/errors.hpp"
#include "pqbasis/fourier.hpp"
#include "pqbasis/lemma_bounds.hpp"
#include "pqbasis/pqtrig.hpp"
#include "pqbasis/toeplitz.hpp"

namespace pqbasis::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw UsageError("format must be text, csv or json");
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("config: bad number for " + key + ": " + value);
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("config: bad integer for " + key + ": " + value);
}

void require_pair(double p, double q) {
  if (!(p > 1.0 && q > 1.0 && std::isfinite(p) && std::isfinite(q))) {
    throw UsageError("p and q must be finite and greater than 1");
  }
}

Json verdict_json(const std::optional<bool>& v) {
  if (!v) return "indeterminate";
  return *v;
}

std::optional<bool> verdict_from_json(const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  return std::nullopt;
}

Json optional_number(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

std::optional<double> optional_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string verdict_text(const std::optional<bool>& v) {
  if (!v) return "indeterminate";
  return bool_text(*v);
}

struct Common {
  RunConfig config;
  std::string config_path;
  std::string format_text;
  std::vector<std::pair<std::string, CLI::Option*>> flags;

  bool given(const std::string& key) const {
    for (const auto& [k, opt] : flags) {
      if (k == key && opt->count() > 0) return true;
    }
    return false;
  }
};

// --tol, --budget, --out, --format and --config; k_max only where it matters.
void add_common(CLI::App* sub, Common& c, bool with_k, bool tol_is_quadrature = true) {
  if (tol_is_quadrature) {
    c.flags.emplace_back("tol", sub->add_option("--tol", c.config.tol, "quadrature tolerance"));
  } else {
    c.flags.emplace_back("tol", sub->add_option("--quad-tol", c.config.tol, "quadrature tolerance"));
  }
  if (with_k) {
    c.flags.emplace_back(
        "k_max", sub->add_option("-k,--k,--k-max", c.config.k_max, "largest odd index"));
  }
  c.flags.emplace_back("quad_budget", sub->add_option("--budget", c.config.quad_budget,
                                                      "integrand evaluations per integral"));
  c.flags.emplace_back("output", sub->add_option("-o,--out", c.config.output_path, "output file"));
  c.flags.emplace_back("format", sub->add_option("--format", c.format_text, "text, csv or json"));
  sub->add_option("--config", c.config_path, "file of key=value defaults");
}

void finish_config(Common& c) {
  if (!c.config_path.empty()) {
    std::ifstream in(c.config_path);
    if (!in) throw IoError("cannot read config file " + c.config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<std::string> locked;
    for (const auto& [key, opt] : c.flags) {
      if (c.given(key)) locked.push_back(key);
    }
    apply_config_text(buf.str(), c.config, locked);
  }
  if (!c.format_text.empty()) c.config.format = parse_format(c.format_text);
  validate(c.config);
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + config.output_path + " for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("write to " + config.output_path + " failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json classify_json(double p, double q, const RunConfig& config) {
  const trig::PqPair pair(p, q);
  const int k_table = std::max(config.k_max, 9);
  const int k_prop = std::max(config.k_max, 5);
  const auto table = fourier::coeff_table(pair, k_table, config.tol, config.quad_budget);
  const auto sum = fourier::coeff_sum_eval(pair, config.tol, config.quad_budget);
  Json j;
  j["p"] = p;
  j["q"] = q;
  j["k_max"] = k_table;
  j["pi_pq"] = pair.pi_pq();
  Json coeffs = Json::array();
  for (int i = 1; i <= k_table; i += 2) {
    coeffs.push_back({{"j", i}, {"value", table.at(i)}, {"error", table.error_at(i)}});
  }
  j["coefficients"] = coeffs;
  j["tail_bound"] = table.tail_bound();
  j["sum"] = {{"value", sum.value}, {"error", sum.error}};
  const auto params = criteria::symbol_params(table);
  const auto tag = toeplitz::classify(params);
  j["region"] = {{"alpha", params.alpha},
                 {"beta", params.beta},
                 {"in_T", tag.in_T},
                 {"subregion", std::string(toeplitz::to_string(tag.subregion))}};
  Json reports = Json::object();
  for (const auto& [id, report] : criteria::evaluate_all(table, sum, k_prop)) {
    reports[std::string(criteria::to_string(id))] =
        report ? to_json(*report) : Json("indeterminate");
  }
  j["criteria"] = reports;
  return j;
}

Json verification_json(const lemma::Verification& v) {
  return {{"p", v.p},
          {"premises_hold", v.premises_hold},
          {"premise_constants_hold", v.premise_constants_hold},
          {"domination_holds", v.domination_holds},
          {"omitted_signs_hold", v.omitted_signs_hold},
          {"kept_integral", v.kept_integral},
          {"claim_holds", v.claim_holds},
          {"direct_value", v.direct_value},
          {"direct_error", v.direct_error},
          {"direct_agrees", v.direct_agrees},
          {"verified", v.verified()}};
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized p,q-sine Fourier coefficients and Riesz basis criteria"};
  app.require_subcommand(1);
  Common c;
  double p = 0.0;
  double q = 0.0;
  int j = 1;
  double x = 0.0;

  auto* pi_cmd = app.add_subcommand("pi", "print pi_{p,q}");
  auto* coeff_cmd = app.add_subcommand("coeff", "print the Fourier coefficient a_j(p,q)");
  auto* sum_cmd = app.add_subcommand("sum", "print the sum of all a_j(p,q)");
  auto* sin_cmd = app.add_subcommand("sin", "print sin_{p,q}(x)");
  auto* classify_cmd = app.add_subcommand("classify", "all criteria at (p,q) as JSON");
  for (auto* sub : {pi_cmd, coeff_cmd, sum_cmd, sin_cmd, classify_cmd}) {
    sub->add_option("--p", p, "p > 1")->required();
    sub->add_option("--q", q, "q > 1")->required();
  }
  coeff_cmd->add_option("--j", j, "positive index")->required();
  sin_cmd->add_option("--x", x, "argument")->required();
  for (auto* sub : {pi_cmd, coeff_cmd, sum_cmd, sin_cmd}) add_common(sub, c, false);
  add_common(classify_cmd, c, true);

  auto* threshold_cmd = app.add_subcommand("threshold", "solve for a named threshold on p = q");
  std::string name;
  double root_tol = 1e-7;
  std::optional<double> lo;
  std::optional<double> hi;
  threshold_cmd->add_option("--name", name, "p2, p1_tilde, p1_hat, p3, p4, p5:K or p6")
      ->required();
  threshold_cmd->add_option("--tol", root_tol, "root tolerance (bracket half-width)");
  threshold_cmd->add_option("--lo", lo, "bracket lower end");
  threshold_cmd->add_option("--hi", hi, "bracket upper end");
  add_common(threshold_cmd, c, false, false);

  auto* scan_cmd = app.add_subcommand("scan", "grid scan of the (p,q) plane");
  solver::ScanRequest req;
  std::optional<int> n_both;
  scan_cmd->add_option("--pmin", req.p_min);
  scan_cmd->add_option("--pmax", req.p_max);
  scan_cmd->add_option("--qmin", req.q_min);
  scan_cmd->add_option("--qmax", req.q_max);
  scan_cmd->add_option("--n", n_both, "points per axis");
  auto* np_opt = scan_cmd->add_option("--np", req.n_p, "points along p");
  auto* nq_opt = scan_cmd->add_option("--nq", req.n_q, "points along q");
  scan_cmd->add_option("--threads", req.threads, "worker threads");
  add_common(scan_cmd, c, true);

  auto* trace_cmd = app.add_subcommand("trace", "trace a curve in the (p,q) plane");
  std::string curve;
  std::vector<double> q_grid;
  double trace_lo = 1.02;
  double trace_hi = 3.0;
  int samples = 24;
  trace_cmd->add_option("--curve", curve, "a3, a5, a7, a9, wedge, break2 or pi_bound")
      ->required();
  trace_cmd->add_option("--q", q_grid, "q slices")->required();
  trace_cmd->add_option("--pmin", trace_lo);
  trace_cmd->add_option("--pmax", trace_hi);
  trace_cmd->add_option("--samples", samples);
  add_common(trace_cmd, c, false);

  auto* lemma_cmd = app.add_subcommand("lemma", "verify the interpolant bounds at p = q");
  std::string which;
  lemma_cmd->add_option("--which", which, "positivity or bounds")->required();
  lemma_cmd->add_option("--p", p, "p > 1")->required();
  add_common(lemma_cmd, c, false);

  auto* gap_cmd = app.add_subcommand("gap", "Schauder-basis margin on p = q, 1 < p <= 6/5");
  gap_cmd->add_option("--p", p, "p > 1")->required();
  add_common(gap_cmd, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  finish_config(c);
  const RunConfig& cfg = c.config;
  const bool json = cfg.format == Format::Json;

  if (pi_cmd->parsed()) {
    require_pair(p, q);
    const trig::PqPair pair(p, q);
    if (json) {
      emit(cfg, dump({{"p", p}, {"q", q}, {"pi_pq", pair.pi_pq()}}), out);
    } else {
      emit(cfg, format_sig15(pair.pi_pq()) + "\n", out);
    }
  } else if (coeff_cmd->parsed()) {
    require_pair(p, q);
    if (j < 1) throw UsageError("j must be a positive integer");
    const trig::PqPair pair(p, q);
    const auto e = fourier::coeff_eval(pair, j, cfg.tol, cfg.quad_budget);
    const bool even = j % 2 == 0;
    if (json) {
      Json o{{"p", p}, {"q", q}, {"j", j}, {"value", e.value}, {"error", e.error}};
      if (even) o["note"] = "even index: exact zero";
      emit(cfg, dump(o), out);
    } else {
      emit(cfg, format_sig15(e.value) + (even ? " (even index: exact zero)" : "") + "\n", out);
    }
  } else if (sum_cmd->parsed()) {
    require_pair(p, q);
    const auto e = fourier::coeff_sum_eval(trig::PqPair(p, q), cfg.tol, cfg.quad_budget);
    if (json) {
      emit(cfg, dump({{"p", p}, {"q", q}, {"value", e.value}, {"error", e.error}}), out);
    } else {
      emit(cfg, format_sig15(e.value) + "\n", out);
    }
  } else if (sin_cmd->parsed()) {
    require_pair(p, q);
    if (!std::isfinite(x)) throw UsageError("x must be finite");
    const double v = trig::sin_pq(trig::PqPair(p, q), x);
    if (json) {
      emit(cfg, dump({{"p", p}, {"q", q}, {"x", x}, {"value", v}}), out);
    } else {
      emit(cfg, format_sig15(v) + "\n", out);
    }
  } else if (classify_cmd->parsed()) {
    require_pair(p, q);
    emit(cfg, dump(classify_json(p, q, cfg)), out);
  } else if (threshold_cmd->parsed()) {
    const auto tname = solver::threshold_from_string(name);
    solver::SolveOptions opts;
    opts.coeff_tol = cfg.tol;
    if (lo || hi) {
      const auto d = solver::default_bracket(tname);
      opts.bracket = solver::Bracket{lo.value_or(d.lo), hi.value_or(d.hi)};
    }
    if (!(root_tol >= 1e-7 && root_tol <= 1e-2)) {
      throw UsageError("threshold tol must lie in [1e-7, 1e-2]");
    }
    emit(cfg, dump(to_json(solver::solve_threshold(tname, root_tol, opts))), out);
  } else if (scan_cmd->parsed()) {
    if (n_both) {
      if (np_opt->count() == 0) req.n_p = *n_both;
      if (nq_opt->count() == 0) req.n_q = *n_both;
    }
    req.k = c.given("k_max") ? cfg.k_max : req.k;
    req.tol = cfg.tol;
    if (req.n_p < 1 || req.n_q < 1) throw UsageError("scan counts must be positive");
    if (!(req.p_min > 1.0 && req.q_min > 1.0)) throw UsageError("scan ranges must lie in (1, inf)");
    const auto cells = solver::scan(req);
    std::string text;
    if (json) {
      Json arr = Json::array();
      for (const auto& cell : cells) arr.push_back(to_json(cell));
      text = dump(arr);
    } else {
      text = scan_csv_header() + "\n";
      for (const auto& cell : cells) text += scan_csv_row(cell) + "\n";
    }
    emit(cfg, text, out);
  } else if (trace_cmd->parsed()) {
    const auto cname = solver::curve_from_string(curve);
    const auto r = solver::trace_curve(cname, q_grid, trace_lo, trace_hi, samples, cfg.tol);
    if (cfg.format == Format::Csv) {
      std::string text = "p,q\n";
      for (const auto& pt : r.points) {
        text += format_roundtrip(pt.p) + "," + format_roundtrip(pt.q) + "\n";
      }
      emit(cfg, text, out);
    } else {
      Json pts = Json::array();
      for (const auto& pt : r.points) pts.push_back({pt.p, pt.q});
      emit(cfg, dump({{"curve", solver::to_string(cname)}, {"points", pts}, {"skipped", r.skipped}}),
           out);
    }
  } else if (lemma_cmd->parsed()) {
    if (!(p > 1.0)) throw UsageError("p must be greater than 1");
    const auto& specs = which == "positivity" ? lemma::positivity_specs()
                        : which == "bounds"   ? lemma::bound_specs()
                                              : throw UsageError("--which must be positivity or bounds");
    Json o = Json::object();
    for (const auto& spec : specs) {
      if (p <= spec.p_max.value()) o[spec.name] = verification_json(lemma::verify(spec, p));
    }
    if (o.empty()) throw DomainError("no construction covers this p");
    emit(cfg, dump(o), out);
  } else if (gap_cmd->parsed()) {
    if (!(p > 1.0)) throw UsageError("p must be greater than 1");
    const double g = lemma::theorem64_gap(p, cfg.tol);
    if (json) {
      emit(cfg, dump({{"p", p}, {"gap", g}}), out);
    } else {
      emit(cfg, format_sig15(g) + "\n", out);
    }
  }
  (void)err;
  return kExitOk;
}

}  // namespace

void validate(const RunConfig& config) {
  if (!(config.tol >= 1e-13 && config.tol <= 1e-6)) {
    throw UsageError("tol must lie in [1e-13, 1e-6]");
  }
  if (config.k_max < 1 || config.k_max > 101 || config.k_max % 2 == 0) {
    throw UsageError("k_max must be odd and in [1, 101]");
  }
  if (config.quad_budget < 1000) throw UsageError("quad_budget must be at least 1000");
}

void apply_config_text(const std::string& text, RunConfig& config,
                       const std::vector<std::string>& locked) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config: expected key=value, got " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const bool skip = std::find(locked.begin(), locked.end(), key) != locked.end();
    if (key == "tol") {
      const double v = parse_double(key, value);
      if (!skip) config.tol = v;
    } else if (key == "k_max") {
      const long v = parse_long(key, value);
      if (!skip) config.k_max = static_cast<int>(v);
    } else if (key == "quad_budget") {
      const long v = parse_long(key, value);
      if (v <= 0) throw UsageError("config: quad_budget must be positive");
      if (!skip) config.quad_budget = static_cast<std::size_t>(v);
    } else if (key == "output") {
      if (!skip) config.output_path = value;
    } else if (key == "format") {
      const Format f = parse_format(value);
      if (!skip) config.format = f;
    } else {
      throw UsageError("config: unknown key " + key);
    }
  }
}

std::string format_sig15(double x) {
  if (x == 0.0) return "0";
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", x);
  const int exponent = std::atoi(std::strchr(buf, 'e') + 1);
  if (exponent < -5 || exponent > 14) return buf;
  std::snprintf(buf, sizeof buf, "%.*f", 14 - exponent, x);
  return buf;
}

std::string format_roundtrip(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

Json to_json(const criteria::CriterionReport& report) {
  Json detail = Json::object();
  for (const auto& [key, value] : report.detail) {
    std::visit([&](const auto& v) { detail[key] = v; }, value);
  }
  Json j;
  j["criterion_id"] = std::string(criteria::to_string(report.criterion_id));
  j["k_used"] = report.k_used ? Json(*report.k_used) : Json(nullptr);
  j["hypotheses_hold"] = report.hypotheses_hold;
  j["invertible"] = report.invertible;
  j["riesz_upper"] = optional_number(report.riesz_upper);
  j["detail"] = detail;
  return j;
}

criteria::CriterionReport report_from_json(const Json& j) {
  criteria::CriterionReport r;
  const auto id = criteria::criterion_from_string(j.at("criterion_id").get<std::string>());
  if (!id) throw DomainError("unknown criterion id");
  r.criterion_id = *id;
  if (!j.at("k_used").is_null()) r.k_used = j.at("k_used").get<int>();
  r.hypotheses_hold = j.at("hypotheses_hold").get<bool>();
  r.invertible = j.at("invertible").get<bool>();
  r.riesz_upper = optional_from_json(j.at("riesz_upper"));
  for (const auto& [key, value] : j.at("detail").items()) {
    if (value.is_boolean()) {
      r.detail[key] = value.get<bool>();
    } else if (value.is_number()) {
      r.detail[key] = value.get<double>();
    } else {
      r.detail[key] = value.get<std::string>();
    }
  }
  return r;
}

Json to_json(const solver::ThresholdResult& result) {
  Json j;
  j["name"] = solver::to_string(result.name);
  j["value"] = result.value;
  j["bracket"] = {result.bracket.lo, result.bracket.hi};
  j["tol"] = result.tol;
  j["residual"] = result.residual;
  return j;
}

solver::ThresholdResult threshold_from_json(const Json& j) {
  solver::ThresholdResult r;
  r.name = solver::threshold_from_string(j.at("name").get<std::string>());
  r.value = j.at("value").get<double>();
  r.bracket = {j.at("bracket").at(0).get<double>(), j.at("bracket").at(1).get<double>()};
  r.tol = j.at("tol").get<double>();
  r.residual = j.at("residual").get<double>();
  return r;
}

Json to_json(const solver::ScanCell& cell) {
  Json j;
  j["p"] = cell.p;
  j["q"] = cell.q;
  j["failed"] = cell.failed;
  j["message"] = cell.message;
  j["a1"] = cell.a1;
  j["a3"] = cell.a3;
  j["a5"] = cell.a5;
  j["a7"] = cell.a7;
  j["a9"] = cell.a9;
  j["sign_flags"] = cell.sign_flags;
  j["in_T"] = cell.region.in_T;
  j["subregion"] = std::string(toeplitz::to_string(cell.region.subregion));
  j["wedge"] = cell.wedge_flag;
  Json verdicts = Json::object();
  for (const auto& [id, v] : cell.verdicts) verdicts[std::string(criteria::to_string(id))] = verdict_json(v);
  Json riesz = Json::object();
  for (const auto& [id, v] : cell.riesz_bounds) riesz[std::string(criteria::to_string(id))] = optional_number(v);
  j["verdicts"] = verdicts;
  j["riesz_bounds"] = riesz;
  return j;
}

solver::ScanCell cell_from_json(const Json& j) {
  solver::ScanCell c;
  c.p = j.at("p").get<double>();
  c.q = j.at("q").get<double>();
  c.failed = j.at("failed").get<bool>();
  c.message = j.at("message").get<std::string>();
  c.a1 = j.at("a1").get<double>();
  c.a3 = j.at("a3").get<double>();
  c.a5 = j.at("a5").get<double>();
  c.a7 = j.at("a7").get<double>();
  c.a9 = j.at("a9").get<double>();
  c.sign_flags = j.at("sign_flags").get<std::array<bool, 4>>();
  c.region.in_T = j.at("in_T").get<bool>();
  const std::string sub = j.at("subregion").get<std::string>();
  c.region.subregion = sub == "R1"   ? toeplitz::Subregion::R1
                       : sub == "R3" ? toeplitz::Subregion::R3
                                     : toeplitz::Subregion::R2;
  c.wedge_flag = j.at("wedge").get<bool>();
  for (const auto& [key, value] : j.at("verdicts").items()) {
    const auto id = criteria::criterion_from_string(key);
    if (!id) throw DomainError("unknown criterion id " + key);
    c.verdicts[*id] = verdict_from_json(value);
  }
  for (const auto& [key, value] : j.at("riesz_bounds").items()) {
    const auto id = criteria::criterion_from_string(key);
    if (!id) throw DomainError("unknown criterion id " + key);
    c.riesz_bounds[*id] = optional_from_json(value);
  }
  return c;
}

std::string scan_csv_header() {
  return "p,q,a1,a3,a5,a7,a9,in_T,subregion,wedge,trick1,trick2,trick3,thm53a,thm53b,thm53c,"
         "prop71";
}

std::string scan_csv_row(const solver::ScanCell& cell) {
  std::string row = format_roundtrip(cell.p) + "," + format_roundtrip(cell.q);
  if (cell.failed) {
    row += ",,,,,,,failed,";
    for (std::size_t i = 0; i < std::size(criteria::kAllCriteria); ++i) row += ",error";
    return row;
  }
  for (double a : {cell.a1, cell.a3, cell.a5, cell.a7, cell.a9}) row += "," + format_roundtrip(a);
  row += std::string(",") + bool_text(cell.region.in_T);
  row += "," + std::string(toeplitz::to_string(cell.region.subregion));
  row += std::string(",") + bool_text(cell.wedge_flag);
  for (auto id : criteria::kAllCriteria) {
    const auto it = cell.verdicts.find(id);
    row += "," + (it == cell.verdicts.end() ? std::string("indeterminate") : verdict_text(it->second));
  }
  return row;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(argc, argv, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << "\n";
    return kExitSolver;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("pqbasis");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pqbasis::cli
