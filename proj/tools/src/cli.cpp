#include "gupsu2_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "gupsu2/eigenfunctions.hpp"
#include "gupsu2/error.hpp"
#include "gupsu2/operators.hpp"
#include "gupsu2/physical_models.hpp"
#include "gupsu2/representation.hpp"
#include "gupsu2/sturm_oracle.hpp"

namespace gupsu2::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr long long kMaxLevels = 1'000'000;
constexpr long long kMaxGrid = 50'000'000;
constexpr long long kMaxSamples = 10'000'000;

std::string number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_json(const json& v, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        write_json(it.value(), out, indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const json& e : v) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        write_json(e, out, indent, depth + 1);
      }
      out += flat ? "]" : "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += number(v.get<double>());
      return;
    default:
      out += v.dump();
  }
}

std::string csv_cell(const json& v) {
  if (v.is_number_float()) {
    const double x = v.get<double>();
    return std::isfinite(x) ? number(x) : "";
  }
  if (v.is_null()) return "";
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    return quoted + "\"";
  }
  return v.dump();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

json function_json(const AlgebraicFunction& f) {
  json coeffs = json::array();
  for (double c : f.coeffs()) coeffs.push_back(c);
  return json{{"beta", f.beta()}, {"s", f.s()}, {"coeffs", coeffs}};
}

double normalized_delta(double value, double exact, unsigned n, double beta) {
  const double n1 = n + 1.0;
  return std::abs(value - exact) / (n1 * n1 * beta);
}

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

Artifact spectrum_artifact(const RunConfig& cfg) {
  Artifact a;
  a.params = json{{"g", cfg.g}, {"beta", cfg.beta}, {"n_max", cfg.n_max}};
  a.columns = {"n", "E"};
  const SpectralResult r = closed_form_spectrum(cfg.g, cfg.beta, static_cast<unsigned>(cfg.n_max));
  for (const SpectralLine& l : r.lines) a.rows.push_back({json(l.n), json(l.energy)});
  a.extra["source"] = std::string(to_string(r.source));
  return a;
}

Artifact eigenfunction_artifact(const RunConfig& cfg) {
  Artifact a;
  const auto n = static_cast<unsigned>(cfg.level);
  a.params = json{{"n", cfg.level},       {"g", cfg.g},         {"beta", cfg.beta},
                  {"p_min", cfg.p_min},   {"p_max", cfg.p_max}, {"samples", cfg.samples}};
  a.columns = {"p", "psi"};
  const AlgebraicFunction psi = eigenfunction(n, cfg.g, cfg.beta);
  const auto count = static_cast<std::size_t>(cfg.samples);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    const double p = cfg.p_min + (cfg.p_max - cfg.p_min) * t;
    a.rows.push_back({json(p), json(psi(p))});
  }
  const double e = energy(n, cfg.g, cfg.beta);
  a.residuals["norm_defect"] = std::abs(weighted_norm(psi) - 1.0);
  a.residuals["eigen_residual"] = max_abs_coeff_difference(apply_H(cfg.g, psi), e * psi) / psi.max_abs_coeff();
  a.extra["energy"] = e;
  a.extra["function"] = function_json(psi);
  return a;
}

Artifact oracle_artifact(const RunConfig& cfg) {
  Artifact a;
  a.params = json{{"g", cfg.g}, {"beta", cfg.beta}, {"N", cfg.grid}, {"k", cfg.k}};
  a.columns = {"n", "closed_form", "oracle", "rel_error"};
  const TridiagonalOperator t = to_sturm(cfg.g, cfg.beta, static_cast<std::size_t>(cfg.grid));
  const auto values = lowest_eigenvalues(t, static_cast<std::size_t>(cfg.k));
  json closed = json::array();
  json oracle = json::array();
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto n = static_cast<unsigned>(i);
    const double exact = energy(n, cfg.g, cfg.beta);
    const double delta = normalized_delta(values[i], exact, n, cfg.beta);
    worst = std::max(worst, delta);
    closed.push_back(exact);
    oracle.push_back(values[i]);
    a.rows.push_back({json(n), json(exact), json(values[i]), json(delta)});
  }
  a.residuals["max_rel_error"] = worst;
  a.residuals["error_normalization"] = "(n+1)^2 beta";
  a.extra["closed_form"] = closed;
  a.extra["oracle"] = oracle;
  a.extra["slow_convergence_warning"] = t.slow_convergence_warning;
  return a;
}

Artifact harmonic_artifact(const RunConfig& cfg) {
  Artifact a;
  const HarmonicGUP model{cfg.m, cfg.omega, cfg.hbar, cfg.beta};
  validate(model);
  const double g = harmonic_g(model);
  a.params = json{{"m", cfg.m},         {"omega", cfg.omega}, {"hbar", cfg.hbar},
                  {"beta", cfg.beta},   {"n_max", cfg.n_max}, {"N", cfg.grid}};
  a.columns = {"n", "E", "E_su2", "E_oracle", "oracle_delta"};
  const SpectralResult r = oracle_spectrum(g, cfg.beta, static_cast<std::size_t>(cfg.grid),
                                           static_cast<std::size_t>(cfg.n_max + 1));
  double form = 0.0;
  double worst = 0.0;
  json deltas = json::array();
  for (const SpectralLine& l : r.lines) {
    const double e = harmonic_energy(l.n, model);
    const double e_su2 = harmonic_energy_from_su2(l.n, model);
    const double e_oracle = harmonic_energy_from_eigenvalue(l.energy, model);
    const double delta = rel_diff(e_oracle, e);
    form = std::max(form, rel_diff(e, e_su2));
    worst = std::max(worst, delta);
    deltas.push_back(delta);
    a.rows.push_back({json(l.n), json(e), json(e_su2), json(e_oracle), json(delta)});
  }
  a.residuals["max_form_difference"] = form;
  a.residuals["max_oracle_delta"] = worst;
  a.extra["g"] = g;
  a.extra["beta"] = cfg.beta;
  a.extra["oracle_deltas"] = deltas;
  return a;
}

Artifact dirac_artifact(const RunConfig& cfg) {
  Artifact a;
  const DiracGUP model{cfg.m, cfg.omega, cfg.hbar, cfg.c, cfg.beta};
  validate(model);
  const DiracUpperProblem p = dirac_upper_problem(model);
  a.params = json{{"m", cfg.m},         {"omega", cfg.omega}, {"hbar", cfg.hbar},  {"c", cfg.c},
                  {"beta", cfg.beta},   {"n_max", cfg.n_max}, {"N", cfg.grid}};
  a.columns = {"n", "E_plus", "E_minus", "lambda", "E_oracle", "oracle_delta"};

  const auto levels = static_cast<std::size_t>(cfg.n_max + 1);
  std::vector<double> oracle;
  if (p.g >= 0.5) {
    oracle = lowest_eigenvalues(to_sturm(p.g, cfg.beta, static_cast<std::size_t>(cfg.grid)), levels);
  } else {
    a.extra["warnings"] = json::array({"oracle skipped: g < 1/2 is outside the oracle's domain"});
  }

  double inversion = 0.0;
  double worst = 0.0;
  json deltas = json::array();
  for (std::size_t i = 0; i < levels; ++i) {
    const auto n = static_cast<unsigned>(i);
    const double e_plus = dirac_energy(n, model, Branch::positive);
    const double e_minus = dirac_energy(n, model, Branch::negative);
    const double lambda = energy(n, p.g, cfg.beta);
    inversion = std::max(inversion, rel_diff(p.h_eigenvalue(e_plus) + p.g * cfg.beta, lambda + p.g * cfg.beta));
    inversion = std::max(inversion, rel_diff(p.h_eigenvalue(e_minus) + p.g * cfg.beta, lambda + p.g * cfg.beta));
    std::vector<json> row{json(n), json(e_plus), json(e_minus), json(lambda)};
    if (oracle.empty()) {
      row.emplace_back(nullptr);
      row.emplace_back(nullptr);
      deltas.push_back(nullptr);
    } else {
      const double e_oracle = p.energy_from_h_eigenvalue(oracle[i], Branch::positive);
      const double delta = rel_diff(e_oracle, e_plus);
      worst = std::max(worst, delta);
      deltas.push_back(delta);
      row.emplace_back(e_oracle);
      row.emplace_back(delta);
    }
    a.rows.push_back(std::move(row));
  }
  a.residuals["coefficient_residual"] = std::abs(p.coefficient_residual());
  a.residuals["max_inversion_residual"] = inversion;
  a.residuals["max_oracle_delta"] = oracle.empty() ? json(nullptr) : json(worst);
  a.extra["g"] = p.g;
  a.extra["beta"] = cfg.beta;
  a.extra["oracle_deltas"] = deltas;
  return a;
}

Artifact verify_artifact(const RunConfig& cfg) {
  Artifact a;
  json suites = json::array();
  for (Suite s : cfg.suites) suites.push_back(std::string(to_string(s)));
  a.params = json{{"suites", suites}, {"seed", cfg.seed}, {"concurrent", cfg.concurrent}};
  a.columns = {"suite", "check", "measured", "tolerance", "passed", "note"};
  json notes = json::object();
  json summary = json::object();
  for (const SuiteReport& rep : run_suites(cfg.suites, cfg.concurrent, cfg.seed)) {
    const std::string name(to_string(rep.suite));
    for (const CheckResult& c : rep.checks) {
      a.rows.push_back({json(name), json(c.name), json(c.measured), json(c.tolerance), json(c.passed), json(c.note)});
    }
    if (!rep.notes.empty()) notes[name] = rep.notes;
    summary[name] = rep.passed();
    a.passed = a.passed && rep.passed();
  }
  a.residuals = summary;
  a.extra["notes"] = notes;
  a.extra["passed"] = a.passed;
  return a;
}

void print_verify_table(const Artifact& a, std::ostream& out) {
  std::string current;
  for (const auto& row : a.rows) {
    const std::string suite = row[0].get<std::string>();
    if (suite != current) {
      current = suite;
      out << "== " << suite << (a.residuals.value(suite, false) ? "  PASS" : "  FAIL") << '\n';
    }
    char line[512];
    std::snprintf(line, sizeof line, "  [%s] %-68s %11.3e <= %-8.1e %s\n", row[4].get<bool>() ? "ok" : "XX",
                  row[1].get<std::string>().c_str(), row[2].is_number() ? row[2].get<double>() : std::nan(""),
                  row[3].get<double>(), row[5].get<std::string>().c_str());
    out << line;
  }
  for (auto it = a.extra["notes"].begin(); it != a.extra["notes"].end(); ++it) {
    out << "-- " << it.key() << " notes\n";
    for (const auto& n : it.value()) out << "  " << n.get<std::string>() << '\n';
  }
  out << (a.passed ? "verify: all checks passed\n" : "verify: FAILED\n");
}

// --- argument parsing ---------------------------------------------------------

struct Parsed {
  std::unique_ptr<CLI::App> app;
  RunConfig config;
  std::vector<std::string> suites;
  std::string config_file;
  bool sequential = false;
  std::map<CLI::App*, Command> commands;
};

const std::map<std::string, Format> kFormats{{"csv", Format::csv}, {"json", Format::json}};

std::unique_ptr<Parsed> make_parser() {
  auto p = std::make_unique<Parsed>();
  p->app = std::make_unique<CLI::App>("Spectra of the minimal-length momentum-space Hamiltonian H(g)", "gupsu2");
  p->app->require_subcommand(1);
  RunConfig& c = p->config;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format (csv|json)")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("--output", c.output, "Output file (default: stdout or $GUPSU2_OUTPUT_DIR)");
    sub->add_option("--config", p->config_file, "JSON file with default flag values");
  };
  auto add = [&](const char* name, const char* help, Command cmd) {
    CLI::App* sub = p->app->add_subcommand(name, help);
    p->commands[sub] = cmd;
    common(sub);
    return sub;
  };

  CLI::App* spectrum = add("spectrum", "Closed-form levels E_n = (n^2 + 2ng) beta", Command::spectrum);
  spectrum->add_option("--g", c.g, "Coupling g > 0");
  spectrum->add_option("--beta", c.beta, "Deformation beta > 0");
  spectrum->add_option("--n-max", c.n_max, "Highest level");

  CLI::App* eig = add("eigenfunction", "Sample a normalized eigenfunction psi_n(p)", Command::eigenfunction);
  eig->add_option("--n", c.level, "Level");
  eig->add_option("--g", c.g, "Coupling g > 0");
  eig->add_option("--beta", c.beta, "Deformation beta > 0");
  eig->add_option("--p-min", c.p_min, "First sample");
  eig->add_option("--p-max", c.p_max, "Last sample");
  eig->add_option("--samples", c.samples, "Number of sample points");

  CLI::App* verify = add("verify", "Run the invariant suites", Command::verify);
  verify->add_option("--suite", p->suites, "Suite name (repeatable): algebra su2 eigenfunctions oracle models normalization");
  verify->add_option("--seed", c.seed, "Seed of the randomized families");
  verify->add_flag("--sequential", p->sequential, "Run suites one after another");

  CLI::App* oracle = add("oracle", "Finite-difference Sturm oracle vs closed form", Command::oracle);
  oracle->add_option("--g", c.g, "Coupling g >= 1/2");
  oracle->add_option("--beta", c.beta, "Deformation beta > 0");
  oracle->add_option("--N", c.grid, "Interior grid points (>= 16)");
  oracle->add_option("--k", c.k, "Number of eigenvalues");

  CLI::App* harmonic = add("harmonic", "Harmonic oscillator with minimal length", Command::harmonic);
  CLI::App* dirac = add("dirac", "Dirac oscillator with minimal length", Command::dirac);
  for (CLI::App* sub : {harmonic, dirac}) {
    sub->add_option("--m", c.m, "Mass");
    sub->add_option("--omega", c.omega, "Angular frequency");
    sub->add_option("--hbar", c.hbar, "Reduced Planck constant");
    sub->add_option("--beta", c.beta, "Deformation beta > 0");
    sub->add_option("--n-max", c.n_max, "Highest level");
    sub->add_option("--N", c.grid, "Oracle grid points (>= 16)");
  }
  dirac->add_option("--c", c.c, "Speed of light");
  return p;
}

CLI::App* selected(const Parsed& p) {
  for (const auto& [sub, cmd] : p.commands)
    if (sub->parsed()) return sub;
  return nullptr;
}

std::string config_value(const std::string& key, const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return number(v.get<double>());
  if (v.is_number()) return v.dump();
  throw UsageError("config key '" + key + "' must be a number or string");
}

// Arguments equivalent to the config file entries not already given as flags.
std::vector<std::string> config_arguments(const std::string& file, CLI::App* sub) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot read config file " + file);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file " + file + ": " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file " + file + " must hold a JSON object");
  std::vector<std::string> args;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    if (key == "config") throw UsageError("config file cannot name another config file");
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) throw UsageError("config key '" + key + "' is not an option of " + sub->get_name());
    if (opt->count() > 0) continue;
    const auto& v = it.value();
    if (v.is_boolean()) {
      if (v.get<bool>()) args.push_back("--" + key);
    } else if (v.is_array()) {
      for (const auto& e : v) {
        args.push_back("--" + key);
        args.push_back(config_value(key, e));
      }
    } else {
      args.push_back("--" + key);
      args.push_back(config_value(key, v));
    }
  }
  return args;
}

RunConfig finish(Parsed& p) {
  RunConfig cfg = p.config;
  cfg.command = p.commands.at(selected(p));
  cfg.concurrent = !p.sequential;
  if (!p.suites.empty()) {
    cfg.suites.clear();
    std::set<Suite> seen;
    for (const std::string& name : p.suites) {
      const auto s = parse_suite(name);
      if (!s) throw UsageError("unknown suite '" + name + "'");
      if (seen.insert(*s).second) cfg.suites.push_back(*s);
    }
  }
  return cfg;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::eigenfunction: return "eigenfunction";
    case Command::verify: return "verify";
    case Command::oracle: return "oracle";
    case Command::harmonic: return "harmonic";
    case Command::dirac: return "dirac";
  }
  return "unknown";
}

std::string to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

void validate(const RunConfig& c) {
  require(positive(c.beta), "--beta must be finite and > 0");
  switch (c.command) {
    case Command::spectrum:
      require(positive(c.g), "--g must be finite and > 0");
      require(c.n_max >= 0 && c.n_max <= kMaxLevels, "--n-max must lie in [0, 1000000]");
      break;
    case Command::eigenfunction:
      require(positive(c.g), "--g must be finite and > 0");
      require(c.level >= 0 && c.level <= 60, "--n must lie in [0, 60]");
      require(c.samples >= 1 && c.samples <= kMaxSamples, "--samples must lie in [1, 10000000]");
      require(std::isfinite(c.p_min) && std::isfinite(c.p_max) && c.p_min <= c.p_max,
              "--p-min and --p-max must be finite with p-min <= p-max");
      break;
    case Command::oracle:
      require(std::isfinite(c.g) && c.g >= 0.5, "--g must be >= 1/2 for the oracle");
      require(c.grid >= 16 && c.grid <= kMaxGrid, "--N must lie in [16, 50000000]");
      require(c.k >= 1 && c.k <= c.grid, "--k must lie in [1, N]");
      break;
    case Command::harmonic:
    case Command::dirac:
      require(positive(c.m) && positive(c.omega) && positive(c.hbar), "--m, --omega, --hbar must be finite and > 0");
      require(c.command == Command::harmonic || positive(c.c), "--c must be finite and > 0");
      require(c.grid >= 16 && c.grid <= kMaxGrid, "--N must lie in [16, 50000000]");
      require(c.n_max >= 0 && c.n_max < c.grid, "--n-max must lie in [0, N)");
      break;
    case Command::verify:
      require(!c.suites.empty(), "no suites selected");
      break;
  }
}

Artifact compute(const RunConfig& config) {
  switch (config.command) {
    case Command::spectrum: return spectrum_artifact(config);
    case Command::eigenfunction: return eigenfunction_artifact(config);
    case Command::verify: return verify_artifact(config);
    case Command::oracle: return oracle_artifact(config);
    case Command::harmonic: return harmonic_artifact(config);
    case Command::dirac: return dirac_artifact(config);
  }
  throw UsageError("unknown command");
}

std::string to_csv(const Artifact& a) {
  std::string out;
  for (std::size_t i = 0; i < a.columns.size(); ++i) out += (i ? "," : "") + a.columns[i];
  out += '\n';
  for (const auto& row : a.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
    out += '\n';
  }
  return out;
}

std::string to_json(const Artifact& a) {
  json doc = json::object();
  doc["params"] = a.params;
  json lines = json::array();
  for (const auto& row : a.rows) {
    json line = json::object();
    for (std::size_t i = 0; i < a.columns.size() && i < row.size(); ++i) line[a.columns[i]] = row[i];
    lines.push_back(std::move(line));
  }
  doc["lines"] = std::move(lines);
  doc["residuals"] = a.residuals;
  for (auto it = a.extra.begin(); it != a.extra.end(); ++it) doc[it.key()] = it.value();
  std::string out;
  write_json(doc, out, 2, 0);
  out += '\n';
  return out;
}

void emit(const Artifact& artifact, Format format, const std::filesystem::path& path, std::ostream& out) {
  const std::string text = format == Format::csv ? to_csv(artifact) : to_json(artifact);
  if (path.empty()) {
    out << text;
    if (!out) throw IoError("write to output stream failed");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("write to " + path.string() + " failed");
}

std::filesystem::path resolve_output(const RunConfig& config) {
  if (!config.output.empty()) return config.output;
  const char* dir = std::getenv(kOutputDirEnv);
  if (dir == nullptr || *dir == '\0') return {};
  return std::filesystem::path(dir) / (to_string(config.command) + "." + to_string(config.format));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const Artifact artifact = compute(config);
    const std::filesystem::path path = resolve_output(config);
    if (config.command == Command::verify) {
      print_verify_table(artifact, out);
      if (!path.empty()) emit(artifact, config.format, path, out);
      return artifact.passed ? kExitOk : kExitVerifyFailed;
    }
    if (config.command == Command::oracle && config.g < 1.0) {
      err << "warning: g < 1 gives a boundary-singular potential; the oracle converges slowly\n";
    }
    if (artifact.extra.contains("warnings")) {
      for (const auto& w : artifact.extra["warnings"]) err << "warning: " << w.get<std::string>() << '\n';
    }
    emit(artifact, config.format, path, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const gupsu2::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    auto first = make_parser();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      first->app->parse(reversed);
    } catch (const CLI::ParseError& e) {
      std::ostringstream o;
      std::ostringstream e2;
      const int code = first->app->exit(e, o, e2);
      out << o.str();
      err << e2.str();
      return code == 0 ? kExitOk : kExitUsage;
    }
    if (first->config_file.empty()) return run(finish(*first), out, err);

    CLI::App* sub = selected(*first);
    std::vector<std::string> merged{sub->get_name()};
    for (const std::string& a : config_arguments(first->config_file, sub)) merged.push_back(a);
    // User flags after the subcommand name keep their original order.
    bool after = false;
    for (const std::string& a : args) {
      if (after) merged.push_back(a);
      if (a == sub->get_name()) after = true;
    }
    auto second = make_parser();
    std::vector<std::string> rev(merged.rbegin(), merged.rend());
    try {
      second->app->parse(rev);
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return run(finish(*second), out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace gupsu2::cli
