// swalg: run the verification suites and export matrix-element tables.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "swalg/suites.hpp"

using namespace swalg;
using nlohmann::ordered_json;

namespace {

struct RunConfig {
  SuiteConfig suite;
  std::string format = "json";
  std::string out;
};

struct BadConfig : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 12 significant digits, so reports are byte-identical across runs.
double r12(double x) { return std::stod(detail::num(x)); }

// ---------------------------------------------------------------------------
// configuration

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadConfig("cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  std::map<std::string, std::string> kv;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    ordered_json j;
    try {
      j = ordered_json::parse(text);
    } catch (const std::exception& e) {
      throw BadConfig(std::string("config: ") + e.what());
    }
    for (auto& [k, v] : j.items()) kv[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return kv;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos) throw BadConfig("config: expected key=value, got '" + line + "'");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

HalfInt parse_j(const std::string& s) {
  double v = std::stod(s);
  double twice = 2 * v;
  if (v < 0 || std::abs(twice - std::round(twice)) > 1e-12) throw BadConfig("max-j must be a non-negative half-integer");
  return HalfInt::from_twice(std::llround(twice));
}

void apply_setting(RunConfig& rc, const std::string& key, const std::string& value) {
  try {
    if (key == "D") rc.suite.D = std::stoi(value);
    else if (key == "omega") rc.suite.omega = std::stod(value);
    else if (key == "n-max") rc.suite.n_max = std::stoi(value);
    else if (key == "quad-order-radial") rc.suite.orders.radial = std::stoi(value);
    else if (key == "quad-order-angular") rc.suite.orders.angular = std::stoi(value);
    else if (key == "quad-points-lambda") rc.suite.orders.lambda = std::stoi(value);
    else if (key == "tol") rc.suite.tol = std::stod(value);
    else if (key == "seed") rc.suite.seed = static_cast<unsigned>(std::stoul(value));
    else if (key == "max-j") rc.suite.max_j = parse_j(value);
    else if (key == "format") rc.format = value;
    else if (key == "out") rc.out = value;
    else throw BadConfig("unknown setting '" + key + "'");
  } catch (const std::invalid_argument&) {
    throw BadConfig("bad value for " + key + ": '" + value + "'");
  } catch (const std::out_of_range&) {
    throw BadConfig("value out of range for " + key);
  }
}

void validate(const RunConfig& rc) {
  const auto& s = rc.suite;
  if (s.D < 2 || s.D > kMaxD) throw BadConfig("D must be in [2, " + std::to_string(kMaxD) + "]");
  if (!(s.omega > 0)) throw BadConfig("omega must be positive");
  if (s.n_max && *s.n_max < 0) throw BadConfig("n-max must be >= 0");
  if (s.orders.radial < 4 || s.orders.angular < 4 || s.orders.lambda < 4) throw BadConfig("quadrature orders must be >= 4");
  if (s.tol && !(*s.tol > 0)) throw BadConfig("tol must be positive");
  if (rc.format != "json" && rc.format != "csv" && rc.format != "text") throw BadConfig("format must be json, csv or text");
}

ordered_json config_json(const RunConfig& rc) {
  const auto& s = rc.suite;
  ordered_json j;
  j["D"] = s.D;
  j["omega"] = r12(s.omega);
  if (s.n_max) j["n-max"] = *s.n_max;
  else j["n-max"] = nullptr;
  j["quad-order-radial"] = s.orders.radial;
  j["quad-order-angular"] = s.orders.angular;
  j["quad-points-lambda"] = s.orders.lambda;
  if (s.tol) j["tol"] = r12(*s.tol);
  else j["tol"] = nullptr;
  j["seed"] = s.seed;
  j["max-j"] = s.max_j.str();
  return j;
}

// ---------------------------------------------------------------------------
// reports

struct Output {
  SuiteReport report;
  ordered_json data;  // suite-specific payload, may be null
  std::string table;  // csv body for export
  std::string text;   // listing shown before the summary in text format
};

ordered_json summary_json(const SuiteReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["checks"] = r.checks();
  j["failures"] = r.failure_count();
  j["max-error"] = r12(r.max_error());
  return j;
}

ordered_json report_json(const Output& o, const RunConfig& rc) {
  ordered_json j = summary_json(o.report);
  j["pass"] = o.report.pass();
  j["config"] = config_json(rc);
  ordered_json fams = ordered_json::array();
  for (const auto& f : o.report.families)
    fams.push_back({{"name", f.name}, {"checks", f.checks}, {"failures", f.failures}, {"max-error", r12(f.max_error)},
                    {"tol", r12(f.tol)}});
  j["families"] = fams;
  j["failed-assertions"] = o.report.failures;
  if (!o.data.is_null()) j["data"] = o.data;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string render(const std::vector<Output>& outs, const RunConfig& rc, bool combined) {
  std::ostringstream os;
  if (rc.format == "json") {
    if (!combined) {
      os << report_json(outs.front(), rc).dump(2) << "\n";
    } else {
      ordered_json suites = ordered_json::array();
      long long checks = 0, fails = 0;
      double err = 0;
      for (const auto& o : outs) {
        suites.push_back(report_json(o, rc));
        checks += o.report.checks();
        fails += o.report.failure_count();
        err = std::max(err, o.report.max_error());
      }
      ordered_json j{{"suite", "all"}, {"checks", checks}, {"failures", fails}, {"max-error", r12(err)}, {"pass", fails == 0}};
      j["suites"] = suites;
      os << j.dump(2) << "\n";
    }
  } else if (rc.format == "csv") {
    if (!combined && !outs.front().table.empty()) {
      os << outs.front().table;
    } else {
      os << "suite,family,checks,failures,max-error,tol\n";
      for (const auto& o : outs)
        for (const auto& f : o.report.families)
          os << o.report.suite << "," << csv_escape(f.name) << "," << f.checks << "," << f.failures << "," << detail::num(f.max_error)
             << "," << detail::num(f.tol) << "\n";
    }
  } else {
    for (const auto& o : outs) {
      os << o.text;
      const auto& r = o.report;
      os << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " checks=" << r.checks() << " failures=" << r.failure_count()
         << " max-error=" << detail::num(r.max_error()) << "\n";
      for (const auto& f : r.families)
        os << "  " << f.name << ": checks=" << f.checks << " failures=" << f.failures << " max-error=" << detail::num(f.max_error)
           << " tol=" << detail::num(f.tol) << "\n";
      for (const auto& s : r.failures) os << "  failed: " << s << "\n";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// suites

Output run_spectrum(const RunConfig& rc) {
  Output o{suite_spectrum(rc.suite)};
  ordered_json rows = ordered_json::array();
  std::string text;
  for (const auto& r : spectrum_rows(rc.suite)) {
    rows.push_back({{"N", r.N}, {"energy", r12(r.energy)}, {"degeneracy", r.degeneracy}});
    text += "N=" + std::to_string(r.N) + " E=" + detail::num(r.energy) + " deg=" + std::to_string(r.degeneracy) + "\n";
  }
  o.data = {{"levels", rows}};
  o.text = text;
  return o;
}

Output run_enumerate(const RunConfig& rc) {
  Output o{suite_enumerate(rc.suite)};
  ordered_json rows = ordered_json::array();
  std::string text;
  for (int N = 0; N <= rc.suite.n_max.value_or(2); ++N)
    for (const auto& l : enumerate_level(N, rc.suite.D)) {
      auto [a, b] = label_ab(l);
      ordered_json as = ordered_json::array(), bs = ordered_json::array();
      for (auto x : a) as.push_back(x.str());
      for (auto x : b) bs.push_back(x.str());
      rows.push_back({{"N", N}, {"n_r", l.n_r}, {"n", l.n}, {"p", l.p}, {"j", label_j(l).str()}, {"a", as}, {"b", bs},
                      {"energy", r12(osc_energy(l))}});
      text += "N=" + std::to_string(N) + " " + l.str() + " j=" + label_j(l).str() + "\n";
    }
  o.data = {{"labels", rows}};
  o.text = text;
  return o;
}

std::string me_csv(const std::vector<OracleReport>& raw) {
  std::ostringstream os;
  os << "operator,bra,ket,numeric-re,numeric-im,predicted-re,predicted-im,abs-diff\n";
  for (const auto& r : raw) {
    std::string pic = r.picture == CoordSystem::osc ? "osc:" : "sw:";
    for (const auto& row : r.rows)
      os << csv_escape(pic + row.op + "[" + row.source + "]") << "," << csv_escape(row.bra) << "," << csv_escape(row.ket) << ","
         << detail::num(row.numeric.real()) << "," << detail::num(row.numeric.imag()) << "," << detail::num(row.predicted.real())
         << "," << detail::num(row.predicted.imag()) << "," << detail::num(row.diff) << "\n";
  }
  return os.str();
}

ordered_json me_json(const std::vector<OracleReport>& raw) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : raw)
    for (const auto& row : r.rows)
      rows.push_back({{"picture", r.picture == CoordSystem::osc ? "osc" : "sw"},
                      {"operator", row.op},
                      {"source", row.source},
                      {"bra", row.bra},
                      {"ket", row.ket},
                      {"numeric-re", r12(row.numeric.real())},
                      {"numeric-im", r12(row.numeric.imag())},
                      {"predicted-re", r12(row.predicted.real())},
                      {"predicted-im", r12(row.predicted.imag())},
                      {"abs-diff", r12(row.diff)}});
  return rows;
}

Output run_export(const RunConfig& rc) {
  std::vector<OracleReport> raw;
  Output o{suite_matrix_elements(rc.suite, &raw)};
  o.report.suite = "export";
  if (rc.format == "csv") o.table = me_csv(raw);
  else if (rc.format == "json") o.data = {{"matrix-elements", me_json(raw)}};
  else o.text = me_csv(raw);
  return o;
}

Output run_one(const std::string& name, const RunConfig& rc) {
  if (name == "spectrum") return run_spectrum(rc);
  if (name == "enumerate") return run_enumerate(rc);
  if (name == "verify-algebra") return {suite_algebra(rc.suite)};
  if (name == "verify-basis") return {suite_basis(rc.suite)};
  if (name == "verify-reduction") return {suite_reduction(rc.suite)};
  if (name == "verify-matrix-elements") return {suite_matrix_elements(rc.suite)};
  if (name == "export") return run_export(rc);
  throw BadConfig("unknown subcommand " + name);
}

std::string extension(const std::string& format) { return format == "text" ? "txt" : format; }

void write_file(const std::string& path, const std::string& body) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oscillator to Smorodinsky-Winternitz reduction: verification suites"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig rc;
  std::string config_path, max_j;
  int D = 2, n_max = 0, qr = 48, qa = 48, ql = 16;
  double omega = 1.0, tol = 0.0;
  unsigned seed = 0;
  auto* oD = app.add_option("--D", D, "half the oscillator dimension (SW dimension)");
  auto* oW = app.add_option("--omega", omega, "SW frequency");
  auto* oN = app.add_option("--n-max", n_max, "largest level or radial/angular quantum number");
  auto* oR = app.add_option("--quad-order-radial", qr, "Gauss-Laguerre order");
  auto* oA = app.add_option("--quad-order-angular", qa, "Gauss-Legendre order per angle");
  auto* oL = app.add_option("--quad-points-lambda", ql, "points of the periodic rule");
  auto* oT = app.add_option("--tol", tol, "tolerance override");
  auto* oS = app.add_option("--seed", seed, "seed for random points (default 0)");
  app.add_option("--format", rc.format, "json | csv | text");
  app.add_option("--out", rc.out, "report file");
  auto* oJ = app.add_option("--max-j", max_j, "largest oscillator j of the matrix-element kets");
  app.add_option("--config", config_path, "key=value or JSON settings, overridden by flags");

  const std::vector<std::pair<std::string, std::string>> subs = {
      {"spectrum", "levels and degeneracies up to n-max"},
      {"enumerate", "quantum-number lists up to n-max"},
      {"verify-algebra", "exact commutation relations and the Casimir identity"},
      {"verify-basis", "orthonormality, eigen-residuals and separation constants"},
      {"verify-reduction", "reduced states, norms, residuals and energies"},
      {"verify-matrix-elements", "quadrature matrix elements against the closed forms (D = 2)"},
      {"export", "matrix-element tables"},
      {"all", "every verification suite in dependency order"}};
  for (const auto& [name, help] : subs) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  std::string sub = app.get_subcommands().front()->get_name();

  try {
    if (!config_path.empty())
      for (const auto& [k, v] : read_config(config_path)) apply_setting(rc, k, v);
    if (oD->count()) rc.suite.D = D;
    if (oW->count()) rc.suite.omega = omega;
    if (oN->count()) rc.suite.n_max = n_max;
    if (oR->count()) rc.suite.orders.radial = qr;
    if (oA->count()) rc.suite.orders.angular = qa;
    if (oL->count()) rc.suite.orders.lambda = ql;
    if (oT->count()) rc.suite.tol = tol;
    if (oS->count()) rc.suite.seed = seed;
    if (oJ->count()) rc.suite.max_j = parse_j(max_j);
    validate(rc);
  } catch (const std::exception& e) {
    std::cerr << "swalg: " << e.what() << "\n";
    return 2;
  }

  std::vector<Output> outs;
  try {
    if (sub == "all") {
      for (const char* s : {"spectrum", "enumerate", "verify-algebra", "verify-basis", "verify-reduction"}) outs.push_back(run_one(s, rc));
      if (rc.suite.D == 2) outs.push_back(run_one("verify-matrix-elements", rc));
    } else {
      outs.push_back(run_one(sub, rc));
    }
  } catch (const UsageError& e) {
    std::cerr << "swalg: " << e.what() << "\n";
    return 2;
  } catch (const BadConfig& e) {
    std::cerr << "swalg: " << e.what() << "\n";
    return 2;
  }

  std::string body = render(outs, rc, sub == "all");
  std::cout << body;
  std::string path = rc.out;
  if (path.empty())
    if (const char* dir = std::getenv("SWALG_OUT_DIR"); dir && *dir)
      path = (std::filesystem::path(dir) / (sub + "." + extension(rc.format))).string();
  if (!path.empty()) {
    try {
      write_file(path, body);
    } catch (const std::exception& e) {
      std::cerr << "swalg: " << e.what() << "\n";
      return 2;
    }
  }
  bool ok = true;
  for (const auto& o : outs) ok = ok && o.report.pass();
  return ok ? 0 : 1;
}
