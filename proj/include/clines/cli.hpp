#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clines/clines.hpp"
#include "clines/report.hpp"

namespace clines::cli {

enum ExitCode : int { kOk = 0, kAnomaly = 1, kInputError = 2, kBudgetExhausted = 3 };

inline constexpr const char* kBudgetEnv = "CLINES_GB_BUDGET";

struct RunConfig {
  std::string subcommand;
  std::string example;
  std::vector<std::string> polys;
  std::string file;
  int vars = 0;
  int degree = 0;
  std::string point;
  std::string field = FieldSpec::prime(kDefaultPrime).to_string();
  bool field_given = false;
  std::uint64_t seed = 1;
  std::string k;
  std::size_t witnesses = 3;
  std::size_t rounds = 0;
  std::string dirs;
  int expected_dim = -1;
  std::uint64_t max_reductions = GroebnerBudget{}.max_reductions;
  std::size_t max_basis = GroebnerBudget{}.max_basis;
  std::uint64_t ceiling = kDefaultEnumerationCeiling;
  bool json = false;
  std::string batch;

  GroebnerBudget budget() const { return {max_reductions, max_basis}; }

  Json to_json() const {
    Json input;
    if (!example.empty()) input["example"] = example;
    if (!file.empty()) input["file"] = file;
    if (!polys.empty()) {
      input["polynomials"] = polys;
      input["vars"] = vars;
    }
    if (degree > 0) input["degree"] = degree;
    Json out;
    out["subcommand"] = subcommand;
    out["input"] = std::move(input);
    out["field"] = field;
    out["point"] = point.empty() ? Json(nullptr) : Json(point);
    out["k"] = k.empty() ? Json(nullptr) : Json(k);
    out["seed"] = seed;
    out["expected_dim"] = expected_dim >= 0 ? Json(expected_dim) : Json(nullptr);
    out["budgets"] = Json{{"max_reductions", max_reductions},
                          {"max_basis", max_basis},
                          {"witness_count", witnesses},
                          {"witness_rounds", rounds},
                          {"enumeration_ceiling", ceiling}};
    if (!dirs.empty()) out["dirs"] = dirs;
    out["output"] = json ? "json" : "text";
    return out;
  }

  AnalysisOptions options() const {
    AnalysisOptions o;
    o.seed = seed;
    o.budget = budget();
    o.witness_count = witnesses;
    o.witness_rounds = rounds;
    o.enumeration_ceiling = ceiling;
    if (expected_dim >= 0) o.expected_dimension = expected_dim;
    return o;
  }
};

// ---------------------------------------------------------------------------
// Input loading

/// Field-independent description of the variety, read before dispatching on the field.
struct RawInput {
  std::string example;
  std::vector<std::string> variables;
  std::vector<std::string> polys;
  std::string point;
  std::optional<std::string> field;
  std::optional<int> expected_dim;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

/// Variety file: one directive per line, '#' starts a comment.
///   field fp:10007 | vars x0 x1 x2 | point 1,0,0 | expected-dim 2 | poly <polynomial>
inline RawInput read_variety_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  RawInput raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto space = line.find_first_of(" \t");
    const std::string word = line.substr(0, space);
    const std::string rest = space == std::string::npos ? "" : trim(line.substr(space));
    const std::string where = path + ":" + std::to_string(lineno);
    if (rest.empty()) throw InputError(where + ": directive '" + word + "' needs a value");
    if (word == "field") {
      raw.field = rest;
    } else if (word == "vars") {
      std::string names = rest;
      std::replace(names.begin(), names.end(), ',', ' ');
      std::istringstream ss(names);
      for (std::string v; ss >> v;) raw.variables.push_back(v);
    } else if (word == "point") {
      raw.point = rest;
    } else if (word == "expected-dim") {
      raw.expected_dim = std::atoi(rest.c_str());
    } else if (word == "poly") {
      raw.polys.push_back(rest);
    } else {
      throw InputError(where + ": unknown directive '" + word + "'");
    }
  }
  if (raw.variables.empty()) throw InputError(path + ": missing 'vars' directive");
  if (raw.polys.empty()) throw InputError(path + ": no 'poly' directives");
  return raw;
}

inline RawInput raw_input(RunConfig& cfg) {
  const int sources = !cfg.example.empty() + !cfg.polys.empty() + !cfg.file.empty();
  if (sources != 1) throw InputError("give exactly one of --example, --poly, --file");
  RawInput raw;
  if (!cfg.example.empty()) {
    ExampleSpec::parse(cfg.example);  // validate early
    raw.example = cfg.example;
  } else if (!cfg.file.empty()) {
    raw = read_variety_file(cfg.file);
  } else {
    if (cfg.vars < 1) throw InputError("--poly needs --vars <count> (variables x0 .. x<count-1>)");
    raw.variables = numbered_names("x", static_cast<std::size_t>(cfg.vars));
    raw.polys = cfg.polys;
  }
  if (!cfg.point.empty()) raw.point = cfg.point;
  if (cfg.expected_dim >= 0) raw.expected_dim = cfg.expected_dim;
  if (raw.field && !cfg.field_given) cfg.field = *raw.field;
  return raw;
}

template <FieldElement C>
struct Loaded {
  IdealPresentation<C> variety;
  ProjectivePoint<C> point;
  std::optional<int> expected_dimension;
  std::vector<std::string> flags;
};

template <FieldElement C>
Loaded<C> load(const RawInput& raw, const FieldSpec& field, int degree) {
  if (!raw.example.empty()) {
    Example<C> ex = make_example<C>(ExampleSpec::parse(raw.example), field);
    Loaded<C> out{std::move(ex.variety), std::move(ex.point), ex.expected_dimension, std::move(ex.flags)};
    if (!raw.point.empty()) out.point = ProjectivePoint<C>(parse_vector<C>(raw.point, field));
    if (raw.expected_dim) out.expected_dimension = raw.expected_dim;
    return out;
  }
  const RingPtr ring = make_ring(raw.variables, field);
  std::vector<Polynomial<C>> gens;
  for (std::size_t j = 0; j < raw.polys.size(); ++j) {
    Polynomial<C> f = parse_polynomial<C>(raw.polys[j], ring);
    if (f.is_zero()) throw InputError("equation " + std::to_string(j) + " is zero");
    if (!f.is_homogeneous())
      throw InputError("equation " + std::to_string(j) + " '" + raw.polys[j] + "' is not homogeneous");
    if (degree > 0 && f.degree() != degree)
      throw InputError("equation " + std::to_string(j) + " has degree " + std::to_string(f.degree()) +
                       ", --degree says " + std::to_string(degree));
    gens.push_back(std::move(f));
  }
  if (raw.point.empty()) throw InputError("a base point is required (--point or a 'point' directive)");
  ProjectivePoint<C> x(parse_vector<C>(raw.point, field));
  return Loaded<C>{IdealPresentation<C>(ring, std::move(gens)), std::move(x), raw.expected_dim, {}};
}

template <FieldElement C>
std::vector<Vec<C>> parse_vectors(const std::string& text, const FieldSpec& field) {
  std::vector<Vec<C>> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(';', start);
    out.push_back(parse_vector<C>(text.substr(start, pos - start), field));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

// ---------------------------------------------------------------------------
// Subcommands. Each writes its report to `out` and returns an exit code.

inline std::string join(const std::vector<std::string>& v, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

inline std::string degree_text(const std::optional<mpz_class>& d) { return d ? d->get_str() : "-"; }

inline void print_text(const AnalysisReport& r, std::ostream& out) {
  out << "variety: " << r.equations.size() << " equation(s) in P^" << r.ambient_dimension << " over "
      << r.field.to_string() << "\n";
  for (const auto& e : r.equations) out << "  " << e << " = 0\n";
  out << "point: (" << join(r.point) << ")\n";
  out << "n = " << r.n << "\n";
  for (const auto& s : r.sigma_chain)
    out << "Sigma^" << s.k << ": dim " << s.dimension << " (expected " << s.expected_dimension << "), degree "
        << degree_text(s.degree) << "\n";
  out << "Sigma^inf: dim " << r.sigma_infinity.dimension << ", degree " << degree_text(r.sigma_infinity.degree) << "\n";
  out << "bound: Sigma^" << r.bound.k << " degree " << degree_text(r.bound.degree) << " vs " << r.n
      << "! = " << r.bound.n_factorial.get_str();
  if (r.bound.satisfied) out << (*r.bound.satisfied ? " (satisfied)" : " (VIOLATED)");
  else out << " (not compared: Sigma^n is not zero-dimensional)";
  out << "\n";
  out << "stabilization: " << (r.stabilization_k ? "k = " + std::to_string(*r.stabilization_k) : "unknown") << "\n";
  if (r.rational_lines) {
    out << "rational lines: " << r.rational_lines->size() << "\n";
    for (const auto& l : *r.rational_lines)
      out << "  w = (" << join(l.direction) << ")  v = (" << join(l.ambient) << ")"
          << (l.contained ? "" : "  NOT CONTAINED") << "\n";
  }
  for (const auto& c : r.certificates)
    out << "certificate k = " << c.k << ": " << to_string(c.verdict) << " via " << to_string(c.method) << " ("
        << c.witnesses.size() << " witnesses)\n";
  for (const auto& f : r.flags) out << "flag: " << f << "\n";
}

inline int exit_for(const AnalysisReport& r) {
  if (r.anomaly()) return kAnomaly;
  if (r.inconclusive()) return kBudgetExhausted;
  return kOk;
}

inline int exit_for(const CertificateReport& c) {
  if (c.verdict == Verdict::refuted_witness) return kAnomaly;
  if (c.verdict == Verdict::inconclusive_budget) return kBudgetExhausted;
  return kOk;
}

template <FieldElement C>
int run_analyze(const RunConfig& cfg, const Loaded<C>& in, std::ostream& out) {
  AnalysisOptions opts = cfg.options();
  opts.expected_dimension = in.expected_dimension;
  AnalysisReport r = analyze_lines(in.variety, in.point, opts);
  r.flags.insert(r.flags.begin(), in.flags.begin(), in.flags.end());
  if (cfg.json) out << report_json(r, cfg.to_json()).dump(2) << "\n";
  else print_text(r, out);
  return exit_for(r);
}

inline ContactOrder parse_order(const std::string& k) {
  if (k.empty()) throw InputError("--k is required");
  if (k == "inf") return ContactOrder::infinite();
  const long long v = detail::parse_count(k, "contact order", 2, 1000);
  return ContactOrder::finite(static_cast<int>(v));
}

template <FieldElement C>
ContactSystem<C> system_for(const Loaded<C>& in, const RunConfig& cfg) {
  FrameOptions fo{in.expected_dimension, cfg.budget()};
  return contact_system(in.variety, tangent_frame(in.variety, in.point, fo));
}

template <FieldElement C>
int run_sigma(const RunConfig& cfg, const Loaded<C>& in, std::ostream& out) {
  const ContactSystem<C> cs = system_for(in, cfg);
  const SigmaScheme<C> s = with_invariants(sigma_ideal(cs, parse_order(cfg.k)), cfg.budget());
  if (cfg.json) {
    Json gens = Json::array();
    for (std::size_t g = 0; g < s.labels.size(); ++g)
      gens.push_back({{"equation", s.labels[g].first},
                      {"degree", s.labels[g].second},
                      {"polynomial", s.ideal.generators()[g].to_string()}});
    Json j;
    j["config"] = cfg.to_json();
    j["k"] = s.k.to_string();
    j["variables"] = cs.w_ring->variables;
    j["generators"] = std::move(gens);
    j["dim"] = *s.dimension;
    j["degree"] = exact(s.degree);
    out << j.dump(2) << "\n";
  } else {
    out << "Sigma^" << s.k.to_string() << " in P^" << cs.n() - 1 << " (" << join(cs.w_ring->variables) << "): dim "
        << *s.dimension << ", degree " << degree_text(s.degree) << "\n";
    for (std::size_t g = 0; g < s.labels.size(); ++g)
      out << "  G[" << s.labels[g].first << "," << s.labels[g].second << "] = " << s.ideal.generators()[g].to_string()
          << "\n";
  }
  return kOk;
}

template <FieldElement C>
int run_certify(const RunConfig& cfg, const Loaded<C>& in, std::ostream& out) {
  const ContactSystem<C> cs = system_for(in, cfg);
  const ContactOrder k = parse_order(cfg.k);
  if (k.is_infinite() || k.value() > cs.max_order)
    throw InputError("certificate order must satisfy 2 <= k <= " + std::to_string(cs.max_order));
  AnalysisOptions opts = cfg.options();
  opts.expected_dimension = in.expected_dimension;
  const CertificateReport c = excess_certificate(cs, k.value(), opts);
  if (cfg.json) {
    Json j;
    j["config"] = cfg.to_json();
    j["certificate"] = report_json(c);
    out << j.dump(2) << "\n";
  } else {
    out << "k = " << c.k << ": dim " << c.dimension << " vs expected " << c.expected_dimension
        << (c.excess ? " (excess)" : "") << "\n";
    for (const auto& r : c.radical_checks)
      out << "  G[" << r.equation << "," << r.degree << "] in radical: " << (r.member ? "yes" : "no") << "\n";
    for (const auto& w : c.witnesses)
      out << "  witness w = (" << join(w.direction) << "): " << (w.contained ? "contained" : "NOT contained") << "\n";
    out << "verdict: " << to_string(c.verdict) << " via " << to_string(c.method) << "\n";
    if (!c.note.empty()) out << "note: " << c.note << "\n";
  }
  return exit_for(c);
}

template <FieldElement C>
int run_lines(const RunConfig& cfg, const Loaded<C>& in, std::ostream& out) {
  if (!in.variety.field().is_prime()) throw InputError("lines needs a prime field");
  check_enumeration_ceiling(in.variety.field(), cfg.ceiling);
  const ContactSystem<C> cs = system_for(in, cfg);
  const auto dirs = contained_rational_directions(cs, cfg.ceiling);
  if (cfg.json) {
    Json lines = Json::array();
    for (const auto& w : dirs) lines.push_back({{"direction", to_strings(w)}, {"ambient", to_strings(cs.frame.direction(w))}});
    Json j;
    j["config"] = cfg.to_json();
    j["n"] = cs.n();
    j["count"] = dirs.size();
    j["lines"] = std::move(lines);
    out << j.dump(2) << "\n";
  } else {
    out << dirs.size() << " rational line(s) through (" << join(to_strings(in.point.coordinates())) << ") over "
        << in.variety.field().to_string() << "\n";
    for (const auto& w : dirs)
      out << "  w = (" << join(to_strings(w)) << ")  v = (" << join(to_strings(cs.frame.direction(w))) << ")\n";
  }
  return kOk;
}

template <FieldElement C>
int run_plane(const RunConfig& cfg, const Loaded<C>& in, std::ostream& out) {
  if (cfg.dirs.empty()) throw InputError("plane needs --dirs 'v1;v2;...' (ambient vectors)");
  const TangentFrame<C> frame = tangent_frame(in.variety, in.point, FrameOptions{in.expected_dimension, cfg.budget()});
  const ContactOrder order = plane_contact_order(in.variety, frame, parse_vectors<C>(cfg.dirs, in.variety.field()));
  if (cfg.json) {
    Json j;
    j["config"] = cfg.to_json();
    j["contact_order"] = order.is_infinite() ? Json("inf") : Json(order.value());
    j["contained"] = order.is_infinite();
    out << j.dump(2) << "\n";
  } else {
    out << "contact order: " << order.to_string() << (order.is_infinite() ? " (plane contained)" : "") << "\n";
  }
  return kOk;
}

template <FieldElement C>
int run_example(const RunConfig& cfg, const Loaded<C>& in, std::ostream& out) {
  std::vector<std::string> eqs;
  for (const auto& g : in.variety.generators()) eqs.push_back(g.to_string());
  const auto pt = to_strings(in.point.coordinates());
  if (cfg.json) {
    Json j;
    j["config"] = cfg.to_json();
    j["field"] = in.variety.field().to_string();
    j["variables"] = in.variety.ring()->variables;
    j["equations"] = eqs;
    j["point"] = pt;
    j["expected_dimension"] = in.expected_dimension ? Json(*in.expected_dimension) : Json(nullptr);
    j["flags"] = in.flags;
    out << j.dump(2) << "\n";
  } else {
    // re-readable with --file
    out << "# " << (cfg.example.empty() ? "variety" : cfg.example) << "\n";
    for (const auto& f : in.flags) out << "# " << f << "\n";
    out << "field " << in.variety.field().to_string() << "\n";
    out << "vars " << join(in.variety.ring()->variables, " ") << "\n";
    out << "point " << join(pt) << "\n";
    if (in.expected_dimension) out << "expected-dim " << *in.expected_dimension << "\n";
    for (const auto& e : eqs) out << "poly " << e << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

inline void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", Json{{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

inline int dispatch(RunConfig& cfg, std::ostream& out) {
  RawInput raw = raw_input(cfg);
  const FieldSpec field = FieldSpec::parse(cfg.field);
  return with_field(field, [&]<class C>(std::type_identity<C>) {
    const Loaded<C> in = load<C>(raw, field, cfg.degree);
    if (cfg.subcommand == "analyze") return run_analyze(cfg, in, out);
    if (cfg.subcommand == "sigma") return run_sigma(cfg, in, out);
    if (cfg.subcommand == "certify") return run_certify(cfg, in, out);
    if (cfg.subcommand == "lines") return run_lines(cfg, in, out);
    if (cfg.subcommand == "plane") return run_plane(cfg, in, out);
    if (cfg.subcommand == "example") return run_example(cfg, in, out);
    throw InputError("unknown subcommand '" + cfg.subcommand + "'");
  });
}

/// Runs the subcommand, mapping exceptions to exit codes and JSON on `err`.
inline int guarded(RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(cfg, out);
  } catch (const InputError& e) {
    write_error(err, e.kind(), e.what());
    return kInputError;
  } catch (const BudgetExhausted& e) {
    write_error(err, "budget_exhausted", e.what());
    return kBudgetExhausted;
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what());
    return kAnomaly;
  }
}

/// Splits a batch line into arguments; double quotes group words.
inline std::vector<std::string> split_args(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, any = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      any = true;
    } else if (!quoted && (ch == ' ' || ch == '\t')) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += ch;
      any = true;
    }
  }
  if (quoted) throw InputError("unbalanced quote in batch line");
  if (any) out.push_back(cur);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One analysis per non-empty, non-comment line; one compact JSON object per line of output.
inline int run_batch(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open batch file '" + path + "'");
  int worst = kOk;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> args{"analyze", "--json"};
    for (auto& a : split_args(line)) args.push_back(a);
    std::ostringstream o, e;
    const int code = run(args, o, e);
    if (code == kOk || code == kAnomaly || code == kBudgetExhausted) {
      std::string text = o.str();
      if (text.empty()) {
        out << trim(e.str()) << "\n";
      } else {
        out << Json::parse(text).dump() << "\n";
      }
    } else {
      out << trim(e.str()) << "\n";
    }
    if (code == kAnomaly || worst == kAnomaly) worst = kAnomaly;
    else worst = std::max(worst, code);
  }
  return worst;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv(kBudgetEnv)) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      write_error(err, "input", std::string(kBudgetEnv) + " must be a positive integer");
      return kInputError;
    }
    cfg.max_reductions = v;
  }

  CLI::App app{"clines: lines through a point of a projective variety"};
  app.require_subcommand(1);
  std::string field_text;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--example", cfg.example, "example key (quadric-surface, random:<d>:<N>[:seed=S], ...)");
    sub->add_option("--poly", cfg.polys, "homogeneous equation (repeatable)");
    sub->add_option("--vars", cfg.vars, "number of variables x0..x<vars-1> for --poly");
    sub->add_option("--degree", cfg.degree, "required degree of every --poly");
    sub->add_option("--file", cfg.file, "variety file");
    sub->add_option("--point", cfg.point, "base point, comma separated");
    sub->add_option("--field", field_text, "q or fp:<prime> (default fp:10007)");
    sub->add_option("--seed", cfg.seed, "seed for slicing and sampling");
    sub->add_option("--expected-dim", cfg.expected_dim, "dimension of the variety (skips inference)");
    sub->add_option("--max-reductions", cfg.max_reductions, "Groebner reduction budget");
    sub->add_option("--max-basis", cfg.max_basis, "Groebner basis size budget");
    sub->add_flag("--json", cfg.json, "JSON output");
  };
  CLI::App* analyze = app.add_subcommand("analyze", "sigma chain, degree bound, stabilization, certificates");
  common(analyze);
  analyze->add_option("--witnesses", cfg.witnesses, "witnesses per certificate");
  analyze->add_option("--rounds", cfg.rounds, "slicing rounds per certificate (0 = automatic)");
  analyze->add_option("--batch", cfg.batch, "file with one analyze argument line per instance");
  CLI::App* sigma = app.add_subcommand("sigma", "print the generators of Sigma^k");
  common(sigma);
  sigma->add_option("--k", cfg.k, "contact order (integer >= 2 or inf)")->required();
  CLI::App* certify = app.add_subcommand("certify", "excess-dimension certificate for Sigma^k");
  common(certify);
  certify->add_option("--k", cfg.k, "contact order")->required();
  certify->add_option("--witnesses", cfg.witnesses, "witness count");
  certify->add_option("--rounds", cfg.rounds, "slicing rounds (0 = automatic)");
  CLI::App* lines = app.add_subcommand("lines", "exhaustive count of rational contained lines");
  common(lines);
  lines->add_option("--ceiling", cfg.ceiling, "largest prime allowed for enumeration");
  CLI::App* plane = app.add_subcommand("plane", "contact order of the plane through the point");
  common(plane);
  plane->add_option("--dirs", cfg.dirs, "ambient direction vectors separated by ';'")->required();
  CLI::App* example = app.add_subcommand("example", "print a generated variety and point");
  common(example);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kInputError;
  }
  for (CLI::App* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  if (!field_text.empty()) {
    cfg.field = field_text;
    cfg.field_given = true;
  }
  if (!cfg.batch.empty()) {
    try {
      return run_batch(cfg.batch, out);
    } catch (const InputError& e) {
      write_error(err, e.kind(), e.what());
      return kInputError;
    }
  }
  return guarded(cfg, out, err);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace clines::cli
