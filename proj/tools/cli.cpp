#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <iomanip>
#include <sstream>

#include "hecke/algebra.hpp"
#include "hecke/serialize.hpp"
#include "hecke/specht.hpp"
#include "hecke/unitarity.hpp"

namespace hecke::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int env_int(const char* name, int fallback) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    const long x = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && x > 0 && x < 1'000'000) return static_cast<int>(x);
  }
  return fallback;
}

struct Config {
  std::string format = "json";
  int threads = 0;
  unsigned precision = 0;
  std::string output;
  std::string lambda;
  std::string c;
  bool hermitian = false;
  bool with_action = false;
  std::string dump_gram;
  std::string dump_element;
  std::string which = "m";
  std::optional<int> bound;
  std::optional<int> n_max;

  int worker_count() const { return threads > 0 ? threads : default_threads(); }
  unsigned start_bits() const { return precision > 0 ? precision : default_precision_bits(); }
};

Partition shape_of(const std::string& text) {
  if (text.find('|') != std::string::npos) throw UsageError("this command takes a single partition, not a multipartition: " + text);
  Partition p;
  try {
    p = Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --lambda: ") + e.what());
  }
  if (p.empty()) throw UsageError("--lambda must be a nonempty partition");
  if (p.size() > kMaxSymbolicRank) throw SizeGuardError("n = " + std::to_string(p.size()) + " exceeds the limit " + std::to_string(kMaxSymbolicRank));
  return p;
}

RationalC c_of(const std::string& text) {
  try {
    return RationalC::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --c: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <class T>
std::string matrix_csv(const Matrix<T>& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << csv_quote(m(i, j).to_string());
    os << '\n';
  }
  return os.str();
}

template <class T>
std::string matrix_pretty(const Matrix<T>& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      cells.push_back(m(i, j).to_string());
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (int j = 0; j < m.cols(); ++j)
      os << (j ? "  " : " ") << std::setw(static_cast<int>(width)) << cells[static_cast<std::size_t>(i * m.cols() + j)];
    os << " ]\n";
  }
  return os.str();
}

std::string signature_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," + std::to_string(s.zero) + ")";
}

std::string e_string(const std::optional<int>& e) { return e ? std::to_string(*e) : "inf"; }

std::string basis_line(const SpechtData& sd) {
  std::string out;
  for (const auto& t : sd.basis) out += (out.empty() ? "" : " | ") + t.to_string();
  return out;
}

struct Result {
  std::string text;
  int code = kOk;
};

Result cmd_gram(const Config& cfg) {
  const auto shape = shape_of(cfg.lambda);
  if (cfg.hermitian && cfg.c.empty()) throw UsageError("--hermitian needs --c");
  const auto sd = build_specht(shape);
  Json j;
  std::string csv;
  std::string pretty;
  if (cfg.c.empty()) {
    j = to_json(sd, cfg.with_action);
    csv = matrix_csv(sd.gram);
    pretty = "Gram matrix of (" + shape.to_string() + "), basis " + basis_line(sd) + "\n" + matrix_pretty(sd.gram);
  } else if (cfg.hermitian) {
    const auto hg = hermitian_gram(sd, c_of(cfg.c));
    j = to_json(hg);
    csv = matrix_csv(hg.h);
    pretty = "Hermitian form of (" + shape.to_string() + ") at c = " + hg.c.to_string() + ", alpha = " + hg.alpha.to_string() + "\n" +
             matrix_pretty(hg.h);
  } else {
    const auto c = c_of(cfg.c);
    const auto g = specialize(sd.gram, c);
    j = Json{{"schema", kSchemaVersion}, {"lambda", shape.to_string()}, {"c", c.to_string()}, {"gram", to_json(g)}};
    csv = matrix_csv(g);
    pretty = "Gram matrix of (" + shape.to_string() + ") at c = " + c.to_string() + "\n" + matrix_pretty(g);
  }
  if (!cfg.dump_gram.empty()) write_file(cfg.dump_gram, dump(j));
  if (cfg.format == "csv") return {csv};
  if (cfg.format == "pretty") return {pretty};
  return {dump(j)};
}

Result cmd_element(const Config& cfg) {
  const auto shape = shape_of(cfg.lambda);
  const auto alg = make_symbolic_algebra(shape.size());
  HeckeElement<LaurentPoly> x;
  if (cfg.which == "x") x = alg.x_lambda(shape);
  else if (cfg.which == "m") x = alg.m_lambda(shape);
  else if (cfg.which == "sigma-m") x = alg.sigma(alg.m_lambda(shape));
  else x = verify_lemma31(alg, shape).u;
  const Json j = to_json(alg, x);
  if (!cfg.dump_element.empty()) write_file(cfg.dump_element, dump(j));
  if (cfg.format == "csv") {
    std::string out = "word,coeff\n";
    for (const auto& t : j["terms"]) out += csv_quote(t["word"].get<std::string>()) + "," + csv_quote(laurent_from_json(t["coeff"]).to_string()) + "\n";
    return {out};
  }
  if (cfg.format == "pretty") {
    std::string out;
    for (const auto& [k, c] : x.terms) out += (out.empty() ? "" : " + ") + ("(" + c.to_string() + ")*" + alg.word_string(k));
    return {(out.empty() ? "0" : out) + "\n"};
  }
  return {dump(j)};
}

Result cmd_unitary(const Config& cfg) {
  const auto shape = shape_of(cfg.lambda);
  const auto v = verdict(shape, c_of(cfg.c), default_cache(), cfg.start_bits());
  if (cfg.format == "csv") {
    const auto& s = v.signature;
    std::ostringstream os;
    os << "lambda,c,e,status,n_plus,n_minus,n_zero,dim_D\n"
       << csv_quote(shape.to_string()) << ',' << v.c.to_string() << ',' << e_string(v.e) << ',' << to_string(v.status) << ',' << s.positive << ','
       << s.negative << ',' << s.zero << ',' << v.dim_d << '\n';
    return {os.str()};
  }
  if (cfg.format == "pretty") {
    return {"(" + shape.to_string() + ") at c = " + v.c.to_string() + " (e = " + e_string(v.e) + "): " + to_string(v.status) + ", signature " +
            signature_string(v.signature) + ", dim D = " + std::to_string(v.dim_d) + "\n"};
  }
  return {dump(to_json(v))};
}

std::string report_pretty(const ScanReport& rep) {
  std::ostringstream os;
  os << "(" << rep.shape.to_string() << "), bound " << rep.bound << ": " << rep.tested_points.size() << " points, "
     << (rep.agreement ? "agreement" : "MISMATCH") << "\n";
  for (const auto& p : rep.tested_points)
    os << "  " << std::setw(7) << p.c.to_string() << "  " << std::setw(17) << to_string(p.verdict.status) << "  "
       << signature_string(p.verdict.signature) << (p.predicted ? "  predicted" : "") << "\n";
  for (const auto& m : rep.mismatches) os << "  mismatch: " << m << "\n";
  return os.str();
}

int bound_of(const Config& cfg) {
  const int b = cfg.bound ? *cfg.bound : env_int("HECKE_BOUND", 14);
  if (b < 1 || b > 10000) throw UsageError("--bound must lie in [1, 10000]");
  return b;
}

Result cmd_locus(const Config& cfg) {
  const auto shape = shape_of(cfg.lambda);
  const auto rep = scan_locus(shape, bound_of(cfg), default_cache(), cfg.worker_count(), cfg.start_bits());
  const int code = rep.agreement ? kOk : kMismatch;
  if (cfg.format == "csv") return {scan_csv_header() + to_csv_rows(rep), code};
  if (cfg.format == "pretty") return {report_pretty(rep), code};
  return {dump(to_json(rep)), code};
}

Result cmd_verify(const Config& cfg) {
  const int n_max = cfg.n_max ? *cfg.n_max : env_int("HECKE_N_MAX", 5);
  if (n_max < 2) throw UsageError("--n-max must be at least 2");
  if (n_max > kMaxSymbolicRank) throw SizeGuardError("n-max " + std::to_string(n_max) + " exceeds the limit " + std::to_string(kMaxSymbolicRank));
  const auto sum = verify_theorem(n_max, bound_of(cfg), default_cache(), cfg.worker_count(), cfg.start_bits());
  const int code = sum.agreement ? kOk : kMismatch;
  if (cfg.format == "csv") {
    std::string out = scan_csv_header();
    for (const auto& rep : sum.reports) out += to_csv_rows(rep);
    return {out, code};
  }
  if (cfg.format == "pretty") {
    std::ostringstream os;
    os << "n <= " << sum.n_max << ", bound " << sum.bound << ": " << sum.reports.size() << " shapes, " << sum.points_checked << " points, "
       << (sum.agreement ? "agreement" : "MISMATCH") << "\n";
    for (const auto& rep : sum.reports)
      for (const auto& m : rep.mismatches) os << "  (" << rep.shape.to_string() << ") " << m << "\n";
    return {os.str(), code};
  }
  return {dump(to_json(sum)), code};
}

Result cmd_jantzen(const Config& cfg) {
  const auto shape = shape_of(cfg.lambda);
  const auto rep = jantzen_layers(build_specht(shape), c_of(cfg.c));
  std::string layers;
  for (int d : rep.layer_dims) layers += (layers.empty() ? "" : ";") + std::to_string(d);
  if (cfg.format == "csv") return {"lambda,c,layers\n" + csv_quote(shape.to_string()) + "," + rep.c.to_string() + "," + layers + "\n"};
  if (cfg.format == "pretty") {
    std::ostringstream os;
    os << "Jantzen filtration of (" << shape.to_string() << ") at c = " << rep.c.to_string() << "\n";
    for (std::size_t i = 0; i < rep.layer_dims.size(); ++i) os << "  dim M_" << i << " = " << rep.layer_dims[i] << "\n";
    return {os.str()};
  }
  return {dump(to_json(rep))};
}

Result cmd_det(const Config& cfg) {
  const auto shape = shape_of(cfg.lambda);
  const auto det = gram_determinant(build_specht(shape));
  const auto mult = cyclotomic_root_multiplicities(det, 4 * shape.size());
  LaurentPoly unit = det;
  for (const auto& [e, k] : mult)
    for (int i = 0; i < k; ++i) unit = *unit.divide_exact(LaurentPoly(0, cyclotomic_polynomial(e)));
  if (cfg.format == "csv") {
    std::string out = "e,multiplicity\n";
    for (const auto& [e, k] : mult) out += std::to_string(e) + "," + std::to_string(k) + "\n";
    return {out};
  }
  if (cfg.format == "pretty") {
    std::ostringstream os;
    os << "det G(" << shape.to_string() << ") = " << det.to_string() << "\n  = " << unit.to_string();
    for (const auto& [e, k] : mult) os << " * Phi_" << e << (k > 1 ? "^" + std::to_string(k) : "");
    os << "\n";
    return {os.str()};
  }
  Json factors = Json::array();
  for (const auto& [e, k] : mult) factors.push_back(Json{{"e", e}, {"multiplicity", k}});
  return {dump(Json{{"schema", kSchemaVersion}, {"lambda", shape.to_string()}, {"det", to_json(det)}, {"factors", factors}, {"unit", to_json(unit)}})};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Specht modules of Hecke algebras, their invariant Hermitian forms, and unitarity at roots of unity."};
  app.name("hecke");
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 mismatch against the closed-form locus, 2 usage error, 3 size guard, 4 internal error.\n"
      "Environment: HECKE_THREADS (worker count), HECKE_PRECISION_BITS (starting interval precision), HECKE_N_MAX (default 5),\n"
      "HECKE_BOUND (default denominator bound 14).");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--threads", cfg.threads, "Worker threads (default: HECKE_THREADS or all cores)")->check(CLI::Range(1, 1024));
  app.add_option("--precision", cfg.precision, "Starting precision in bits for certified signs")->check(CLI::Range(16u, 1u << 20));
  app.add_option("--output", cfg.output, "Write the result to this file instead of standard output");

  auto add_lambda = [&](CLI::App* sub) { sub->add_option("--lambda", cfg.lambda, "Partition, e.g. 3,1,1")->required(); };
  std::vector<std::pair<CLI::App*, std::function<Result(const Config&)>>> commands;

  auto* gram = app.add_subcommand("gram", "Gram matrix (symbolic, specialized, or Hermitian)");
  add_lambda(gram);
  gram->add_option("--c", cfg.c, "Specialize at q = exp(2 pi i c), c in (-1/2, 1/2]");
  gram->add_flag("--hermitian", cfg.hermitian, "Emit the Hermitian form H instead of G");
  gram->add_flag("--with-action", cfg.with_action, "Include the generator matrices (symbolic output only)");
  gram->add_option("--dump-gram", cfg.dump_gram, "Also write the JSON matrix to this file");
  commands.emplace_back(gram, cmd_gram);

  auto* element = app.add_subcommand("element", "Hecke algebra elements attached to a partition");
  add_lambda(element);
  element->add_option("--which", cfg.which, "x, m, sigma-m, or u (sigma(m) = m u)")->check(CLI::IsMember({"x", "m", "sigma-m", "u"}));
  element->add_option("--dump-element", cfg.dump_element, "Also write the JSON element to this file");
  commands.emplace_back(element, cmd_element);

  auto* unitary = app.add_subcommand("unitary", "Unitarity verdict for one (lambda, c)");
  add_lambda(unitary);
  unitary->add_option("--c", cfg.c, "c in (-1/2, 1/2]")->required();
  commands.emplace_back(unitary, cmd_unitary);

  auto* locus = app.add_subcommand("locus", "Scan c and compare with the closed-form locus");
  add_lambda(locus);
  locus->add_option("--bound", cfg.bound, "Largest denominator (default: HECKE_BOUND or 14)");
  commands.emplace_back(locus, cmd_locus);

  auto* verify = app.add_subcommand("verify", "Scan every partition of 2 <= n <= n-max");
  verify->add_option("--n-max", cfg.n_max, "Largest n (default: HECKE_N_MAX or 5)");
  verify->add_option("--bound", cfg.bound, "Largest denominator (default: HECKE_BOUND or 14)");
  commands.emplace_back(verify, cmd_verify);

  auto* jantzen = app.add_subcommand("jantzen", "Jantzen filtration dimensions at c");
  add_lambda(jantzen);
  jantzen->add_option("--c", cfg.c, "c in (-1/2, 1/2]")->required();
  commands.emplace_back(jantzen, cmd_jantzen);

  auto* det = app.add_subcommand("det", "Gram determinant and its cyclotomic factors");
  add_lambda(det);
  commands.emplace_back(det, cmd_det);

  for (auto& [sub, fn] : commands) sub->fallthrough();

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
    err << "hecke: " << e.what() << "\n";
    return kUsage;
  }

  try {
    for (auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      const Result r = fn(cfg);
      if (cfg.output.empty()) out << r.text;
      else write_file(cfg.output, r.text);
      return r.code;
    }
    return kUsage;
  } catch (const UsageError& e) {
    err << "hecke: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeGuardError& e) {
    err << "hecke: size guard: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const std::exception& e) {
    err << "hecke: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace hecke::cli
