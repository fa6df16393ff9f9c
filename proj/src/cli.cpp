#include "qstar/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstar/bounds.hpp"
#include "qstar/error.hpp"
#include "qstar/report.hpp"
#include "qstar/schwarz.hpp"
#include "qstar/search.hpp"
#include "qstar/starlike.hpp"

namespace qstar::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "csv";
  std::uint64_t seed = 0;
  int order = kDefaultOrder;
  std::string out_path;

  std::vector<double> q;
  std::string zeta;
  std::optional<double> alpha;

  int n = 4;
  std::string method = "recursion";
  bool self_check = false;

  std::string suite = "all";
  std::string grid = "default";
  int samples = 1000;
  int depth = 5;

  std::string input;
  double rmax = 0.95;

  std::string a, b, c;
  int radial = 256;
  int angular = 720;
};

/// "re" or "re,im".
cplx parse_complex(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const double re = std::stod(text.substr(0, comma), &used);
    if (used != (comma == std::string::npos ? text.size() : comma)) throw std::invalid_argument(text);
    if (comma == std::string::npos) return re;
    const std::string tail = text.substr(comma + 1);
    const double im = std::stod(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + " expects re or re,im but got '" + text + "'");
  }
}

/// Class parameters from --q / --zeta / --alpha; one parameter set per --q.
std::vector<ClassParams> class_params(const Options& o, std::vector<double> default_q) {
  if (!o.q.empty() && !o.zeta.empty()) throw UsageError("--q and --zeta are mutually exclusive");
  if (!o.zeta.empty()) return {ClassParams(parse_complex(o.zeta, "--zeta"), o.alpha.value_or(0.0))};
  if (o.alpha && *o.alpha != 0.0) throw UsageError("--q implies --alpha 0; use --zeta q,0 with --alpha");
  std::vector<ClassParams> out;
  for (double q : o.q.empty() ? default_q : o.q) {
    if (!(q > 0.0 && q < 1.0)) throw UsageError("--q must lie in (0, 1)");
    out.push_back(ClassParams::real(q));
  }
  return out;
}

ClassParams single_params(const Options& o) {
  const auto all = class_params(o, {0.5});
  if (all.size() != 1) throw UsageError("this command takes a single --q");
  return all.front();
}

bool json_output(const Options& o) { return o.format == "json"; }

json complex_json(cplx v) { return json::array({v.real(), v.imag()}); }

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
  const std::vector<ClassParams> params = class_params(o, {0.5});

  struct Row {
    std::string id;
    cplx zeta;
    std::string case_label;
    double bound;
  };
  std::vector<Row> rows;
  for (const ClassParams& p : params) {
    if (p.is_real_q()) {
      const double q = p.zeta().real();
      for (FunctionalId id : kAllFunctionals) {
        const std::string name(to_string(id));
        if (id == FunctionalId::h2_2 || id == FunctionalId::t2_3) {
          for (CaseFlag flag : {CaseFlag::a2_zero, CaseFlag::a2_nonzero}) {
            rows.push_back({name, p.zeta(), std::string(to_string(flag)), functional_bound(id, q, flag)});
          }
        } else {
          rows.push_back({name, p.zeta(), "", functional_bound(id, q)});
        }
      }
    }
    for (int n = 2; n <= o.n; ++n) {
      const double v = bound_value({AuxBound::an_product, p, n, std::nullopt, {}});
      rows.push_back({"an_product(n=" + std::to_string(n) + ")", p.zeta(), "", v});
    }
  }

  if (json_output(o)) {
    json arr = json::array();
    for (const Row& r : rows) {
      arr.push_back({{"functional", r.id}, {"zeta", complex_json(r.zeta)}, {"case", r.case_label}, {"bound", r.bound}});
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "functional,q,case,bound\n";
    for (const Row& r : rows) {
      out << r.id << ',' << format_complex(r.zeta) << ',' << r.case_label << ',' << format_double(r.bound) << '\n';
    }
  }
  return kExitOk;
}

std::vector<cplx> extremal_coeffs(const std::string& method, const ClassParams& p, int n) {
  std::vector<cplx> a(static_cast<std::size_t>(n));
  if (method == "formula") {
    for (int k = 1; k <= n; ++k) a[static_cast<std::size_t>(k - 1)] = extremal_coeff_formula(p, k);
    return a;
  }
  const StarlikeFunction f = method == "product"
                                 ? extremal_product(p, n)
                                 : coeffs_from_schwarz(canonical_schwarz(CanonicalKind::identity, 0.0, n), p, n);
  for (int k = 1; k <= n; ++k) a[static_cast<std::size_t>(k - 1)] = f.a(k);
  return a;
}

int cmd_extremal(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1) throw UsageError("--n must be positive");
  const ClassParams p = single_params(o);
  const std::vector<cplx> a = extremal_coeffs(o.method, p, o.n);

  int status = kExitOk;
  if (o.self_check) {
    const std::vector<cplx> r = extremal_coeffs("recursion", p, o.n);
    const std::vector<cplx> pr = extremal_coeffs("product", p, o.n);
    const std::vector<cplx> fo = extremal_coeffs("formula", p, o.n);
    const auto agree = [](cplx x, cplx y) {
      return std::abs(x - y) <= 1e-9 * std::max({std::abs(x), std::abs(y), 1e-300});
    };
    for (int k = 0; k < o.n; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (!agree(r[uk], pr[uk]) || !agree(r[uk], fo[uk]) || !agree(pr[uk], fo[uk])) {
        err << "self-check: methods disagree at n = " << k + 1 << ": recursion " << format_complex(r[uk])
            << ", product " << format_complex(pr[uk]) << ", formula " << format_complex(fo[uk]) << '\n';
        status = kExitViolation;
      }
    }
  }

  if (json_output(o)) {
    json arr = json::array();
    for (int k = 0; k < o.n; ++k) {
      const cplx v = a[static_cast<std::size_t>(k)];
      arr.push_back({{"n", k + 1}, {"re", v.real()}, {"im", v.imag()}});
    }
    out << json{{"method", o.method}, {"zeta", complex_json(p.zeta())}, {"alpha", p.alpha()}, {"coefficients", arr}}.dump(2)
        << '\n';
  } else {
    out << "n,re,im\n";
    for (int k = 0; k < o.n; ++k) {
      const cplx v = a[static_cast<std::size_t>(k)];
      out << k + 1 << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
  }
  return status;
}

void append(VerificationReport& into, const VerificationReport& from) {
  into.items.insert(into.items.end(), from.items.begin(), from.items.end());
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.samples < 0) throw UsageError("--samples must be non-negative");
  if (o.depth < 1) throw UsageError("--depth must be positive");
  if (o.order < 2) throw UsageError("--order must be at least 2");
  const GridSpec grid = parse_grid(o.grid);

  const bool all = o.suite == "all";
  std::vector<FunctionalId> functionals;
  const auto take = [&](std::initializer_list<FunctionalId> ids) {
    for (FunctionalId id : ids) functionals.push_back(id);
  };
  if (all || o.suite == "initial") take({FunctionalId::abs_a2, FunctionalId::abs_a3, FunctionalId::abs_a4});
  if (all || o.suite == "hankel") take({FunctionalId::fekete_a2a3_a4, FunctionalId::h1_2, FunctionalId::h2_2});
  if (all || o.suite == "toeplitz") {
    take({FunctionalId::t1_2, FunctionalId::t2_2, FunctionalId::t3_2, FunctionalId::t1_3, FunctionalId::t2_3});
  }

  VerificationReport report;
  report.seed = o.seed;
  if (!functionals.empty()) {
    if (!o.zeta.empty()) throw UsageError("the sharpness suites take real --q values");
    std::vector<double> qs;
    for (const ClassParams& p : class_params(o, {0.5, 0.8})) qs.push_back(p.zeta().real());
    append(report, sharpness_report(qs, functionals, grid));
  }
  if (all || o.suite == "parseval") {
    std::vector<ClassParams> params;
    if (!o.zeta.empty() || !o.q.empty()) {
      params = class_params(o, {});
    } else {
      for (cplx zeta : {std::polar(0.6, std::numbers::pi / 4.0), cplx(0.0, 0.9), cplx(-0.5, 0.0)}) {
        for (double alpha : {0.0, 0.25}) params.emplace_back(zeta, alpha);
      }
    }
    for (const ClassParams& p : params) append(report, random_schwarz_suite(p, o.seed, o.samples, o.depth, o.order));
  }

  out << (json_output(o) ? report_to_json(report) : report_to_csv(report));
  return report.has_violation() ? kExitViolation : kExitOk;
}

std::vector<cplx> read_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open --input file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("--input is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_array() || doc.empty()) throw UsageError("--input must be a non-empty JSON array a_1, a_2, ...");
  std::vector<cplx> a;
  for (const json& v : doc) {
    if (v.is_number()) {
      a.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      a.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw UsageError("--input entries must be numbers or [re, im] pairs");
    }
  }
  return a;
}

int cmd_membership(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw UsageError("membership needs --input");
  if (!(o.rmax > 0.0 && o.rmax < 1.0)) throw UsageError("--rmax must lie in (0, 1)");
  const ClassParams p = single_params(o);
  const std::vector<cplx> a = read_coefficients(o.input);

  // Short inputs are zero padded to --order so the trusted-radius window
  // looks at the padding rather than at the leading terms.
  const int order = std::max(static_cast<int>(a.size()), o.order);
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
  std::copy(a.begin(), a.end(), c.begin() + 1);
  const StarlikeFunction f = StarlikeFunction::from_raw(PowerSeries(order, std::move(c)), p);
  MembershipGrid grid;
  grid.r_max = o.rmax;
  const MembershipResult r = membership_margin(f, grid);

  if (json_output(o)) {
    out << json{{"margin", r.margin}, {"effective_radius", r.effective_radius}, {"argmin", complex_json(r.argmin)}}.dump(2)
        << '\n';
  } else {
    out << "margin,effective_radius,argmin\n"
        << format_double(r.margin) << ',' << format_double(r.effective_radius) << ',' << format_complex(r.argmin)
        << '\n';
  }
  return kExitOk;
}

int cmd_y(const Options& o, std::ostream& out) {
  if (o.radial < 1 || o.angular < 1) throw UsageError("--radial and --angular must be positive");
  const cplx a = parse_complex(o.a, "--a");
  const cplx b = parse_complex(o.b, "--b");
  const cplx c = parse_complex(o.c, "--c");
  const double oracle = y_oracle(a, b, c, o.radial, o.angular);
  std::optional<double> closed;
  if (a.imag() == 0.0 && b.imag() == 0.0 && c.imag() == 0.0 && a.real() * c.real() >= 0.0) {
    closed = y_closed(a.real(), b.real(), c.real());
  }
  if (json_output(o)) {
    json j{{"y_oracle", oracle}};
    j["y_closed"] = closed ? json(*closed) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "y_oracle,y_closed\n" << format_double(oracle) << ',' << (closed ? format_double(*closed) : "") << '\n';
  }
  return kExitOk;
}

void add_shared(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", o.seed, "Seed for randomized suites");
  cmd->add_option("--order", o.order, "Series truncation order");
  cmd->add_option("--out", o.out_path, "Write results to this file instead of stdout");
}

void add_params(CLI::App* cmd, Options& o, const char* q_help) {
  cmd->add_option("--q", o.q, q_help);
  cmd->add_option("--zeta", o.zeta, "Complex zeta as re,im");
  cmd->add_option("--alpha", o.alpha, "Order alpha in [0, 1)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient bounds and sharpness checks for q-starlike functions", "qstar"};
  app.require_subcommand(1);
  Options o;

  auto* bounds = app.add_subcommand("bounds", "Closed-form bound table");
  add_shared(bounds, o);
  add_params(bounds, o, "Real q in (0, 1); repeatable");
  bounds->add_option("--n", o.n, "Largest n for the product bound rows");

  auto* extremal = app.add_subcommand("extremal", "Coefficients of the omega(z) = z function");
  add_shared(extremal, o);
  add_params(extremal, o, "Real q in (0, 1)");
  extremal->add_option("--n", o.n, "Number of coefficients");
  extremal->add_option("--method", o.method, "Construction")->check(CLI::IsMember({"recursion", "product", "formula"}));
  extremal->add_flag("--self-check", o.self_check, "Exit 1 unless all three constructions agree");

  auto* verify = app.add_subcommand("verify", "Sharpness and randomized verification report");
  add_shared(verify, o);
  add_params(verify, o, "Real q in (0, 1); repeatable");
  verify->add_option("--suite", o.suite, "Which checks to run")
      ->check(CLI::IsMember({"hankel", "toeplitz", "initial", "parseval", "all"}));
  verify->add_option("--grid", o.grid, "Search grid")->check(CLI::IsMember({"coarse", "default", "fine"}));
  verify->add_option("--samples", o.samples, "Random Schwarz samples per parameter set");
  verify->add_option("--depth", o.depth, "Schur parameters per random sample");

  auto* membership = app.add_subcommand("membership", "Grid margin of Re(z D f / f) - alpha");
  add_shared(membership, o);
  add_params(membership, o, "Real q in (0, 1)");
  membership->add_option("--input", o.input, "JSON array of coefficients a_1, a_2, ...");
  membership->add_option("--rmax", o.rmax, "Largest sampled radius");

  auto* ycmd = app.add_subcommand("y", "max |a + bz + cz^2| + 1 - |z|^2 over the closed disk");
  add_shared(ycmd, o);
  ycmd->add_option("--a", o.a, "re[,im]")->required();
  ycmd->add_option("--b", o.b, "re[,im]")->required();
  ycmd->add_option("--c", o.c, "re[,im]")->required();
  ycmd->add_option("--radial", o.radial, "Radial mesh steps");
  ycmd->add_option("--angular", o.angular, "Angular mesh steps");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qstar: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (bounds->parsed()) status = cmd_bounds(o, buffer);
    else if (extremal->parsed()) status = cmd_extremal(o, buffer, err);
    else if (verify->parsed()) status = cmd_verify(o, buffer);
    else if (membership->parsed()) status = cmd_membership(o, buffer);
    else status = cmd_y(o, buffer);
  } catch (const UsageError& e) {
    err << "qstar: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "qstar: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "qstar: cannot write '" << o.out_path << "'\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace qstar::cli
