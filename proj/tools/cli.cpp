#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hororadon/groupcase.hpp"
#include "hororadon/spectral.hpp"
#include "hororadon/verify.hpp"

namespace hororadon::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string family;
  std::string grid;
  std::string lambdas;
  std::string out;
  std::string suite;
  double tol = 0.0;
  double window = 0.0;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::pair<int, int> parse_grid(const std::string& s, std::pair<int, int> fallback) {
  if (s.empty()) return fallback;
  const auto x = s.find('x');
  try {
    std::size_t p1 = 0, p2 = 0;
    if (x == std::string::npos) throw UsageError("");
    const std::string a = s.substr(0, x), b = s.substr(x + 1);
    const int na = std::stoi(a, &p1), nb = std::stoi(b, &p2);
    if (p1 != a.size() || p2 != b.size() || na < 1 || nb < 2) throw UsageError("");
    return {na, nb};
  } catch (const std::exception&) {
    throw UsageError("invalid --grid '" + s + "', expected AxB with A >= 1, B >= 2");
  }
}

// "2", "0.8i", "-i", "1+0.5i", "1.5-2i"
cplx parse_complex(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  auto real_part = [&](const std::string& t) {
    std::size_t p = 0;
    const double v = std::stod(t, &p);
    if (p != t.size()) throw UsageError("");
    return v;
  };
  try {
    if (s.empty()) throw UsageError("");
    if (s.back() != 'i') return real_part(s);
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    const std::string re = split == std::string::npos ? "" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : real_part(re), real_part(im)};
  } catch (const std::exception&) {
    throw UsageError("invalid lambda '" + s + "'");
  }
}

std::vector<cplx> parse_lambdas(const std::string& list) {
  std::vector<cplx> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_complex(item));
  if (out.empty()) throw UsageError("empty --lambda list");
  return out;
}

QuadratureSpec quad_spec(const RunConfig& c) {
  QuadratureSpec q;
  if (c.tol > 0) q.rel_tol = c.tol;
  q.validate();
  return q;
}

FunctionOnY family(const RunConfig& c) {
  if (c.family.empty()) throw UsageError("missing --f");
  return parse_family(c.family);
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output path '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

int cmd_transform(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const FunctionOnY f = family(c);
  const auto [na, ns] = parse_grid(c.grid, {16, 41});
  const double w = c.window > 0 ? c.window : 4.0;
  const TransformGrid t = radon_grid(f, GridSpec::xi(na, ns, -w, w), quad_spec(c));
  if (t.flagged_count() > 0) {
    err << "transform: " << t.flagged_count() << " horocycle integrals failed\n";
    return kQuadrature;
  }
  Output o(c.out, out);
  t.write_csv(*o);
  return kOk;
}

const std::vector<std::pair<std::string, GroupElement>>& spectrum_points() {
  static const std::vector<std::pair<std::string, GroupElement>> g{
      {"e", identity()}, {"a0.5", cartan(0.5)}, {"r0.3", rotation(0.3)}};
  return g;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (c.lambdas.empty()) throw UsageError("missing --lambda");
  const std::vector<cplx> lambdas = parse_lambdas(c.lambdas);
  const FunctionOnY f = family(c);
  const QuadratureSpec q = quad_spec(c);
  SpectralWindow win;
  if (c.window > 0) win = SpectralWindow{-c.window, 3.0 * c.window, 0.05};
  std::vector<IdentityRow> rows;
  for (cplx lambda : lambdas)
    for (const auto& [gid, g] : spectrum_points())
      for (auto eta : {OrbitFunctional{1.0, 0.0}, OrbitFunctional{0.0, 1.0}})
        rows.push_back({lambda, gid, eta, fourier_radon_identity(f, lambda, eta, g, q, win)});
  Output o(c.out, out);
  write_identity_csv(*o, rows);
  return kOk;
}

int cmd_dual(const RunConfig& c, std::ostream& out, std::ostream&) {
  const FunctionOnY f = family(c);
  const auto [na, ns] = parse_grid(c.grid, {8, 9});
  const double w = c.window > 0 ? c.window : 2.0;
  const QuadratureSpec q = quad_spec(c);
  const MultiplierGrids mg;
  const TransformGrid rf = radon_grid(f, mg.xi, q);
  if (rf.flagged_count() > 0) throw AccuracyError("dual: radon grid has failed points", QuadResult{});
  const XiFunction F = rf.interpolator();
  const GridSpec y{Axis{0.0, 2.0 * M_PI, na, true}, Axis{-w, w, ns, false}};
  const QuadratureSpec dq = q.with_radius(std::max(q.truncation_radius, 2.0 * mg.xi.s.upper));
  Output o(c.out, out);
  *o << "phi,s,re,im,err\n";
  for (int is = 0; is < y.s.points; ++is)
    for (int ia = 0; ia < y.angle.points; ++ia) {
      const PointY p = PointY::from_chart(y.angle.node(ia), y.s.node(is));
      const QuadResult r = dual_radon(F, section(p), dq);
      *o << num(y.angle.node(ia)) << ',' << num(y.s.node(is)) << ',' << num(r.value.real()) << ','
         << num(r.value.imag()) << ',' << num(r.error) << '\n';
    }
  return kOk;
}

int cmd_multiplier(const RunConfig& c, std::ostream& out, std::ostream&) {
  const FunctionOnY f = family(c);
  MultiplierGrids mg;
  if (!c.grid.empty()) {
    const auto [na, ns] = parse_grid(c.grid, {16, 81});
    mg.y = GridSpec{Axis{0.0, 2.0 * M_PI, na, true}, Axis{-4.0, 4.0, ns, false}};
  }
  const auto entries = inversion_multiplier_probe(f, mg, quad_spec(c));
  Output o(c.out, out);
  *o << "mode,omega,re,im,defined\n";
  for (const auto& e : entries)
    *o << e.mode << ',' << num(e.omega) << ',' << num(e.ratio.real()) << ',' << num(e.ratio.imag()) << ','
       << (e.defined ? 1 : 0) << '\n';
  return kOk;
}

int cmd_group_radon(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (c.family.empty()) throw UsageError("missing --f");
  const GroupFunction f = parse_group_family(c.family);
  const QuadratureSpec q = quad_spec(c);
  const std::vector<std::pair<std::string, GroupElement>> gs{
      {"e", identity()}, {"a0.4", cartan(0.4)}, {"r0.7n0.3", rotation(0.7) * unipotent(0.3)}};
  const std::vector<std::pair<std::string, GroupElement>> hs{
      {"e", identity()}, {"r0.5", rotation(0.5)}, {"a-0.3m0.2", cartan(-0.3) * opposite_unipotent(0.2)}};
  Output o(c.out, out);
  *o << "g,h,re,im,err,mass\n";
  for (const auto& [gid, g] : gs)
    for (const auto& [hid, h] : hs) {
      const GroupRadonValue r = group_radon(f, {g, h}, q);
      *o << gid << ',' << hid << ',' << num(r.value.real()) << ',' << num(r.value.imag()) << ',' << num(r.error)
         << ',' << num(r.mass) << '\n';
    }
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.suite.empty()) throw UsageError("verify needs a suite name");
  std::vector<std::string> suites;
  if (c.suite == "all") {
    suites = suite_names();
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), c.suite) == names.end())
      throw UsageError("unknown suite '" + c.suite + "'");
    suites.push_back(c.suite);
  }
  SuiteConfig cfg;
  cfg.seed = c.seed;
  cfg.quad = quad_spec(c);
  Output o(c.out, out);
  bool pass = true;
  for (const auto& s : suites) {
    const VerificationReport r = run_suite(s, cfg);
    r.write(*o);
    if (!r.overall) err << "verify: suite " << s << " failed\n";
    pass = pass && r.overall;
  }
  return pass ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Horospherical Radon transform on SL(2,R)/SO(1,1)", "hororadon"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file; command-line flags take precedence");
  RunConfig c;
  app.add_option("--f", c.family, "function family, e.g. ds:3, bump:cx,cy,cz,w, mode:m,w, grpds:k");
  app.add_option("--grid", c.grid, "grid size AxB (angle x s)");
  app.add_option("--lambda", c.lambdas, "comma-separated spectral parameters, e.g. 2,0.8i,1+0.5i");
  app.add_option("--tol", c.tol, "relative quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", c.out, "output path (default: standard output)");
  app.add_option("--seed", c.seed, "seed for sampling batteries");
  app.add_option("--window", c.window, "s-range half width for grids; spectral window [-r, 3r]")
      ->check(CLI::PositiveNumber);
  const std::pair<const char*, const char*> commands[] = {
      {"transform", "horocycle transform on an angle x s grid (CSV)"},
      {"spectrum", "Y-transform against the A-transform of the horocycle transform (CSV)"},
      {"dual", "dual transform of the interpolated horocycle transform (CSV)"},
      {"multiplier", "per-mode ratio of dual-of-transform to input along A (CSV)"},
      {"group-radon", "double unipotent integrals of a group function on a 3x3 battery (CSV)"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();
  auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')")->fallthrough();
  verify->add_option("suite", c.suite)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    if (c.command == "transform") return cmd_transform(c, out, err);
    if (c.command == "spectrum") return cmd_spectrum(c, out, err);
    if (c.command == "dual") return cmd_dual(c, out, err);
    if (c.command == "multiplier") return cmd_multiplier(c, out, err);
    if (c.command == "group-radon") return cmd_group_radon(c, out, err);
    return cmd_verify(c, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedFamily& e) {
    err << "unsupported family: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kQuadrature;
  }
}

}  // namespace hororadon::cli
