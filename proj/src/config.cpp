#include "boltz/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace boltz {

namespace {

namespace pt = boost::property_tree;

std::string trim(std::string s) {
  auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), sp));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), sp).base(), s.end());
  return s;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    if constexpr (std::is_floating_point_v<T>)
      s += num(v[i]);
    else
      s += std::to_string(v[i]);
  }
  return s;
}

std::string vec3(const Vec3& v) { return num(v[0]) + ", " + num(v[1]) + ", " + num(v[2]); }

// Line numbers of "key = value" entries, found by a light scan of the text
// (the INI parser itself does not keep them).
std::map<std::string, int> key_lines(const std::string& text) {
  std::map<std::string, int> lines;
  std::istringstream in(text);
  std::string line, section;
  for (int no = 1; std::getline(in, line); ++no) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == ';' || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(t.substr(1, t.size() - 2));
      lines.emplace(section, no);
      continue;
    }
    const auto eq = t.find('=');
    if (eq != std::string::npos) lines.emplace(section + "." + trim(t.substr(0, eq)), no);
  }
  return lines;
}

class Reader {
 public:
  Reader(const pt::ptree* section, std::string name, std::map<std::string, int> lines, std::string source)
      : sec_(section), name_(std::move(name)), lines_(std::move(lines)), source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    std::string where = source_;
    auto it = lines_.find(name_ + "." + key);
    if (key.empty() || it == lines_.end()) it = lines_.find(name_);
    if (it != lines_.end()) where += ":" + std::to_string(it->second);
    throw ConfigError(where + ": [" + name_ + "]" + (key.empty() ? "" : " " + key) + ": " + msg);
  }

  void check_keys(const std::set<std::string>& allowed) const {
    if (!sec_) return;
    for (const auto& [k, v] : *sec_) {
      if (!allowed.count(k)) fail(k, "unknown key");
      if (!v.empty()) fail(k, "nested keys are not supported");
    }
  }

  std::optional<std::string> raw(const std::string& key) const {
    if (!sec_) return std::nullopt;
    const auto v = sec_->get_optional<std::string>(pt::ptree::path_type(key, '\0'));
    if (!v) return std::nullopt;
    return trim(*v);
  }

  double to_double(const std::string& key, const std::string& s) const {
    double x = 0.0;
    const char* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, x);
    if (ec != std::errc() || p != end || !std::isfinite(x)) fail(key, "expected a finite number, got '" + s + "'");
    return x;
  }

  int to_int(const std::string& key, const std::string& s) const {
    int x = 0;
    const char* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, x);
    if (ec != std::errc() || p != end) fail(key, "expected an integer, got '" + s + "'");
    return x;
  }

  void real(const std::string& key, double& out) const {
    if (auto v = raw(key)) out = to_double(key, *v);
  }
  void integer(const std::string& key, int& out) const {
    if (auto v = raw(key)) out = to_int(key, *v);
  }
  void boolean(const std::string& key, bool& out) const {
    if (auto v = raw(key)) {
      std::string s = *v;
      std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
      if (s == "true" || s == "yes" || s == "on" || s == "1")
        out = true;
      else if (s == "false" || s == "no" || s == "off" || s == "0")
        out = false;
      else
        fail(key, "expected true or false, got '" + *v + "'");
    }
  }

  std::vector<std::string> items(const std::string& key, const std::string& s) const {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
      item = trim(item);
      if (item.empty()) fail(key, "empty list entry");
      out.push_back(item);
    }
    if (out.empty()) fail(key, "empty list");
    return out;
  }

  void real_list(const std::string& key, std::vector<double>& out) const {
    if (auto v = raw(key)) {
      out.clear();
      for (const auto& s : items(key, *v)) out.push_back(to_double(key, s));
    }
  }
  void int_list(const std::string& key, std::vector<int>& out) const {
    if (auto v = raw(key)) {
      out.clear();
      for (const auto& s : items(key, *v)) out.push_back(to_int(key, s));
    }
  }
  void vector3(const std::string& key, Vec3& out) const {
    if (auto v = raw(key)) {
      const auto it = items(key, *v);
      if (it.size() != 3) fail(key, "expected three components");
      for (int d = 0; d < 3; ++d) out[d] = to_double(key, it[d]);
    }
  }
  void test_case(TestCase& out) const {
    if (auto v = raw("case")) {
      if (*v == "1")
        out = TestCase::Case1;
      else if (*v == "2")
        out = TestCase::Case2;
      else
        fail("case", "expected 1 or 2");
    }
  }
  void fix(const std::string& key, ConservationFix& out) const {
    if (auto v = raw(key)) {
      const auto f = parse_fix(*v);
      if (!f) fail(key, "expected none, zero or sinc");
      out = *f;
    }
  }
  void cutoff(CutoffPolicy& out) const {
    boolean("cutoff", out.enabled);
    real("epsilon", out.epsilon);
  }

 private:
  const pt::ptree* sec_;
  std::string name_;
  std::map<std::string, int> lines_;
  std::string source_;
};

const std::set<std::string> kCutoffKeys{"cutoff", "epsilon"};

std::set<std::string> with_cutoff(std::set<std::string> keys) {
  keys.insert(kCutoffKeys.begin(), kCutoffKeys.end());
  return keys;
}

template <class F>
void as_config_error(const Reader& r, const std::string& key, F&& f) {
  try {
    f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    r.fail(key, e.what());
  }
}

void read_accuracy(const Reader& r, AccuracyConfig& c) {
  r.check_keys(with_cutoff({"case", "R", "N", "M"}));
  r.test_case(c.test_case);
  r.real_list("R", c.R_list);
  r.int_list("N", c.N_list);
  r.integer("M", c.sphere_points);
  r.cutoff(c.cutoff);
  for (double R : c.R_list)
    if (!(R > 0.0)) r.fail("R", "must be positive");
  for (int N : c.N_list)
    if (N < 2) r.fail("N", "must be at least 2");
  if (c.sphere_points != 0) as_config_error(r, "M", [&] { (void)make_hemisphere_quadrature(c.sphere_points); });
  as_config_error(r, "epsilon", [&] { c.cutoff.validate(); });
}

void read_compare(const Reader& r, CompareConfig& c) {
  r.check_keys(with_cutoff({"case", "M", "t_end", "dt", "N", "R", "fix", "mass_fix"}));
  r.test_case(c.test_case);
  r.int_list("M", c.M_list);
  r.real("t_end", c.t_end);
  r.real("dt", c.dt);
  r.integer("N", c.N);
  r.real("R", c.R);
  r.fix("fix", c.fix);
  r.boolean("mass_fix", c.mass_fix);
  r.cutoff(c.cutoff);
  for (int M : c.M_list) as_config_error(r, "M", [&] { (void)make_hemisphere_quadrature(M); });
  HomogeneousRun run;
  run.dt = c.dt;
  run.t_end = c.t_end;
  run.N = c.N;
  run.R = c.R;
  run.cutoff = c.cutoff;
  as_config_error(r, "", [&] { run.validate(); });
}

void read_homogeneous(const Reader& r, HomogeneousConfig& c) {
  r.check_keys(with_cutoff({"case", "operator", "N", "R", "dt", "t_end", "M", "fix", "mass_fix", "snapshot_stride"}));
  HomogeneousRun& run = c.run;
  r.test_case(run.test_case);
  if (auto v = r.raw("operator")) {
    if (*v == "linearized")
      c.mode = HomogeneousMode::Linearized;
    else if (*v == "binary")
      c.mode = HomogeneousMode::Binary;
    else if (*v == "paired")
      c.mode = HomogeneousMode::Paired;
    else
      r.fail("operator", "expected linearized, binary or paired");
  }
  r.integer("N", run.N);
  r.real("R", run.R);
  r.real("dt", run.dt);
  r.real("t_end", run.t_end);
  r.integer("M", run.sphere_points);
  r.fix("fix", run.fix);
  r.boolean("mass_fix", run.mass_fix);
  r.integer("snapshot_stride", run.snapshot_stride);
  r.cutoff(run.cutoff);
  run.op = c.mode == HomogeneousMode::Binary ? OperatorKind::Binary : OperatorKind::Linearized;
  as_config_error(r, "M", [&] { (void)make_hemisphere_quadrature(run.sphere_points); });
  as_config_error(r, "", [&] {
    run.validate();
    (void)SpectralGrid::from_cutoff(run.N, run.R);
  });
}

void read_steady(const Reader& r, SteadyConfig& c) {
  r.check_keys(with_cutoff({"problem", "u_W", "theta_L", "theta_R", "u_L", "u_R", "Kn", "Nx", "x_L", "x_R", "C", "N",
                            "R", "M", "fix", "linear_mass_fix", "kernel", "outer_res", "inner_abs", "inner_rel",
                            "max_newton", "max_inner"}));
  if (auto v = r.raw("problem")) c.preset = *v;
  double u_W = 0.1, theta_L = 1.0, theta_R = 1.0, Kn = 1.0;
  r.real("u_W", u_W);
  r.real("theta_L", theta_L);
  r.real("theta_R", theta_R);
  r.real("Kn", Kn);
  SteadyProblem& p = c.problem;
  if (c.preset == "couette") {
    if (r.raw("u_L") || r.raw("u_R")) r.fail("u_L", "wall velocities come from u_W for the couette preset");
    p = SteadyProblem::couette(u_W, Kn);
    p.wall_L.theta = theta_L;
    p.wall_R.theta = theta_R;
  } else if (c.preset == "fourier") {
    if (r.raw("u_W") || r.raw("u_L") || r.raw("u_R")) r.fail("u_W", "the fourier preset has stationary walls");
    p = SteadyProblem::fourier(theta_L, theta_R, Kn);
  } else if (c.preset == "custom") {
    p = SteadyProblem{};
    p.Kn = Kn;
    p.wall_L.theta = theta_L;
    p.wall_R.theta = theta_R;
    r.vector3("u_L", p.wall_L.u);
    r.vector3("u_R", p.wall_R.u);
  } else {
    r.fail("problem", "expected couette, fourier or custom");
  }
  r.integer("Nx", p.Nx);
  r.real("x_L", p.x_L);
  r.real("x_R", p.x_R);
  r.real("C", p.total_mass);
  r.integer("N", p.N);
  r.real("R", p.R);
  r.integer("M", p.sphere_points);
  r.fix("fix", p.fix);
  r.boolean("linear_mass_fix", p.linear_mass_fix);
  if (auto v = r.raw("kernel")) {
    if (*v == "maxwell")
      p.kernel = CollisionKernel::maxwell();
    else if (*v == "vhs")
      p.kernel = CollisionKernel::vhs072();
    else
      r.fail("kernel", "expected maxwell or vhs");
  }
  r.real("outer_res", p.outer_res);
  r.real("inner_abs", p.inner_abs);
  r.real("inner_rel", p.inner_rel);
  r.integer("max_newton", p.max_newton);
  r.integer("max_inner", p.max_inner);
  r.cutoff(p.cutoff);
  auto positive = [&](const char* key, double v) {
    if (!(v > 0.0)) r.fail(key, "must be positive");
  };
  positive("Kn", p.Kn);
  positive("Nx", p.Nx);
  positive("theta_L", p.wall_L.theta);
  positive("theta_R", p.wall_R.theta);
  positive("C", p.total_mass);
  positive("R", p.R);
  positive("outer_res", p.outer_res);
  positive("inner_abs", p.inner_abs);
  positive("inner_rel", p.inner_rel);
  positive("max_inner", p.max_inner);
  if (p.max_newton < 0) r.fail("max_newton", "must be non-negative");
  if (!(p.x_L < p.x_R)) r.fail("x_R", "must exceed x_L");
  as_config_error(r, "M", [&] { (void)make_hemisphere_quadrature(p.sphere_points); });
  as_config_error(r, "N", [&] { (void)p.grid(); });
  as_config_error(r, "", [&] { p.validate(); });
}

void read_cancellation(const Reader& r, CancellationConfig& c) {
  r.check_keys(with_cutoff({"N", "L"}));
  r.integer("N", c.N);
  r.real("L", c.L);
  r.cutoff(c.cutoff);
  if (c.N < 1) r.fail("N", "must be positive");
  if (!(c.L > 0.0)) r.fail("L", "must be positive");
  as_config_error(r, "epsilon", [&] { c.cutoff.validate(); });
}

void apply(const Overrides& o, ExperimentConfig& c) {
  if (o.no_cutoff) {
    c.accuracy.cutoff.enabled = false;
    c.compare.cutoff.enabled = false;
    c.homogeneous.run.cutoff.enabled = false;
    c.steady.problem.cutoff.enabled = false;
    c.cancellation.cutoff.enabled = false;
  }
  if (o.fix) {
    c.compare.fix = *o.fix;
    c.homogeneous.run.fix = *o.fix;
    c.steady.problem.fix = *o.fix;
  }
}

std::string case_name(TestCase t) { return t == TestCase::Case1 ? "1" : "2"; }

std::string mode_name(HomogeneousMode m) {
  switch (m) {
    case HomogeneousMode::Linearized: return "linearized";
    case HomogeneousMode::Binary: return "binary";
    case HomogeneousMode::Paired: return "paired";
  }
  return "";
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "accuracy-table") return Command::AccuracyTable;
  if (name == "compare-operators") return Command::CompareOperators;
  if (name == "homogeneous") return Command::Homogeneous;
  if (name == "steady") return Command::Steady;
  if (name == "cancellation-demo") return Command::CancellationDemo;
  return std::nullopt;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::AccuracyTable: return "accuracy-table";
    case Command::CompareOperators: return "compare-operators";
    case Command::Homogeneous: return "homogeneous";
    case Command::Steady: return "steady";
    case Command::CancellationDemo: return "cancellation-demo";
  }
  return "";
}

std::string fix_name(ConservationFix fix) {
  switch (fix) {
    case ConservationFix::None: return "none";
    case ConservationFix::ZeroOut: return "zero";
    case ConservationFix::SincReplace: return "sinc";
  }
  return "";
}

std::optional<ConservationFix> parse_fix(std::string_view name) {
  if (name == "none") return ConservationFix::None;
  if (name == "zero") return ConservationFix::ZeroOut;
  if (name == "sinc") return ConservationFix::SincReplace;
  return std::nullopt;
}

ExperimentConfig parse_config(Command command, const std::string& text, const Overrides& overrides,
                              const std::string& source) {
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message());
  }
  const std::string name = command_name(command);
  const auto lines = key_lines(text);
  for (const auto& [sec, body] : tree) {
    if (sec != name) {
      const auto it = lines.find(sec);
      throw ConfigError(source + (it != lines.end() ? ":" + std::to_string(it->second) : "") + ": section [" + sec +
                        "] does not match command " + name);
    }
  }
  const auto found = tree.find(name);
  const pt::ptree* section = found == tree.not_found() ? nullptr : &found->second;
  const Reader r(section, name, lines, source);

  ExperimentConfig c;
  c.command = command;
  c.source = source;
  switch (command) {
    case Command::AccuracyTable: read_accuracy(r, c.accuracy); break;
    case Command::CompareOperators: read_compare(r, c.compare); break;
    case Command::Homogeneous: read_homogeneous(r, c.homogeneous); break;
    case Command::Steady: read_steady(r, c.steady); break;
    case Command::CancellationDemo: read_cancellation(r, c.cancellation); break;
  }
  apply(overrides, c);
  return c;
}

ExperimentConfig load_config(Command command, const std::string& path, const Overrides& overrides) {
  if (path.empty()) return parse_config(command, "", overrides, "<defaults>");
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(command, buf.str(), overrides, path);
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::resolved() const {
  std::vector<std::pair<std::string, std::string>> kv;
  auto cut = [&](const CutoffPolicy& p) {
    kv.emplace_back("cutoff", flag(p.enabled));
    kv.emplace_back("epsilon", num(p.epsilon));
  };
  switch (command) {
    case Command::AccuracyTable:
      kv.emplace_back("case", case_name(accuracy.test_case));
      kv.emplace_back("R", join(accuracy.R_list));
      kv.emplace_back("N", join(accuracy.N_list));
      kv.emplace_back("M", accuracy.sphere_points == 0 ? "auto" : std::to_string(accuracy.sphere_points));
      cut(accuracy.cutoff);
      break;
    case Command::CompareOperators:
      kv.emplace_back("case", case_name(compare.test_case));
      kv.emplace_back("M", join(compare.M_list));
      kv.emplace_back("t_end", num(compare.t_end));
      kv.emplace_back("dt", num(compare.dt));
      kv.emplace_back("N", std::to_string(compare.N));
      kv.emplace_back("R", num(compare.R));
      kv.emplace_back("fix", fix_name(compare.fix));
      kv.emplace_back("mass_fix", flag(compare.mass_fix));
      cut(compare.cutoff);
      break;
    case Command::Homogeneous: {
      const HomogeneousRun& h = homogeneous.run;
      kv.emplace_back("case", case_name(h.test_case));
      kv.emplace_back("operator", mode_name(homogeneous.mode));
      kv.emplace_back("N", std::to_string(h.N));
      kv.emplace_back("R", num(h.R));
      kv.emplace_back("dt", num(h.dt));
      kv.emplace_back("t_end", num(h.t_end));
      kv.emplace_back("M", std::to_string(h.sphere_points));
      kv.emplace_back("fix", fix_name(h.fix));
      kv.emplace_back("mass_fix", flag(h.mass_fix));
      kv.emplace_back("snapshot_stride", std::to_string(h.snapshot_stride));
      cut(h.cutoff);
      break;
    }
    case Command::Steady: {
      const SteadyProblem& p = steady.problem;
      kv.emplace_back("problem", steady.preset);
      kv.emplace_back("u_L", vec3(p.wall_L.u));
      kv.emplace_back("u_R", vec3(p.wall_R.u));
      kv.emplace_back("theta_L", num(p.wall_L.theta));
      kv.emplace_back("theta_R", num(p.wall_R.theta));
      kv.emplace_back("Kn", num(p.Kn));
      kv.emplace_back("Nx", std::to_string(p.Nx));
      kv.emplace_back("x_L", num(p.x_L));
      kv.emplace_back("x_R", num(p.x_R));
      kv.emplace_back("C", num(p.total_mass));
      kv.emplace_back("N", std::to_string(p.N));
      kv.emplace_back("R", num(p.R));
      kv.emplace_back("M", std::to_string(p.sphere_points));
      kv.emplace_back("fix", fix_name(p.fix));
      kv.emplace_back("linear_mass_fix", flag(p.linear_mass_fix));
      kv.emplace_back("kernel", p.kernel.omega == 1.0 ? "maxwell" : "vhs");
      kv.emplace_back("outer_res", num(p.outer_res));
      kv.emplace_back("inner_abs", num(p.inner_abs));
      kv.emplace_back("inner_rel", num(p.inner_rel));
      kv.emplace_back("max_newton", std::to_string(p.max_newton));
      kv.emplace_back("max_inner", std::to_string(p.max_inner));
      cut(p.cutoff);
      break;
    }
    case Command::CancellationDemo:
      kv.emplace_back("N", std::to_string(cancellation.N));
      kv.emplace_back("L", num(cancellation.L));
      cut(cancellation.cutoff);
      break;
  }
  return kv;
}

}  // namespace boltz
