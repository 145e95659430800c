#include "whvi/instance.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace whvi {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError((path.empty() ? std::string("instance") : path) + ": " + msg);
}

void allow_only(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(path, "expected an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) fail(path.empty() ? k : path + "." + k, "unknown field");
  }
}

double get_double(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::uint64_t get_seed(const json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0)) {
    fail(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Vector get_vector(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = get_double(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

std::vector<double> get_doubles(const json& j, const std::string& path) {
  const Vector v = get_vector(j, path);
  return std::vector<double>(v.data(), v.data() + v.size());
}

Matrix get_matrix(const json& j, const std::string& path, int cols) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  Matrix M(static_cast<Eigen::Index>(j.size()), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    const Vector row = get_vector(j[r], rp);
    if (row.size() != cols) fail(rp, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    M.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return M;
}

std::vector<MonomialList> get_monomials(const json& j, const std::string& path, int n) {
  if (!j.is_array()) fail(path, "expected one list of monomials per component");
  if (static_cast<int>(j.size()) != n) fail(path, "expected " + std::to_string(n) + " components");
  std::vector<MonomialList> out(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string cp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(cp, "expected a list of monomials");
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      const std::string mp = cp + "[" + std::to_string(k) + "]";
      const json& t = j[i][k];
      allow_only(t, mp, {"coeff", "exps"});
      if (!t.contains("coeff") || !t.contains("exps")) fail(mp, "monomial needs coeff and exps");
      Monomial mono;
      mono.coefficient = get_double(t["coeff"], mp + ".coeff");
      if (!t["exps"].is_array()) fail(mp + ".exps", "expected an array of integers");
      for (std::size_t e = 0; e < t["exps"].size(); ++e) {
        mono.exponents.push_back(get_int(t["exps"][e], mp + ".exps[" + std::to_string(e) + "]"));
      }
      if (static_cast<int>(mono.exponents.size()) != n) fail(mp + ".exps", "expected " + std::to_string(n) + " exponents");
      out[i].push_back(std::move(mono));
    }
  }
  return out;
}

std::vector<RadicalList> get_radicals(const json& j, const std::string& path, int n) {
  if (!j.is_array()) fail(path, "expected one list of radical terms per component");
  if (static_cast<int>(j.size()) != n) fail(path, "expected " + std::to_string(n) + " components");
  std::vector<RadicalList> out(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string cp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(cp, "expected a list of radical terms");
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      const std::string tp = cp + "[" + std::to_string(k) + "]";
      const json& t = j[i][k];
      allow_only(t, tp, {"coeff", "root", "a", "b"});
      for (const char* key : {"coeff", "root", "a", "b"}) {
        if (!t.contains(key)) fail(tp, std::string("missing field ") + key);
      }
      RadicalTerm r;
      r.coefficient = get_double(t["coeff"], tp + ".coeff");
      r.root_index = get_int(t["root"], tp + ".root");
      r.a = get_vector(t["a"], tp + ".a");
      if (r.a.size() != n) fail(tp + ".a", "expected " + std::to_string(n) + " entries");
      r.b = get_double(t["b"], tp + ".b");
      out[i].push_back(std::move(r));
    }
  }
  return out;
}

void read_checker(const json& j, CheckerConfig& c, const std::string& path) {
  allow_only(j, path,
             {"ray_radii", "direction_count", "tol", "align_tol", "seed", "sample_count",
              "sample_radius", "descent_starts", "descent_max_iter", "shifted_rays",
              "growth_exponent", "oracle_pitch", "oracle_radius"});
  const auto p = [&](const char* k) { return path + "." + k; };
  if (j.contains("ray_radii")) c.ray_radii = get_doubles(j["ray_radii"], p("ray_radii"));
  if (j.contains("direction_count")) c.direction_count = get_int(j["direction_count"], p("direction_count"));
  if (j.contains("tol")) c.tol = get_double(j["tol"], p("tol"));
  if (j.contains("align_tol")) c.align_tol = get_double(j["align_tol"], p("align_tol"));
  if (j.contains("seed")) c.seed = get_seed(j["seed"], p("seed"));
  if (j.contains("sample_count")) c.sample_count = get_int(j["sample_count"], p("sample_count"));
  if (j.contains("sample_radius")) c.sample_radius = get_double(j["sample_radius"], p("sample_radius"));
  if (j.contains("descent_starts")) c.descent_starts = get_int(j["descent_starts"], p("descent_starts"));
  if (j.contains("descent_max_iter")) c.descent_max_iter = get_int(j["descent_max_iter"], p("descent_max_iter"));
  if (j.contains("shifted_rays")) c.shifted_rays = get_int(j["shifted_rays"], p("shifted_rays"));
  if (j.contains("growth_exponent")) c.growth_exponent = get_double(j["growth_exponent"], p("growth_exponent"));
  if (j.contains("oracle_pitch")) c.oracle_pitch = get_double(j["oracle_pitch"], p("oracle_pitch"));
  if (j.contains("oracle_radius")) c.oracle_radius = get_double(j["oracle_radius"], p("oracle_radius"));
  try {
    validate(c);
  } catch (const PreconditionError& e) {
    fail(path, e.what());
  }
}

void read_solver(const json& j, SolveConfig& c, const std::string& path) {
  allow_only(j, path,
             {"t_schedule", "newton_max_iter", "armijo_slope", "armijo_backtrack", "residual_tol",
              "divergence_norm", "multistart_count", "seed", "sample_radius", "dedup_tol",
              "validate_tol", "path_jump_bound", "max_consecutive_failures", "max_bisections",
              "extragradient_max_iter", "fd_step", "act_tol"});
  const auto p = [&](const char* k) { return path + "." + k; };
  if (j.contains("t_schedule")) c.t_schedule = get_doubles(j["t_schedule"], p("t_schedule"));
  if (j.contains("newton_max_iter")) c.newton_max_iter = get_int(j["newton_max_iter"], p("newton_max_iter"));
  if (j.contains("armijo_slope")) c.armijo_slope = get_double(j["armijo_slope"], p("armijo_slope"));
  if (j.contains("armijo_backtrack")) c.armijo_backtrack = get_double(j["armijo_backtrack"], p("armijo_backtrack"));
  if (j.contains("residual_tol")) c.residual_tol = get_double(j["residual_tol"], p("residual_tol"));
  if (j.contains("divergence_norm")) c.divergence_norm = get_double(j["divergence_norm"], p("divergence_norm"));
  if (j.contains("multistart_count")) c.multistart_count = get_int(j["multistart_count"], p("multistart_count"));
  if (j.contains("seed")) c.seed = get_seed(j["seed"], p("seed"));
  if (j.contains("sample_radius")) c.sample_radius = get_double(j["sample_radius"], p("sample_radius"));
  if (j.contains("dedup_tol")) c.dedup_tol = get_double(j["dedup_tol"], p("dedup_tol"));
  if (j.contains("validate_tol")) c.validate_tol = get_double(j["validate_tol"], p("validate_tol"));
  if (j.contains("path_jump_bound")) c.path_jump_bound = get_double(j["path_jump_bound"], p("path_jump_bound"));
  if (j.contains("max_consecutive_failures")) c.max_consecutive_failures = get_int(j["max_consecutive_failures"], p("max_consecutive_failures"));
  if (j.contains("max_bisections")) c.max_bisections = get_int(j["max_bisections"], p("max_bisections"));
  if (j.contains("extragradient_max_iter")) c.extragradient_max_iter = get_int(j["extragradient_max_iter"], p("extragradient_max_iter"));
  if (j.contains("fd_step")) c.residual.fd_step = get_double(j["fd_step"], p("fd_step"));
  if (j.contains("act_tol")) c.residual.act_tol = get_double(j["act_tol"], p("act_tol"));
  const auto& s = c.t_schedule;
  if (s.size() < 2 || s.front() != 1.0 || s.back() != 0.0) fail(p("t_schedule"), "must run from exactly 1 to exactly 0");
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!(s[k] < s[k - 1])) fail(p("t_schedule"), "must be strictly decreasing");
  }
  if (!(c.residual_tol > 0.0) || !(c.validate_tol > 0.0) || !(c.dedup_tol > 0.0) ||
      !(c.divergence_norm > 0.0) || !(c.sample_radius > 0.0) || !(c.residual.fd_step > 0.0) ||
      !(c.residual.act_tol > 0.0) || !(c.armijo_slope > 0.0 && c.armijo_slope < 1.0) ||
      !(c.armijo_backtrack > 0.0 && c.armijo_backtrack < 1.0)) {
    fail(path, "tolerances must be positive and line-search factors in (0, 1)");
  }
  if (c.newton_max_iter <= 0 || c.multistart_count <= 0 || c.max_consecutive_failures <= 0 ||
      c.max_bisections < 0 || c.extragradient_max_iter <= 0) {
    fail(path, "iteration counts must be positive");
  }
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json matrix_json(const Matrix& M) {
  json a = json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) a.push_back(vector_json(M.row(r).transpose()));
  return a;
}

json monomials_json(const std::vector<MonomialList>& comps) {
  json a = json::array();
  for (const auto& comp : comps) {
    json c = json::array();
    for (const auto& m : comp) c.push_back({{"coeff", m.coefficient}, {"exps", m.exponents}});
    a.push_back(c);
  }
  return a;
}

json radicals_json(const std::vector<RadicalList>& comps) {
  json a = json::array();
  for (const auto& comp : comps) {
    json c = json::array();
    for (const auto& r : comp) {
      c.push_back({{"coeff", r.coefficient}, {"root", r.root_index}, {"a", vector_json(r.a)}, {"b", r.b}});
    }
    a.push_back(c);
  }
  return a;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  allow_only(j, "", {"name", "n", "gamma", "set", "map", "xref", "config"});
  for (const char* key : {"name", "n", "map"}) {
    if (!j.contains(key)) fail("", std::string("missing field ") + key);
  }
  if (!j["name"].is_string()) fail("name", "expected a string");
  const int n = get_int(j["n"], "n");
  if (n < 1) fail("n", "dimension must be positive");
  std::optional<int> gamma;
  if (j.contains("gamma")) gamma = get_int(j["gamma"], "gamma");

  Matrix A(0, n), E(0, n);
  Vector b(0), d(0);
  if (j.contains("set")) {
    const json& s = j["set"];
    allow_only(s, "set", {"A", "b", "E", "d"});
    if (s.contains("A")) A = get_matrix(s["A"], "set.A", n);
    if (s.contains("b")) b = get_vector(s["b"], "set.b");
    if (s.contains("E")) E = get_matrix(s["E"], "set.E", n);
    if (s.contains("d")) d = get_vector(s["d"], "set.d");
    if (b.size() != A.rows()) fail("set.b", "expected " + std::to_string(A.rows()) + " entries");
    if (d.size() != E.rows()) fail("set.d", "expected " + std::to_string(E.rows()) + " entries");
  }

  const json& mj = j["map"];
  allow_only(mj, "map", {"leading", "remainder_poly", "remainder_radical"});
  if (!mj.contains("leading")) fail("map", "missing field leading");
  auto leading = get_monomials(mj["leading"], "map.leading", n);
  std::vector<MonomialList> rem;
  std::vector<RadicalList> rad;
  if (mj.contains("remainder_poly")) rem = get_monomials(mj["remainder_poly"], "map.remainder_poly", n);
  if (mj.contains("remainder_radical")) rad = get_radicals(mj["remainder_radical"], "map.remainder_radical", n);

  std::optional<WeaklyHomogeneousMap> map;
  try {
    map.emplace(n, gamma, std::move(leading), std::move(rem), std::move(rad));
  } catch (const ConstructionError& e) {
    fail("map", e.what());
  }
  std::optional<Polyhedron> set;
  try {
    set.emplace(std::move(A), std::move(b), std::move(E), std::move(d));
  } catch (const InfeasibleError& e) {
    fail("set", std::string("empty polyhedron: ") + e.what());
  } catch (const Error& e) {
    fail("set", e.what());
  }

  Instance inst{j["name"].get<std::string>(), std::move(*map), std::move(*set), std::nullopt, {}, {}};
  if (j.contains("xref")) {
    inst.xref = get_vector(j["xref"], "xref");
    if (inst.xref->size() != n) fail("xref", "expected " + std::to_string(n) + " entries");
    if (!inst.set.contains(*inst.xref, 1e-8)) fail("xref", "point is not in the set");
  }
  if (j.contains("config")) {
    const json& c = j["config"];
    allow_only(c, "config", {"checker", "solver"});
    if (c.contains("checker")) read_checker(c["checker"], inst.checker, "config.checker");
    if (c.contains("solver")) read_solver(c["solver"], inst.solver, "config.solver");
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  const auto& m = inst.map;
  const auto& K = inst.set;
  json j;
  j["name"] = inst.name;
  j["n"] = m.dimension();
  j["gamma"] = m.degree();
  j["set"] = {{"A", matrix_json(K.A())}, {"b", vector_json(K.b())},
              {"E", matrix_json(K.E())}, {"d", vector_json(K.d())}};
  j["map"] = {{"leading", monomials_json(m.leading())},
              {"remainder_poly", monomials_json(m.remainder_poly())},
              {"remainder_radical", radicals_json(m.remainder_radical())}};
  if (inst.xref) j["xref"] = vector_json(*inst.xref);
  const auto& c = inst.checker;
  const auto& s = inst.solver;
  j["config"]["checker"] = {
      {"ray_radii", c.ray_radii},         {"direction_count", c.direction_count},
      {"tol", c.tol},                     {"align_tol", c.align_tol},
      {"seed", c.seed},                   {"sample_count", c.sample_count},
      {"sample_radius", c.sample_radius}, {"descent_starts", c.descent_starts},
      {"descent_max_iter", c.descent_max_iter}, {"shifted_rays", c.shifted_rays},
      {"growth_exponent", c.growth_exponent},   {"oracle_pitch", c.oracle_pitch},
      {"oracle_radius", c.oracle_radius}};
  j["config"]["solver"] = {
      {"t_schedule", s.t_schedule},
      {"newton_max_iter", s.newton_max_iter},
      {"armijo_slope", s.armijo_slope},
      {"armijo_backtrack", s.armijo_backtrack},
      {"residual_tol", s.residual_tol},
      {"divergence_norm", s.divergence_norm},
      {"multistart_count", s.multistart_count},
      {"seed", s.seed},
      {"sample_radius", s.sample_radius},
      {"dedup_tol", s.dedup_tol},
      {"validate_tol", s.validate_tol},
      {"path_jump_bound", s.path_jump_bound},
      {"max_consecutive_failures", s.max_consecutive_failures},
      {"max_bisections", s.max_bisections},
      {"extragradient_max_iter", s.extragradient_max_iter},
      {"fd_step", s.residual.fd_step},
      {"act_tol", s.residual.act_tol}};
  return j.dump(2) + "\n";
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << serialize_instance(inst);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace whvi
