#include "symmcomb/cli.hpp"

#include "symmcomb/errors.hpp"
#include "symmcomb/prv.hpp"
#include "symmcomb/report.hpp"
#include "symmcomb/smt.hpp"
#include "symmcomb/suite.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace symmcomb {

namespace fs = std::filesystem;

// ------------------------------------------------------------ parsing

namespace {

std::string trim(const std::string& s)
{
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Json parse_json_value(const std::string& key, const std::string& text)
{
  try {
    return Json::parse(text);
  } catch (const std::exception&) {
    throw InvalidInput("config: value of '" + key + "' is not valid (expected JSON, e.g. \"B3\", [1,3], 2): " +
                       text);
  }
}

std::vector<int> int_list(const Json& j, const std::string& key)
{
  if (j.is_number_integer()) return {j.get<int>()};
  if (!j.is_array()) throw InvalidInput("'" + key + "' must be a list of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("'" + key + "' must be a list of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

// "1,3", "[1,3]" or "" (empty list).
std::vector<int> int_list_text(const std::string& key, const std::string& text)
{
  std::string t = trim(text);
  if (t.empty() || t == "[]" || t == "none") return {};
  if (t.front() != '[') t = "[" + t + "]";
  return int_list(parse_json_value(key, t), key);
}

std::vector<std::pair<int, int>> arrow_list(const Json& j)
{
  std::vector<std::pair<int, int>> out;
  if (!j.is_array()) throw InvalidInput("'arrows' must be a list of pairs, e.g. [[1,2]]");
  for (const auto& p : j) {
    auto v = int_list(p, "arrows");
    if (v.size() != 2) throw InvalidInput("'arrows' entries must be pairs [i,j]");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

IntMatrix matrix_value(const Json& j)
{
  if (!j.is_array()) throw InvalidInput("'matrix' must be a list of rows");
  IntMatrix m;
  for (const auto& row : j) m.push_back(int_list(row, "matrix"));
  return m;
}

// Weight text as given in the config: a JSON array, number, or "1,0" string.
std::string weight_text(const Json& j)
{
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return j.dump();
  if (j.is_array()) {
    std::string out;
    for (const auto& x : j) out += (out.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
    return out;
  }
  throw InvalidInput("weights must be numbers, lists or strings");
}

std::string str_value(const Json& j, const std::string& key)
{
  if (!j.is_string()) throw InvalidInput("'" + key + "' must be a string");
  return j.get<std::string>();
}

int int_value(const Json& j, const std::string& key)
{
  if (!j.is_number_integer()) throw InvalidInput("'" + key + "' must be an integer");
  return j.get<int>();
}

bool bool_value(const Json& j, const std::string& key)
{
  if (!j.is_boolean()) throw InvalidInput("'" + key + "' must be true or false");
  return j.get<bool>();
}

}  // namespace

JobConfig parse_config_text(const std::string& text)
{
  JobConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("config line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    Json v = parse_json_value(key, trim(line.substr(eq + 1)));
    if (key == "preset") c.preset = str_value(v, key);
    else if (key == "cartan") c.cartan = str_value(v, key);
    else if (key == "matrix") c.matrix = matrix_value(v);
    else if (key == "black") c.black = int_list(v, key);
    else if (key == "arrows") c.arrows = arrow_list(v);
    else if (key == "coords") c.coords = str_value(v, key);
    else if (key == "lambda") c.lambda = weight_text(v);
    else if (key == "mu") c.mu = weight_text(v);
    else if (key == "nu") c.nu = weight_text(v);
    else if (key == "I") c.orbit = int_list(v, key);
    else if (key == "tau") c.tau = weight_text(v);
    else if (key == "eps") c.eps = weight_text(v);
    else if (key == "bound") c.bound = int_value(v, key);
    else if (key == "verify_bound") c.verify_bound = int_value(v, key);
    else if (key == "jobs") c.jobs = int_value(v, key);
    else if (key == "format") c.format = str_value(v, key);
    else if (key == "output") c.output = str_value(v, key);
    else if (key == "sweep") c.sweep = bool_value(v, key);
    else if (key == "crystal") c.crystal = bool_value(v, key);
    else if (key == "count") c.count_only = bool_value(v, key);
    else throw InvalidInput("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return c;
}

JobConfig merge_configs(const JobConfig& flags, const JobConfig& file)
{
  JobConfig m = flags;
  auto take = [](auto& dst, const auto& src) {
    if (!dst && src) dst = src;
  };
  bool flag_diagram = flags.preset || flags.cartan || flags.matrix || flags.black || flags.arrows;
  if (!flag_diagram) {
    m.preset = file.preset;
    m.cartan = file.cartan;
    m.matrix = file.matrix;
    m.black = file.black;
    m.arrows = file.arrows;
  }
  take(m.coords, file.coords);
  take(m.lambda, file.lambda);
  take(m.mu, file.mu);
  take(m.nu, file.nu);
  take(m.orbit, file.orbit);
  take(m.tau, file.tau);
  take(m.eps, file.eps);
  take(m.bound, file.bound);
  take(m.verify_bound, file.verify_bound);
  take(m.jobs, file.jobs);
  take(m.format, file.format);
  take(m.output, file.output);
  take(m.sweep, file.sweep);
  take(m.crystal, file.crystal);
  take(m.count_only, file.count_only);
  return m;
}

SatakeDiagram resolve_diagram(const JobConfig& c)
{
  bool inline_data = c.cartan || c.matrix;
  if (c.preset && (inline_data || c.black || c.arrows))
    throw InvalidInput("give either a preset or an inline diagram (cartan/matrix, black, arrows), not both");
  if (c.preset) return preset(*c.preset);
  if (!inline_data) {
    std::string known;
    for (const auto& p : preset_names()) known += (known.empty() ? "" : ", ") + p;
    throw InvalidInput("no diagram given: use --preset (" + known + ") or --cartan/--matrix");
  }
  if (c.cartan && c.matrix) throw InvalidInput("give either 'cartan' or 'matrix', not both");
  SatakeDiagram d{c.cartan ? CartanDatum::from_type(*c.cartan) : CartanDatum::from_matrix(*c.matrix), {}, {},
                  c.cartan ? *c.cartan : "custom"};
  const int n = d.datum.rank();
  for (int b : c.black.value_or(std::vector<int>{})) {
    if (b < 1 || b > n) throw InvalidInput("black node " + std::to_string(b) + " is not in 1.." + std::to_string(n));
    d.black.push_back(b - 1);
  }
  std::sort(d.black.begin(), d.black.end());
  for (auto [i, j] : c.arrows.value_or(std::vector<std::pair<int, int>>{})) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw InvalidInput("arrow [" + std::to_string(i) + "," + std::to_string(j) + "] is not in 1.." +
                         std::to_string(n));
    d.arrows.emplace_back(std::min(i, j) - 1, std::max(i, j) - 1);
  }
  std::sort(d.arrows.begin(), d.arrows.end());
  return d;
}

// -------------------------------------------------------------- cache

namespace {

std::string cache_key(const IntMatrix& m)
{
  std::uint64_t h = 1469598103934665603ULL;
  std::string text = Json(m).dump();
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

RootSystem cached_root_system(const CartanDatum& datum)
{
  const char* dir = std::getenv("SYMMCOMB_CACHE");
  if (!dir || !*dir) return RootSystem(datum);
  fs::path file = fs::path(dir) / ("roots-" + cache_key(datum.cartan) + ".json");
  std::error_code ec;
  if (fs::exists(file, ec)) {
    try {
      std::ifstream in(file);
      Json j = Json::parse(in);
      if (j.at("cartan").get<IntMatrix>() == datum.cartan)
        return RootSystem(datum, j.at("roots").get<std::vector<std::vector<int>>>());
    } catch (const std::exception&) {
      // Unreadable or stale entry: rebuild and overwrite below.
    }
  }
  RootSystem rs(datum);
  std::vector<std::vector<int>> roots;
  for (const auto& r : rs.roots()) roots.push_back(r.simple);
  fs::create_directories(dir, ec);
  fs::path tmp = file;
  tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&rs));
  {
    std::ofstream out(tmp);
    out << Json{{"cartan", datum.cartan}, {"roots", roots}}.dump();
  }
  fs::rename(tmp, file, ec);
  if (ec) fs::remove(tmp, ec);
  return rs;
}

}  // namespace

SymmetricSpace load_space(const SatakeDiagram& diagram, int verify_bound)
{
  return SymmetricSpace::build(diagram, cached_root_system(diagram.datum), verify_bound);
}

Weight parse_weight(const SymmetricSpace& s, const std::string& text, const std::string& coords)
{
  std::string t = trim(text);
  if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  std::vector<Rational> vals;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      vals.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw InvalidInput("weight '" + text + "': '" + item + "' is not a number");
    }
  }
  if (coords == "theta") {
    std::vector<Integer> c;
    for (const auto& q : vals) {
      if (!is_integral(q)) throw InvalidInput("theta-coordinates must be integers: '" + text + "'");
      c.push_back(q.numerator());
    }
    if (c.size() != s.lattice.theta.size())
      throw InvalidInput("weight '" + text + "' has " + std::to_string(c.size()) + " theta-coordinate(s); this " +
                         "diagram has a theta-basis of size " + std::to_string(s.lattice.theta.size()));
    return from_theta(s, c);
  }
  if (coords == "omega") {
    if (static_cast<int>(vals.size()) != s.roots.rank())
      throw InvalidInput("weight '" + text + "' has " + std::to_string(vals.size()) +
                         " coordinate(s); rank is " + std::to_string(s.roots.rank()));
    return Weight(vals);
  }
  throw InvalidInput("--coords must be 'theta' or 'omega', not '" + coords + "'");
}

// ------------------------------------------------------------- reports

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json result = Json::object();
  Table table;
  std::vector<std::string> text;
  int status = 0;
};

std::string cell(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string csv_escape(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<int> zero_based(const std::vector<int>& v, int limit, const char* what)
{
  std::vector<int> out;
  for (int x : v) {
    if (x < 1 || x > limit)
      throw InvalidInput(std::string(what) + " index " + std::to_string(x) + " is not in 1.." + std::to_string(limit));
    out.push_back(x - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

WeylElement parse_word(const RootSystem& rs, const std::string& text)
{
  std::string t = trim(text);
  if (t.empty() || t == "e") return rs.identity();
  if (t == "w0") {
    std::vector<int> all;
    for (int i = 0; i < rs.rank(); ++i) all.push_back(i);
    return rs.longest_element(all);
  }
  std::vector<int> word;
  for (int x : int_list_text("word", t)) {
    if (x < 1 || x > rs.rank())
      throw InvalidInput("reflection index " + std::to_string(x) + " is not in 1.." + std::to_string(rs.rank()));
    word.push_back(x - 1);
  }
  return rs.element(word);
}

Weight required_weight(const SymmetricSpace& s, const JobConfig& c, const std::optional<std::string>& w,
                       const char* name)
{
  if (!w) throw InvalidInput(std::string("missing --") + name);
  return parse_weight(s, *w, c.coords.value_or("theta"));
}

Report cmd_involution(const SymmetricSpace& s)
{
  Report r;
  r.result = involution_json(s);
  r.table.header = {"node", "sigma(alpha)", "c", "beta", "exceptional"};
  const int n = s.roots.rank();
  for (int j = 0; j < n; ++j) {
    std::vector<int> col;
    for (int i = 0; i < n; ++i) col.push_back(s.involution.on_simple[i][j]);
    bool exc = std::count(s.involution.exceptional.begin(), s.involution.exceptional.end(), j) > 0;
    r.table.rows.push_back({std::to_string(j + 1), Json(col).dump(), std::to_string(s.involution.c_values[j]),
                            Json(s.involution.beta[j]).dump(), exc ? "yes" : "no"});
  }
  r.text.push_back("restricted type: " + s.restricted.type + (s.restricted.reduced ? " (reduced)" : " (non-reduced)"));
  std::string exc;
  for (int a : s.involution.exceptional) exc += (exc.empty() ? "" : ", ") + std::to_string(a + 1);
  r.text.push_back("exceptional simple roots: " + (exc.empty() ? std::string("none") : exc));
  for (const auto& row : r.table.rows) r.text.push_back("sigma(alpha_" + row[0] + ") = " + row[1] + "  c = " + row[2]);
  return r;
}

Report cmd_lattice(const SymmetricSpace& s)
{
  Report r;
  r.result = lattice_json(s);
  r.table.header = {"kind", "index", "weight", "form"};
  for (std::size_t i = 0; i < s.lattice.generators.size(); ++i)
    r.table.rows.push_back({"spherical", std::to_string(i + 1), s.lattice.generators[i].str(),
                            "c=" + std::to_string(s.lattice.c[i])});
  for (std::size_t i = 0; i < s.lattice.pic_generators.size(); ++i)
    r.table.rows.push_back({"pic", std::to_string(i + 1), s.lattice.pic_generators[i].str(), ""});
  for (std::size_t i = 0; i < s.lattice.theta.size(); ++i)
    r.table.rows.push_back({"theta", std::to_string(i + 1), s.lattice.theta[i].str(), s.lattice.theta_forms[i]});
  for (const auto& row : r.table.rows) r.text.push_back(row[0] + " " + row[1] + ": " + row[2] + " " + row[3]);
  return r;
}

Report cmd_spherical(const SymmetricSpace& s, const JobConfig& c)
{
  Weight mu = required_weight(s, c, c.lambda, "lambda");
  Report r;
  r.result = spherical_json(s, mu);
  r.table.header = {"property", "value"};
  for (auto it = r.result.begin(); it != r.result.end(); ++it) {
    r.table.rows.push_back({it.key(), cell(it.value())});
    r.text.push_back(it.key() + ": " + cell(it.value()));
  }
  return r;
}

Report cmd_lspaths(const SymmetricSpace& s, const JobConfig& c)
{
  Weight lambda = required_weight(s, c, c.lambda, "lambda");
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw InvalidInput("lspaths: " + lambda.str() + " is not dominant integral");
  PathModel pm(s.roots, lambda);
  Crystal cr = crystal_generate(s.roots, Path::straight(lambda));
  Integer dim = s.roots.weyl_dim(lambda);
  std::set<Path> a(pm.realized().begin(), pm.realized().end()), b(cr.nodes.begin(), cr.nodes.end());
  bool ok = static_cast<Integer>(pm.size()) == dim && a == b;
  Report r;
  Json paths = Json::array();
  for (const auto& pi : pm.paths()) paths.push_back(ls_path_json(pm.poset(), pi));
  r.result = Json{{"lambda", to_json(lambda)}, {"count", pm.size()}, {"weyl_dim", dim}, {"crystal_agrees", a == b},
                  {"poset", poset_json(pm.poset())}, {"paths", paths}};
  if (c.crystal.value_or(false)) r.result["crystal"] = crystal_json(cr);
  r.table.header = {"chain", "a", "word", "endpoint"};
  for (const auto& p : paths)
    r.table.rows.push_back({cell(p["chain"]), cell(p["a"]), cell(p["word"]), cell(p["endpoint"])});
  r.text.push_back("|B_lambda| = " + std::to_string(pm.size()) + ", dim V_lambda = " + std::to_string(dim) +
                   (ok ? " PASS" : " FAIL"));
  for (const auto& row : r.table.rows) r.text.push_back(row[0] + " " + row[1] + " -> " + row[3]);
  r.status = ok ? 0 : 1;
  return r;
}

Report cmd_monomials(const SymmetricSpace& s, const JobConfig& c)
{
  Weight lambda = required_weight(s, c, c.lambda, "lambda");
  auto I = zero_based(c.orbit.value_or(std::vector<int>{}), s.restricted.rank(), "I");
  StandardMonomials sm(s);
  auto ms = sm.enumerate(lambda, I);
  Report r;
  Json list = Json::array();
  if (!c.count_only.value_or(false))
    for (const auto& m : ms) list.push_back(monomial_json(sm, m));
  r.result = Json{{"lambda", to_json(lambda)}, {"I", c.orbit.value_or(std::vector<int>{})}, {"count", ms.size()}};
  if (!c.count_only.value_or(false)) r.result["monomials"] = list;
  r.table.header = {"n", "factors"};
  for (const auto& m : list) r.table.rows.push_back({cell(m["n"]), cell(m["factors"])});
  r.text.push_back("standard monomials: " + std::to_string(ms.size()));
  return r;
}

Report cmd_verify_dim(const SymmetricSpace& s, const JobConfig& c)
{
  Weight lambda = required_weight(s, c, c.lambda, "lambda");
  auto I = zero_based(c.orbit.value_or(std::vector<int>{}), s.restricted.rank(), "I");
  StandardMonomials sm(s);
  DimensionReport d = sm.verify_dimension(lambda, I);
  Report r;
  r.result = dimension_json(d);
  r.table.header = {"n", "mu", "weyl_dim", "standard_monomials"};
  for (const auto& t : d.terms)
    r.table.rows.push_back({Json(t.n).dump(), t.mu.str(), std::to_string(t.weyl_dim), std::to_string(t.monomials)});
  r.text.push_back(d.summary());
  r.status = d.pass ? 0 : 1;
  return r;
}

Report cmd_tensor(const SymmetricSpace& s, const JobConfig& c)
{
  Weight lambda = required_weight(s, c, c.lambda, "lambda");
  Weight mu = required_weight(s, c, c.mu, "mu");
  Decomposition d = tensor_decompose(s.roots, lambda, mu);
  auto oracle = s.roots.char_decompose_product(lambda, mu);
  bool ok = d == oracle;
  Report r;
  r.result = Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"decomposition", decomposition_json(d)},
                  {"character_oracle_agrees", ok}};
  r.table.header = {"nu", "multiplicity"};
  for (const auto& [nu, m] : d) {
    r.table.rows.push_back({nu.str(), std::to_string(m)});
    r.text.push_back("V" + nu.str() + " x " + std::to_string(m));
  }
  r.text.push_back(ok ? "character oracle agrees" : "character oracle DISAGREES");
  r.status = ok ? 0 : 1;
  return r;
}

void instance_rows(Report& r, const std::vector<PrvInstance>& insts)
{
  r.table.header = {"nu", "lambda", "mu", "lambda_prime", "mu_prime", "verified"};
  for (const auto& i : insts) {
    const auto& w = i.witness;
    r.table.rows.push_back({i.nu.str(), i.lambda.str(), i.mu.str(), w ? w->lambda_prime.str() : "",
                            w ? w->mu_prime.str() : "", w ? "true" : "false"});
    r.text.push_back("nu=" + i.nu.str() + " lambda=" + i.lambda.str() + " mu=" + i.mu.str() + " -> " +
                     (w ? "(" + w->lambda_prime.str() + ", " + w->mu_prime.str() + ")" : std::string("NO WITNESS")));
  }
}

Report cmd_prv(const SymmetricSpace& s, const JobConfig& c)
{
  Report r;
  if (c.sweep.value_or(false)) {
    SweepReport sw = prv_sweep(s, c.bound.value_or(2), c.jobs.value_or(1));
    r.result = sweep_json(sw);
    instance_rows(r, sw.instances);
    r.text.push_back(std::to_string(sw.instances.size() - sw.failures.size()) + "/" +
                     std::to_string(sw.instances.size()) + " triples verified");
    r.status = sw.pass() ? 0 : 1;
    return r;
  }
  Weight lambda = required_weight(s, c, c.lambda, "lambda");
  Weight mu = required_weight(s, c, c.mu, "mu");
  if (c.tau || c.eps) {
    ClassicalPrv p = prv_classical(s.roots, lambda, mu, parse_word(s.roots, c.tau.value_or("e")),
                                   parse_word(s.roots, c.eps.value_or("e")));
    r.result = Json{{"nu", to_json(p.nu)}, {"dominant", p.dominant}, {"multiplicity", p.multiplicity},
                    {"verified", p.verified}};
    r.table.header = {"nu", "dominant", "multiplicity", "verified"};
    r.table.rows.push_back({p.nu.str(), p.dominant ? "true" : "false", std::to_string(p.multiplicity),
                            p.verified ? "true" : "false"});
    r.text.push_back("nu = " + p.nu.str() + (p.verified ? " occurs (multiplicity " + std::to_string(p.multiplicity) + ")"
                                                        : " not verified"));
    r.status = (!p.dominant || p.verified) ? 0 : 1;
    return r;
  }
  if (c.nu) {
    Weight nu = required_weight(s, c, c.nu, "nu");
    PrvInstance inst{nu, lambda, mu, prv_witness(s, nu, lambda, mu)};
    r.result = instance_json(inst);
    instance_rows(r, {inst});
    r.status = inst.witness ? 0 : 1;
    return r;
  }
  SupportReport sr = surjectivity_support_check(s, lambda, mu);
  r.result = support_json(sr);
  instance_rows(r, sr.instances);
  r.status = sr.pass ? 0 : 1;
  return r;
}

Report cmd_accept(const SymmetricSpace& s, const JobConfig& c)
{
  SuiteOptions opt;
  opt.bound = c.bound.value_or(2);
  opt.jobs = c.jobs.value_or(1);
  auto checks = diagram_suite(s, opt);
  Report r;
  Json list = Json::array();
  bool ok = true;
  r.table.header = {"check", "pass", "detail"};
  for (const auto& ch : checks) {
    list.push_back(Json{{"check", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
    r.table.rows.push_back({ch.name, ch.pass ? "true" : "false", ch.detail});
    r.text.push_back((ch.pass ? "PASS " : "FAIL ") + ch.name + ": " + ch.detail);
    ok = ok && ch.pass;
  }
  r.result = Json{{"checks", list}, {"pass", ok}};
  r.status = ok ? 0 : 1;
  return r;
}

void emit(const Report& r, const JobConfig& c, const SatakeDiagram& d, std::ostream& out)
{
  std::string format = c.format.value_or("json");
  std::ostringstream body;
  if (format == "json") {
    Json doc{{"version", kVersion}, {"command", c.command}, {"diagram", diagram_json(d)}, {"result", r.result}};
    body << doc.dump(2) << "\n";
  } else if (format == "csv") {
    body << "# " << kVersion << " " << c.command << " " << diagram_json(d).dump() << "\n";
    for (std::size_t k = 0; k < r.table.header.size(); ++k) body << (k ? "," : "") << csv_escape(r.table.header[k]);
    body << "\n";
    for (const auto& row : r.table.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) body << (k ? "," : "") << csv_escape(row[k]);
      body << "\n";
    }
  } else {
    body << kVersion << " " << c.command << " " << (d.name.empty() ? d.datum.label : d.name) << "\n";
    for (const auto& line : r.text) body << line << "\n";
  }
  if (c.output) {
    std::ofstream f(*c.output);
    if (!f) throw InvalidInput("cannot write output file '" + *c.output + "'");
    f << body.str();
  } else {
    out << body.str();
  }
}

}  // namespace

int run(const JobConfig& config, std::ostream& out, std::ostream& err)
{
  try {
    JobConfig c = config;
    if (c.config_file) {
      std::ifstream f(*c.config_file);
      if (!f) throw InvalidInput("cannot read config file '" + *c.config_file + "'");
      std::stringstream buf;
      buf << f.rdbuf();
      c = merge_configs(c, parse_config_text(buf.str()));
    }
    std::string format = c.format.value_or("json");
    if (format != "json" && format != "csv" && format != "text")
      throw InvalidInput("--format must be json, csv or text, not '" + format + "'");
    if (c.jobs && *c.jobs < 1) throw InvalidInput("--jobs must be at least 1");
    if (c.bound && *c.bound < 0) throw InvalidInput("--bound must be non-negative");

    SatakeDiagram d = resolve_diagram(c);
    SymmetricSpace s = load_space(d, c.verify_bound.value_or(4));
    Report r;
    if (c.command == "involution") r = cmd_involution(s);
    else if (c.command == "lattice") r = cmd_lattice(s);
    else if (c.command == "spherical") r = cmd_spherical(s, c);
    else if (c.command == "lspaths") r = cmd_lspaths(s, c);
    else if (c.command == "monomials") r = cmd_monomials(s, c);
    else if (c.command == "verify-dim") r = cmd_verify_dim(s, c);
    else if (c.command == "tensor") r = cmd_tensor(s, c);
    else if (c.command == "prv") r = cmd_prv(s, c);
    else if (c.command == "accept") r = cmd_accept(s, c);
    else throw InvalidInput("unknown command '" + c.command + "'");
    emit(r, c, d, out);
    return r.status;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Combinatorics of complete symmetric varieties", "symmcomb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  JobConfig c;
  std::string preset_s, cartan_s, matrix_s, black_s, arrows_s, coords_s, lambda_s, mu_s, nu_s, orbit_s, tau_s, eps_s,
      format_s, output_s, config_s;
  int bound = 2, verify_bound = 4, jobs = 1;
  bool sweep = false, crystal = false, count_only = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_s, "Config file (key = value lines)");
    sub->add_option("--preset", preset_s, "Named diagram");
    sub->add_option("--cartan", cartan_s, "Cartan type, e.g. B3 or A1xA1");
    sub->add_option("--matrix", matrix_s, "Cartan matrix as JSON rows");
    sub->add_option("--black", black_s, "Black nodes, e.g. 1,3");
    sub->add_option("--arrows", arrows_s, "Arrows as JSON pairs, e.g. [[1,2]]");
    sub->add_option("--coords", coords_s, "Weight coordinates: theta (default) or omega");
    sub->add_option("--lambda", lambda_s, "Weight lambda, e.g. 2 or 1,0");
    sub->add_option("--mu", mu_s, "Weight mu");
    sub->add_option("--nu", nu_s, "Weight nu");
    sub->add_option("--I,--orbit", orbit_s, "Orbit subset I, e.g. 1,2");
    sub->add_option("--bound", bound, "Sweep bound on theta-coordinates");
    sub->add_option("--verify-bound", verify_bound, "Box bound certifying the theta-basis");
    sub->add_option("--jobs", jobs, "Worker threads for sweeps");
    sub->add_option("--format", format_s, "json, csv or text");
    sub->add_option("--output,-o", output_s, "Write the report to a file");
  };

  std::vector<std::pair<const char*, const char*>> commands = {
      {"involution", "sigma table, restricted type and exceptional roots"},
      {"lattice", "spherical weights, Pic(X) and the theta-basis"},
      {"spherical", "test a weight for sphericity"},
      {"lspaths", "enumerate LS paths of shape lambda"},
      {"monomials", "enumerate standard monomials of shape lambda"},
      {"verify-dim", "check |M_lambda,I| against the section dimension"},
      {"tensor", "decompose V_lambda (x) V_mu"},
      {"prv", "PRV witness, support check or sweep"},
      {"accept", "run the invariant suite on the diagram"},
  };
  std::vector<CLI::App*> subs;
  for (auto [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    subs.push_back(sub);
  }
  app.get_subcommand("lspaths")->add_flag("--crystal", crystal, "Include the crystal graph");
  app.get_subcommand("monomials")->add_flag("--count", count_only, "Only count");
  CLI::App* prv = app.get_subcommand("prv");
  prv->add_flag("--sweep", sweep, "Sweep all triples with theta-coordinates <= bound");
  prv->add_option("--tau", tau_s, "Weyl word for classical PRV, e.g. 1,2 or w0");
  prv->add_option("--eps", eps_s, "Weyl word for classical PRV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  c.command = chosen->get_name();
  auto given = [&](const char* opt) { return chosen->count(opt) > 0; };
  try {
    if (given("--config")) c.config_file = config_s;
    if (given("--preset")) c.preset = preset_s;
    if (given("--cartan")) c.cartan = cartan_s;
    if (given("--matrix")) {
      Json m = parse_json_value("matrix", matrix_s);
      c.matrix = matrix_value(m);
    }
    if (given("--black")) c.black = int_list_text("black", black_s);
    if (given("--arrows")) c.arrows = arrow_list(parse_json_value("arrows", arrows_s));
    if (given("--coords")) c.coords = coords_s;
    if (given("--lambda")) c.lambda = lambda_s;
    if (given("--mu")) c.mu = mu_s;
    if (given("--nu")) c.nu = nu_s;
    if (given("--I")) c.orbit = int_list_text("I", orbit_s);
    if (given("--bound")) c.bound = bound;
    if (given("--verify-bound")) c.verify_bound = verify_bound;
    if (given("--jobs")) c.jobs = jobs;
    if (given("--format")) c.format = format_s;
    if (given("--output")) c.output = output_s;
    if (c.command == "lspaths" && given("--crystal")) c.crystal = crystal;
    if (c.command == "monomials" && given("--count")) c.count_only = count_only;
    if (c.command == "prv") {
      if (given("--sweep")) c.sweep = sweep;
      if (given("--tau")) c.tau = tau_s;
      if (given("--eps")) c.eps = eps_s;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return run(c, out, err);
}

}  // namespace symmcomb
