#include "nodalcodes/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "nodalcodes/classify.hpp"
#include "nodalcodes/covers.hpp"
#include "nodalcodes/error.hpp"
#include "nodalcodes/gf2code.hpp"
#include "nodalcodes/json_io.hpp"
#include "nodalcodes/lattice.hpp"

namespace nodal::cli {

namespace {

namespace fs = std::filesystem;

enum class Status { ok, contradiction };

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Derivation derivation;
  Status status = Status::ok;
};

// Every option any subcommand can take.
struct Args {
  std::string file, file_b, scaling = "unscaled", weights = "4", cache, kodaira = "unknown";
  int n = 0, length = 0, dim_min = 0, dim_max = 0;
  int chi = 1, k2 = 0, c2 = 12, r = 0, m = 0, k = 0, rho = 0;
  std::optional<int> rho_opt, pg, q;
  int chi_cover = 0, chi_quotient = 0, contracted = 0;
  int euler = 12, nodes = 8, d2 = 0, kd = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BinaryCode read_code(const std::string& path) {
  try {
    return parse_code_text(read_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

// Lattice files hold {rank, doubled_gram, scaling}; a saved `lattice build`
// report is accepted too.
GramLattice read_lattice(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(path + ": malformed JSON: " + e.what());
  }
  if (j.is_object() && j.contains("outputs") && j["outputs"].contains("lattice")) j = j["outputs"]["lattice"];
  try {
    return lattice_from_json(j);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

WeightRule parse_weights(const std::string& w) {
  if (w == "4") return WeightRule::all_weights_4;
  if (w == "div4") return WeightRule::doubly_even;
  throw Error("--weights must be 4 or div4");
}

Json opt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

// ---- code ----

void code_analyze(const Args& a, Report& rep) {
  rep.inputs = {{"file", a.file}};
  const BinaryCode code = read_code(a.file);
  const auto reduced = reduce(code);
  const auto de_n = recognize_de(code);
  rep.outputs["code"] = code_to_json(code);
  rep.outputs["doubly_even"] = is_doubly_even(code);
  rep.outputs["self_orthogonal"] = is_self_orthogonal(code);
  rep.outputs["reduced"] = {{"length", reduced.code.length()}, {"support", reduced.support}};
  rep.outputs["de_n"] = opt(de_n);
  rep.outputs["canonical"] = code_to_json(canonical_form(code).code);
  rep.derivation.push_back({"m is the number of coordinates not identically zero on the code",
                            "reduced code", {{"m", reduced.code.length()}}});
}

void code_de(const Args& a, Report& rep) {
  rep.inputs = {{"n", a.n}};
  const BinaryCode code = de(a.n);
  rep.outputs["code"] = code_to_json(code);
  rep.outputs["text"] = to_text(code);
  rep.derivation.push_back({"DE(n) doubles each coordinate of the even-weight code of length n",
                            "doubled even-weight code",
                            {{"length", code.length()}, {"dim", code.dim()}}});
}

void code_equiv(const Args& a, Report& rep) {
  rep.inputs = {{"a", a.file}, {"b", a.file_b}};
  const BinaryCode ca = read_code(a.file);
  const BinaryCode cb = read_code(a.file_b);
  const auto perm = equivalent(ca, cb);
  rep.outputs["equivalent"] = perm.has_value();
  rep.outputs["permutation"] = perm ? permutation_to_json(*perm) : Json(nullptr);
  rep.outputs["essentially_isomorphic"] = essentially_isomorphic(ca, cb);
  rep.derivation.push_back({"compare canonical forms under coordinate permutation", "canonical form",
                            {{"equivalent", perm.has_value()}}});
}

std::vector<BinaryCode> read_cache(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read cache '" + path.string() + "'");
  std::vector<BinaryCode> codes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      codes.push_back(code_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      throw Error("corrupt cache '" + path.string() + "': " + e.what());
    }
  }
  return codes;
}

void write_cache(const fs::path& path, const std::vector<BinaryCode>& codes) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache '" + tmp.string() + "'");
    for (const auto& c : codes) out << code_to_json(c).dump() << '\n';
    if (!out) throw Error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

void code_enumerate(const Args& a, Report& rep) {
  rep.inputs = {{"length", a.length}, {"weights", a.weights}, {"dim_min", a.dim_min}, {"dim_max", a.dim_max}};
  const WeightRule rule = parse_weights(a.weights);
  std::string dir = a.cache;
  if (const char* env = std::getenv("NODALCODES_CACHE"); env && *env) dir = env;

  std::vector<BinaryCode> codes;
  bool hit = false;
  fs::path path;
  if (!dir.empty()) {
    path = fs::path(dir) / enumerate_cache_name(a.length, a.weights, a.dim_min, a.dim_max);
    if (fs::exists(path)) {
      codes = read_cache(path);
      hit = true;
    }
  }
  if (!hit) {
    codes = enumerate_codes(a.length, rule, a.dim_min, a.dim_max);
    if (!path.empty()) write_cache(path, codes);
  }

  Json list = Json::array();
  for (const auto& c : codes) list.push_back(code_to_json(c));
  rep.outputs["count"] = codes.size();
  rep.outputs["codes"] = list;
  rep.outputs["cache"] = path.empty() ? Json(nullptr) : Json{{"path", path.string()}, {"hit", hit}};
  rep.derivation.push_back({"one canonical representative per permutation class",
                            "isomorph-free enumeration by canonical form",
                            {{"count", codes.size()}}});
}

void code_recognize_de(const Args& a, Report& rep) {
  rep.inputs = {{"file", a.file}};
  const BinaryCode code = read_code(a.file);
  const auto n = recognize_de(code);
  rep.outputs["n"] = opt(n);
  rep.outputs["reduced_length"] = reduce(code).code.length();
  rep.derivation.push_back({"reduced code is DE(n) up to permutation", "doubled even-weight code",
                            {{"n", opt(n)}}});
}

// ---- lattice ----

void lattice_build(const Args& a, Report& rep) {
  rep.inputs = {{"file", a.file}, {"scaling", a.scaling}};
  const BinaryCode code = read_code(a.file);
  const GramLattice lattice = construction_a(code, parse_scaling(a.scaling));
  rep.outputs["lattice"] = lattice_to_json(lattice);
  rep.outputs["ambient_basis"] = lattice.ambient_basis();
  rep.derivation.push_back({"basis: lifted generators at their pivots, 2 e_j elsewhere", "Construction A",
                            {{"rank", lattice.rank()}, {"scaling", a.scaling}}});
}

void lattice_identify(const Args& a, Report& rep) {
  rep.inputs = {{"file", a.file}};
  const GramLattice lattice = read_lattice(a.file);
  const auto report = identify_root_system(lattice);
  rep.outputs["root_system"] = root_report_to_json(report);
  rep.outputs["discriminant"] = rational_to_json(discriminant(lattice));
  Json labels = Json::array();
  for (const auto& c : report.components) labels.push_back(c.label());
  rep.derivation.push_back({"roots are the vectors of norm 2", "short vector enumeration",
                            {{"root_count", report.root_count}}});
  rep.derivation.push_back({"simple roots and their Cartan matrix give the Dynkin type",
                            "ADE classification", {{"components", labels}}});
}

// ---- cover and bounds ----

void cover_invariants_cmd(const Args& a, Report& rep) {
  SurfaceInvariants y;
  y.chi = a.chi;
  y.K2 = a.k2;
  y.c2 = a.c2;
  y.rho = a.rho_opt;
  y.pg = a.pg;
  y.q = a.q;
  y.kodaira = parse_kodaira(a.kodaira);
  rep.inputs = {{"Y", invariants_to_json(y)}, {"r", a.r}, {"m", a.m}};
  const auto out = cover_invariants(y, {a.r, a.m});
  rep.outputs["Z"] = invariants_to_json(out.cover);
  rep.outputs["Z_bar"] = invariants_to_json(out.contracted);
  rep.outputs["warnings"] = out.warnings;
  rep.derivation.push_back({"chi(Z) = 2^r chi(Y) - m 2^(r-3), K2(Z) = 2^r K2(Y) - m 2^(r-1)",
                            "invariants of the G-cover branched on the nodes",
                            {{"chi", out.cover.chi}, {"K2", out.cover.K2}, {"c2", out.cover.c2}}});
  rep.derivation.push_back({"blowing down the m 2^(r-1) exceptional curves adds m 2^(r-1) to K2",
                            "contraction of (-1)-curves",
                            {{"chi", out.contracted.chi}, {"K2", out.contracted.K2}}});
}

void cover_double_nodes(const Args& a, Report& rep) {
  rep.inputs = {{"chi_cover", a.chi_cover}, {"chi_quotient", a.chi_quotient}};
  const int s = double_cover_nodes(a.chi_cover, a.chi_quotient);
  rep.outputs["nodes"] = s;
  rep.derivation.push_back({"chi(Z) = 2 chi(Y) - s/4", "double cover branched at s nodes", {{"s", s}}});
}

void bound_isotropic(const Args& a, Report& rep) {
  rep.inputs = {{"k", a.k}, {"rho", a.rho}};
  const int b = isotropic_bound(a.k, a.rho);
  rep.outputs["r_min"] = b;
  rep.derivation.push_back({"the curve classes span an isotropic subspace mod 2", "isotropic subspace bound",
                            {{"r_min", b}}});
}

void bound_miyaoka(const Args& a, Report& rep) {
  rep.inputs = {{"K2", a.k2}, {"c2", a.c2}};
  const auto b = miyaoka_max_nodes(a.k2, a.c2);
  rep.outputs["max_nodes"] = b.max_nodes;
  rep.outputs["assumption"] = b.assumption;
  rep.derivation.push_back({"k <= 2 (3 c2 - K2) / 9", "Miyaoka's bound on nodes", {{"max_nodes", b.max_nodes}}});
}

void bound_min_m(const Args& a, Report& rep) {
  rep.inputs = {{"r", a.r}};
  const int m = min_m_for_r(a.r);
  rep.outputs["m_min"] = m;
  rep.derivation.push_back({"chi(Z_bar) <= 1 on a ruled cover gives (8 - m) 2^r <= 8",
                            "cover of a rational surface", {{"m_min", m}}});
}

void bound_picard(const Args& a, Report& rep) {
  rep.inputs = {{"rho", a.rho}, {"n", a.contracted}};
  rep.outputs["rho"] = picard_after_contraction(a.rho, a.contracted);
}

// ---- classify ----

void classify_involution_cmd(const Args& a, Report& rep) {
  rep.inputs = {{"K2", a.k2}};
  const auto c = classify_involution(a.k2);
  Json cases = Json::array(), eliminated = Json::array();
  for (const auto& x : c.cases) cases.push_back(involution_case_to_json(x));
  for (const auto& x : c.eliminated) eliminated.push_back(involution_case_to_json(x));
  rep.outputs["contradiction"] = c.contradiction;
  rep.outputs["cases"] = cases;
  rep.outputs["eliminated"] = eliminated;
  rep.derivation = c.derivation;
  if (c.contradiction) rep.status = Status::contradiction;
}

void classify_fibers(const Args& a, Report& rep) {
  rep.inputs = {{"euler", a.euler}, {"nodes", a.nodes}};
  const auto configs = fiber_budget(a.euler, a.nodes);
  Json list = Json::array();
  Json kinds = Json::array();
  for (const auto& c : configs) {
    list.push_back(fiber_configuration_to_json(c));
    Json names = Json::array();
    for (const auto& f : c.fibers) names.push_back(to_string(f.kind));
    kinds.push_back(names);
  }
  rep.outputs["multisets"] = kinds;
  rep.outputs["configurations"] = list;
  rep.derivation.push_back({"singular fibres carrying the nodes within the Euler number budget",
                            "Kodaira fibre types I2, III, I0*",
                            {{"count", configs.size()}}});
  if (configs.empty()) rep.status = Status::contradiction;
}

void classify_kr_pairs(const Args&, Report& rep) {
  const auto report = feasible_kr_pairs();
  Json list = Json::array();
  for (const auto& t : report.triples) list.push_back({{"k", t.k}, {"r", t.r}, {"m", t.m}});
  rep.outputs["triples"] = list;
  rep.derivation = report.derivation;
}

void classify_thm_mt(const Args& a, Report& rep) {
  rep.inputs = {{"rho", a.rho}};
  const auto report = verify_thm_mt(a.rho);
  rep.outputs["rho"] = report.rho;
  rep.outputs["k"] = report.k;
  rep.outputs["numerically_feasible"] = report.survives;
  rep.outputs["feasible_r"] = report.feasible_r;
  rep.outputs["tag"] = report.tag;
  rep.derivation = report.derivation;
  if (report.tag != "F2") rep.status = Status::contradiction;
}

void classify_small_rho(const Args& a, Report& rep) {
  rep.inputs = {{"rho", a.rho}};
  Json list = Json::array();
  for (const auto& c : small_rho_cases(a.rho)) {
    list.push_back({{"k", c.k}, {"rho", c.rho}, {"description", c.description}});
  }
  rep.outputs["cases"] = list;
}

void classify_fixed_point(const Args& a, Report& rep) {
  rep.inputs = {{"K2_S", a.k2}, {"rho_S", a.rho}, {"D2", a.d2}, {"KD", a.kd}};
  rep.outputs = involution_data_to_json(fixed_point_data(a.k2, a.rho, a.d2, a.kd));
}

void classify_traces(const Args& a, Report& rep) {
  rep.inputs = {{"k", a.k}, {"KD", a.kd}, {"D2", a.d2}};
  const auto t = fixed_point_traces(a.k, a.kd, a.d2);
  rep.outputs["holomorphic_lhs"] = rational_to_json(t.holomorphic);
  rep.outputs["topological_lhs"] = t.topological;
}

void classify_standard_example(const Args& a, Report& rep) {
  rep.inputs = {{"n", a.n}};
  const auto ex = standard_example_invariants(a.n);
  rep.outputs["rho"] = ex.rho;
  rep.outputs["k"] = ex.k;
  rep.outputs["code"] = code_to_json(ex.code);
}

void solve_md_cmd(const Args&, Report& rep) {
  Json list = Json::array();
  for (const auto& s : solve_md()) list.push_back({{"m", s.m}, {"d", s.d}, {"genus", s.genus}});
  rep.outputs["solutions"] = list;
  rep.derivation.push_back({"(m - 2)(d - 1) = 2", "factorisation over positive integers",
                            {{"count", list.size()}}});
}

Json to_json(const Report& rep) {
  return {{"command", rep.command},
          {"status", rep.status == Status::ok ? "ok" : "contradiction"},
          {"inputs", rep.inputs},
          {"outputs", rep.outputs},
          {"derivation", derivation_to_json(rep.derivation)}};
}

Json error_json(const std::string& command, const Json& inputs, const std::string& message) {
  return {{"command", command},
          {"status", "error"},
          {"inputs", inputs},
          {"outputs", Json::object()},
          {"derivation", Json::array()},
          {"error", message}};
}

void emit(std::ostream& out, const Json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

using Handler = void (*)(const Args&, Report&);

}  // namespace

std::string enumerate_cache_name(int length, const std::string& weights, int dim_min, int dim_max) {
  return "enumerate-L" + std::to_string(length) + "-w" + weights + "-d" + std::to_string(dim_min) + "-" +
         std::to_string(dim_max) + ".jsonl";
}

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Binary codes of nodal curves, Construction-A lattices and surface invariants", "nodalcodes"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON report");
  Args a;
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  std::vector<std::pair<CLI::App*, std::string>> names;

  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    handlers.emplace_back(s, h);
    names.emplace_back(s, parent->get_name() + " " + name);
    return s;
  };

  auto* code = group("code", "binary code operations");
  leaf(code, "analyze", "weights, reduction and canonical form of a code file", code_analyze)
      ->add_option("file", a.file)->required();
  leaf(code, "de", "the doubled even-weight code DE(n)", code_de)->add_option("n", a.n)->required();
  auto* equiv = leaf(code, "equiv", "permutation equivalence of two code files", code_equiv);
  equiv->add_option("a", a.file)->required();
  equiv->add_option("b", a.file_b)->required();
  auto* en = leaf(code, "enumerate", "codes up to permutation", code_enumerate);
  en->add_option("--length", a.length)->required();
  en->add_option("--weights", a.weights)->check(CLI::IsMember({"4", "div4"}));
  en->add_option("--dim-min", a.dim_min);
  en->add_option("--dim-max", a.dim_max)->required();
  en->add_option("--cache", a.cache, "cache directory (NODALCODES_CACHE overrides)");
  leaf(code, "recognize-de", "find n with reduced code equal to DE(n)", code_recognize_de)
      ->add_option("file", a.file)->required();

  auto* lat = group("lattice", "Construction-A lattices");
  auto* build = leaf(lat, "build", "Construction A of a code file", lattice_build);
  build->add_option("file", a.file)->required();
  build->add_option("--scaling", a.scaling)->check(CLI::IsMember({"unscaled", "half"}));
  leaf(lat, "identify", "root system of a lattice file", lattice_identify)->add_option("file", a.file)->required();

  auto* cover = group("cover", "invariants of covers");
  auto* ci = leaf(cover, "invariants", "cover and contracted cover of Y", cover_invariants_cmd);
  ci->add_option("--chi", a.chi)->required();
  ci->add_option("--k2", a.k2)->required();
  ci->add_option("--c2", a.c2)->required();
  ci->add_option("--r", a.r)->required();
  ci->add_option("--m", a.m)->required();
  ci->add_option("--kodaira", a.kodaira);
  ci->add_option("--rho", a.rho_opt);
  ci->add_option("--pg", a.pg);
  ci->add_option("--q", a.q);
  auto* dn = leaf(cover, "double-cover-nodes", "branch nodes of a double cover", cover_double_nodes);
  dn->add_option("--chi-cover", a.chi_cover)->required();
  dn->add_option("--chi-quotient", a.chi_quotient)->required();

  auto* bound = group("bound", "numerical bounds");
  auto* iso = leaf(bound, "isotropic", "lower bound on the code dimension", bound_isotropic);
  iso->add_option("--k", a.k)->required();
  iso->add_option("--rho", a.rho)->required();
  auto* mi = leaf(bound, "miyaoka", "maximal number of nodes", bound_miyaoka);
  mi->add_option("--k2", a.k2)->required();
  mi->add_option("--c2", a.c2)->required();
  leaf(bound, "min-m", "least m for a code of dimension r on a rational surface", bound_min_m)
      ->add_option("--r", a.r)->required();
  auto* pic = leaf(bound, "picard", "Picard number after contracting curves", bound_picard);
  pic->add_option("--rho", a.rho)->required();
  pic->add_option("--n", a.contracted)->required();

  auto* cls = group("classify", "case analyses");
  leaf(cls, "involution", "involutions on surfaces with p_g = q = 0", classify_involution_cmd)
      ->add_option("--k2", a.k2)->required();
  auto* fib = leaf(cls, "fibers", "singular fibres carrying the nodes", classify_fibers);
  fib->add_option("--euler", a.euler);
  fib->add_option("--nodes", a.nodes);
  leaf(cls, "kr-pairs", "feasible (k, r, m) for k = rho - 2", classify_kr_pairs);
  leaf(cls, "thm-mt", "test k = rho - 1 nodal curves", classify_thm_mt)->add_option("--rho", a.rho)->required();
  leaf(cls, "small-rho", "surfaces with rho <= 4", classify_small_rho)->add_option("--rho", a.rho)->required();
  auto* fp = leaf(cls, "fixed-point", "fixed-point data of an involution", classify_fixed_point);
  fp->add_option("--k2", a.k2)->required();
  fp->add_option("--rho", a.rho)->required();
  fp->add_option("--d2", a.d2)->required();
  fp->add_option("--kd", a.kd)->required();
  auto* tr = leaf(cls, "traces", "fixed-point formula left-hand sides", classify_traces);
  tr->add_option("--k", a.k)->required();
  tr->add_option("--kd", a.kd)->required();
  tr->add_option("--d2", a.d2)->required();
  leaf(cls, "standard-example", "invariants of the standard example", classify_standard_example)
      ->add_option("--n", a.n)->required();

  auto* solve = group("solve", "Diophantine equations");
  leaf(solve, "md", "positive solutions of d m = m + 2 d", solve_md_cmd);

  std::string command;
  for (const auto& s : args) {
    if (s.rfind("-", 0) == 0) break;
    command += (command.empty() ? "" : " ") + s;
  }

  std::vector<std::string> storage{"nodalcodes"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(out, error_json(command, Json::object(), e.what()), pretty);
    return 1;
  }

  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    Report rep;
    for (const auto& [s, name] : names) {
      if (s == sub) rep.command = name;
    }
    try {
      handler(a, rep);
    } catch (const std::exception& e) {
      emit(out, error_json(rep.command, rep.inputs, e.what()), pretty);
      return 1;
    }
    emit(out, to_json(rep), pretty);
    return rep.status == Status::ok ? 0 : 2;
  }
  emit(out, error_json(command, Json::object(), "no command given"), pretty);
  return 1;
}

}  // namespace nodal::cli
