#include "nodalcodes/json_io.hpp"

#include "nodalcodes/error.hpp"

namespace nodal {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("JSON: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("JSON: field '") + key + "' has the wrong type");
  }
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<int> optional_int_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<int>(j, key);
}

}  // namespace

Json rational_to_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return Json(static_cast<std::int64_t>(boost::multiprecision::numerator(r)));
  }
  return Json(r.str());
}

Json weight_enumerator_to_json(const WeightEnumerator& we) {
  Json out = Json::object();
  for (std::size_t w = 0; w < we.counts.size(); ++w) {
    if (we.counts[w] != 0) out[std::to_string(w)] = we.counts[w];
  }
  return out;
}

Json code_to_json(const BinaryCode& code) {
  Json gens = Json::array();
  for (const auto& g : code.generators()) gens.push_back(g.to_string());
  return {{"length", code.length()},
          {"dim", code.dim()},
          {"generators", gens},
          {"weight_enumerator", weight_enumerator_to_json(weight_enumerator(code))}};
}

BinaryCode code_from_json(const Json& j) {
  const int length = field<int>(j, "length");
  std::vector<BitWord> gens;
  for (const auto& s : field<std::vector<std::string>>(j, "generators")) gens.push_back(BitWord::from_string(s));
  BinaryCode code = make_code(gens, length);
  if (j.contains("dim") && field<int>(j, "dim") != code.dim()) throw Error("JSON: code dimension mismatch");
  return code;
}

Json permutation_to_json(const CoordinatePermutation& p) { return Json(p.images()); }

Json lattice_to_json(const GramLattice& lattice) {
  return {{"rank", lattice.rank()}, {"doubled_gram", lattice.doubled_gram()}, {"scaling", to_string(lattice.scaling())}};
}

GramLattice lattice_from_json(const Json& j) {
  auto gram = field<IntMatrix>(j, "doubled_gram");
  const Scaling scaling = parse_scaling(j.contains("scaling") ? field<std::string>(j, "scaling") : "unscaled");
  if (j.contains("rank") && field<int>(j, "rank") != static_cast<int>(gram.size())) {
    throw Error("JSON: lattice rank does not match the Gram matrix");
  }
  return GramLattice(std::move(gram), scaling);
}

Json root_report_to_json(const RootSystemReport& report) {
  Json components = Json::array();
  for (const auto& c : report.components) components.push_back(c.label());
  return {{"root_count", report.root_count},
          {"components", components},
          {"full_rank", report.full_rank},
          {"root_index", report.root_index},
          {"cartan", report.cartan}};
}

Json invariants_to_json(const SurfaceInvariants& s) {
  return {{"chi", s.chi},
          {"K2", s.K2},
          {"c2", s.c2},
          {"rho", optional_int(s.rho)},
          {"pg", optional_int(s.pg)},
          {"q", optional_int(s.q)},
          {"kodaira", to_string(s.kodaira)}};
}

SurfaceInvariants invariants_from_json(const Json& j) {
  SurfaceInvariants s;
  s.chi = field<int>(j, "chi");
  s.K2 = field<int>(j, "K2");
  s.c2 = field<int>(j, "c2");
  s.rho = optional_int_from(j, "rho");
  s.pg = optional_int_from(j, "pg");
  s.q = optional_int_from(j, "q");
  s.kodaira = j.contains("kodaira") ? parse_kodaira(field<std::string>(j, "kodaira")) : Kodaira::unknown;
  validate(s);
  return s;
}

Json derivation_to_json(const Derivation& derivation) {
  Json out = Json::array();
  for (const auto& step : derivation) {
    out.push_back({{"claim", step.claim}, {"paper_ref", step.reference}, {"values", step.values}});
  }
  return out;
}

Json involution_data_to_json(const InvolutionData& d) {
  return {{"K2_S", d.K2_S}, {"rho_S", d.rho_S}, {"D2", d.D2}, {"KD", d.KD},
          {"k", d.k},       {"t", d.t},         {"rho_Y", d.rho_Y}};
}

Json involution_case_to_json(const InvolutionCase& c) {
  Json out = {{"label", to_string(c.label)},
              {"k", c.k},
              {"rho_Y", c.rho_Y},
              {"K2_Y", c.K2_Y},
              {"kodaira_Y", to_string(c.kodaira_Y)},
              {"Y_description", c.description},
              {"genus_of_pencil", optional_int(c.genus_of_pencil)}};
  if (c.md) out["md"] = {c.md->first, c.md->second};
  return out;
}

Json fiber_configuration_to_json(const FiberConfiguration& c) {
  Json fibers = Json::array();
  for (const auto& f : c.fibers) {
    fibers.push_back({{"kind", to_string(f.kind)}, {"euler", f.euler}, {"nodal_capacity", f.nodal_capacity}});
  }
  return {{"fibers", fibers}, {"residual_euler", c.residual_euler}};
}

}  // namespace nodal
