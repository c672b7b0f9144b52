#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nodalcodes/covers.hpp"
#include "nodalcodes/gf2code.hpp"
#include "nodalcodes/lattice.hpp"

namespace nodal {

using Json = nlohmann::ordered_json;

// One step of a derivation: a claim, the fact it rests on, and the values
// involved.
struct DerivationStep {
  std::string claim;
  std::string reference;
  Json values = Json::object();
};
using Derivation = std::vector<DerivationStep>;

// Fixed-point data of an involution on a surface with p_g = q = 0.
struct InvolutionData {
  int K2_S = 0;
  int rho_S = 0;
  int D2 = 0;  // self-intersection of the divisorial fixed part D
  int KD = 0;  // K_S . D
  int k = 0;   // isolated fixed points
  int t = 0;   // trace on H^2
  int rho_Y = 0;
};

InvolutionData fixed_point_data(int K2_S, int rho_S, int D2, int KD);

struct FixedPointTraces {
  Rational holomorphic;  // (k - K.D) / 4
  int topological;       // k + e(D), e(D) = -D^2 - K.D
};

FixedPointTraces fixed_point_traces(int k, int KD, int D2);

enum class CaseLabel { i, ii, iii, iv, v, contradiction };
std::string to_string(CaseLabel label);

struct InvolutionCase {
  CaseLabel label = CaseLabel::contradiction;
  int k = 0;
  int rho_Y = 0;
  int K2_Y = 0;
  Kodaira kodaira_Y = Kodaira::unknown;
  std::string description;
  std::optional<int> genus_of_pencil;
  std::optional<std::pair<int, int>> md;  // (m, d) with K_S.D = 2m
};

struct InvolutionClassification {
  int K2_S = 0;
  bool contradiction = false;  // no involution can exist
  std::vector<InvolutionCase> cases;
  std::vector<InvolutionCase> eliminated;
  Derivation derivation;
};

InvolutionClassification classify_involution(int K2_S);

struct MdSolution {
  int m = 0;
  int d = 0;
  int genus = 0;  // 2d - 1

  friend bool operator==(const MdSolution&, const MdSolution&) = default;
};

// Positive solutions of d m = m + 2 d, sorted by m.
std::vector<MdSolution> solve_md();

enum class FiberKind { I2, III, I0star, smooth_multiple };
std::string to_string(FiberKind kind);

struct FiberSpec {
  FiberKind kind = FiberKind::smooth_multiple;
  int euler = 0;
  int nodal_capacity = 0;

  friend bool operator==(const FiberSpec&, const FiberSpec&) = default;
};

FiberSpec fiber_spec(FiberKind kind);

struct FiberConfiguration {
  std::vector<FiberSpec> fibers;  // node-carrying fibres, sorted by kind
  int residual_euler = 0;         // budget left for fibres without nodes

  friend bool operator==(const FiberConfiguration&, const FiberConfiguration&) = default;
};

// Multisets of I2, III and I0* fibres with total Euler number at most
// `total_euler` and total nodal capacity exactly `nodes_required`.
std::vector<FiberConfiguration> fiber_budget(int total_euler, int nodes_required);
// Same search with the fibre kinds tried in the given order.
std::vector<FiberConfiguration> fiber_budget(int total_euler, int nodes_required,
                                             const std::vector<FiberKind>& search_order);

struct KrmTriple {
  int k = 0;
  int r = 0;
  int m = 0;

  friend auto operator<=>(const KrmTriple&, const KrmTriple&) = default;
};

struct FeasibilityReport {
  std::vector<KrmTriple> triples;  // sorted
  Derivation derivation;
};

// Numerical possibilities for k = rho - 2 disjoint nodal curves on a rational
// surface with 5 <= rho <= 10 and fewer than 8 curves in the code.
FeasibilityReport feasible_kr_pairs();

struct MaximalNodesReport {
  int rho = 0;
  int k = 0;
  bool survives = false;
  std::vector<int> feasible_r;
  std::string tag;
  Derivation derivation;
};

// Numerical test of k = rho - 1 disjoint nodal curves on a rational surface.
MaximalNodesReport verify_thm_mt(int rho);

struct SmallRhoCase {
  int k = 0;
  int rho = 0;
  std::string description;
};

std::vector<SmallRhoCase> small_rho_cases(int rho);

struct StandardExample {
  int rho = 0;
  int k = 0;
  BinaryCode code;
};

StandardExample standard_example_invariants(int n);

}  // namespace nodal
