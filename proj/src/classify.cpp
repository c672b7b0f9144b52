#include "nodalcodes/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nodalcodes/error.hpp"

namespace nodal {

using json = Json;

InvolutionData fixed_point_data(int K2_S, int rho_S, int D2, int KD) {
  InvolutionData d;
  d.K2_S = K2_S;
  d.rho_S = rho_S;
  d.D2 = D2;
  d.KD = KD;
  d.k = KD + 4;
  d.t = 2 - D2;
  if (d.k < 0) throw Error("fixed-point data gives a negative number of isolated fixed points");
  const int twice_rho_Y = rho_S + d.t + 2 * d.k;
  if (twice_rho_Y % 2 != 0) {
    throw Error("fixed-point data: rho(S) + t + 2k = " + std::to_string(twice_rho_Y) +
                " is odd, so rho(Y) is not an integer");
  }
  d.rho_Y = twice_rho_Y / 2;

  if (d.k != d.KD + 4 || d.t != 2 - d.D2 || d.rho_S + d.t != 2 * d.rho_Y - 2 * d.k) {
    throw Error("fixed-point data violates its defining identities");
  }
  return d;
}

FixedPointTraces fixed_point_traces(int k, int KD, int D2) {
  return {Rational(k - KD, 4), k + (-D2 - KD)};
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::i:
      return "i";
    case CaseLabel::ii:
      return "ii";
    case CaseLabel::iii:
      return "iii";
    case CaseLabel::iv:
      return "iv";
    case CaseLabel::v:
      return "v";
    case CaseLabel::contradiction:
      return "contradiction";
  }
  return "contradiction";
}

std::vector<MdSolution> solve_md() {
  // d m = m + 2d  <=>  (d - 1)(m - 2) = 2. With d >= 1 the left factor is
  // non-negative and must be a positive divisor of 2.
  std::vector<MdSolution> out;
  for (int a = 1; a <= 2; ++a) {
    if (2 % a != 0) continue;
    const int d = a + 1;
    const int m = 2 / a + 2;
    out.push_back({m, d, 2 * d - 1});
  }
  std::sort(out.begin(), out.end(), [](const MdSolution& x, const MdSolution& y) { return x.m < y.m; });
  return out;
}

std::string to_string(FiberKind kind) {
  switch (kind) {
    case FiberKind::I2:
      return "I2";
    case FiberKind::III:
      return "III";
    case FiberKind::I0star:
      return "I0star";
    case FiberKind::smooth_multiple:
      return "smooth_multiple";
  }
  return "smooth_multiple";
}

FiberSpec fiber_spec(FiberKind kind) {
  switch (kind) {
    case FiberKind::I2:
      return {kind, 2, 1};
    case FiberKind::III:
      return {kind, 3, 1};
    case FiberKind::I0star:
      return {kind, 6, 4};
    case FiberKind::smooth_multiple:
      return {kind, 0, 0};
  }
  return {};
}

namespace {

void fiber_search(const std::vector<FiberKind>& order, std::size_t index, int euler_left,
                  int nodes_left, std::vector<FiberSpec>& current,
                  std::vector<FiberConfiguration>& out) {
  if (nodes_left == 0) {
    FiberConfiguration config;
    config.fibers = current;
    std::sort(config.fibers.begin(), config.fibers.end(),
              [](const FiberSpec& a, const FiberSpec& b) { return a.kind < b.kind; });
    config.residual_euler = euler_left;
    out.push_back(std::move(config));
    return;
  }
  if (index == order.size()) return;
  const FiberSpec spec = fiber_spec(order[index]);
  // Take `count` fibres of this kind, then move on to the next kind.
  for (int count = 0;; ++count) {
    const int used_euler = count * spec.euler;
    const int used_nodes = count * spec.nodal_capacity;
    if (used_euler > euler_left || used_nodes > nodes_left) break;
    for (int i = 0; i < count; ++i) current.push_back(spec);
    fiber_search(order, index + 1, euler_left - used_euler, nodes_left - used_nodes, current, out);
    current.resize(current.size() - static_cast<std::size_t>(count));
  }
}

}  // namespace

std::vector<FiberConfiguration> fiber_budget(int total_euler, int nodes_required,
                                             const std::vector<FiberKind>& search_order) {
  if (total_euler < 0 || nodes_required < 0) throw Error("fiber_budget needs non-negative inputs");
  for (auto kind : search_order) {
    if (fiber_spec(kind).nodal_capacity == 0) throw Error("fiber_budget: search order holds a fibre without nodes");
  }
  std::vector<FiberConfiguration> out;
  std::vector<FiberSpec> current;
  fiber_search(search_order, 0, total_euler, nodes_required, current, out);
  auto key = [](const FiberConfiguration& c) {
    std::vector<int> kinds;
    for (const auto& f : c.fibers) kinds.push_back(static_cast<int>(f.kind));
    return kinds;
  };
  std::sort(out.begin(), out.end(),
            [&](const FiberConfiguration& a, const FiberConfiguration& b) { return key(a) < key(b); });
  return out;
}

std::vector<FiberConfiguration> fiber_budget(int total_euler, int nodes_required) {
  return fiber_budget(total_euler, nodes_required, {FiberKind::I2, FiberKind::III, FiberKind::I0star});
}

FeasibilityReport feasible_kr_pairs() {
  FeasibilityReport report;
  std::set<KrmTriple> triples;
  for (int rho = 5; rho <= 10; ++rho) {
    const int k = rho - 2;
    const int r_min = isotropic_bound(k, rho);
    // m < 8 and weights divisible by 4 leave weight 4 as the only option.
    const auto codes = enumerate_codes(k, WeightRule::all_weights_4, r_min, k);
    json found = json::array();
    for (const auto& code : codes) {
      const int m = reduce(code).code.length();
      if (m >= 8) continue;
      triples.insert({k, code.dim(), m});
      found.push_back({{"r", code.dim()}, {"m", m}});
    }
    report.derivation.push_back(
        {"codes of length k = rho - 2 with all weights 4 and r >= k - floor(rho/2)",
         "isotropy of the curve classes in Pic mod 2",
         {{"rho", rho}, {"k", k}, {"r_min", r_min}, {"codes", found}}});
  }
  report.triples.assign(triples.begin(), triples.end());
  return report;
}

MaximalNodesReport verify_thm_mt(int rho) {
  if (rho < 2 || rho > 14) throw Error("verify_thm_mt needs 2 <= rho <= 14");
  MaximalNodesReport report;
  report.rho = rho;
  report.k = rho - 1;
  const int k = report.k;
  const int r_min = isotropic_bound(k, rho);
  report.derivation.push_back({"lower bound on dim V", "isotropy of the curve classes in Pic mod 2",
                               {{"k", k}, {"rho", rho}, {"r_min", r_min}}});

  std::optional<int> simplex_like_m;
  for (int r = r_min; r <= k; ++r) {
    if (r == 0) {
      report.feasible_r.push_back(0);
      report.derivation.push_back({"the zero code is admissible", "no constraint for r = 0", {{"r", 0}}});
      continue;
    }
    const int m_min = min_m_for_r(r);
    bool ok = false;
    json why = {{"r", r}, {"m_min", m_min}};
    // m >= 8 forces DE(n) with m = 2n and r = n - 1.
    const int de_m = 2 * (r + 1);
    if (de_m >= 8 && de_m >= m_min && de_m <= k) {
      ok = true;
      why["de_n"] = r + 1;
    }
    // m < 8: all weights equal 4.
    if (m_min < 8 && r <= 7) {
      for (const auto& code : enumerate_codes(std::min(k, 7), WeightRule::all_weights_4, r, r)) {
        const int m = reduce(code).code.length();
        if (m >= m_min && m < 8) {
          ok = true;
          why["m"] = m;
          simplex_like_m = m;
        }
      }
    }
    why["feasible"] = ok;
    report.derivation.push_back({"existence of a doubly-even code of dimension r in length k",
                                 "ruled cover bound on m; DE(n) structure when m >= 8", why});
    if (ok) report.feasible_r.push_back(r);
  }

  report.survives = !report.feasible_r.empty();
  if (!report.survives) {
    report.tag = "eliminated";
  } else if (rho == 2) {
    report.tag = "F2";
    report.derivation.push_back({"rho = 2 gives K^2 = 8 and Y = F2", "rational surfaces with rho = 2",
                                 {{"K2_Y", 10 - rho}}});
  } else {
    report.tag = "numerically feasible, geometrically excluded";
    // Double cover over a weight-4 word of V, then blow down the 4
    // exceptional curves; the remaining curves lift to pairs.
    if (simplex_like_m && report.feasible_r == std::vector<int>{3}) {
      const auto y = invariants_with_pg_q_zero(rho, Kodaira::minus_infinity);
      const auto cover = cover_invariants(y, {1, 4});
      const int rho_cover = cover.cover.c2 - 2;
      const int rho_contracted = rho_cover - 4;
      const int lifted_curves = 2 * (*simplex_like_m - 4);
      report.derivation.push_back(
          {"double cover branched on an even set of 4 curves, then blow down its 4 (-1)-curves",
           "cover invariants with r = 1, m = 4",
           {{"K2_cover", cover.cover.K2},
            {"chi_cover", cover.cover.chi},
            {"rho_cover", rho_cover},
            {"rho_after_blowdown", rho_contracted},
            {"disjoint_nodal_curves", lifted_curves},
            {"violates_k_le_rho_minus_1", lifted_curves > rho_contracted - 1}}});
    }
  }
  return report;
}

std::vector<SmallRhoCase> small_rho_cases(int rho) {
  switch (rho) {
    case 2:
      return {{0, 2, "F_e, e != 2"}};
    case 3:
      return {{1, 3, "blow-up of F_2 at a point off the negative section; the nodal curve is the pullback of the negative section"},
              {1, 3, "blow-up of F_1 at a point of the negative section; the nodal curve is the strict transform of the negative section"}};
    case 4:
      return {{2, 4, "standard example with k = 2"},
              {2, 4, "blow-up of F_2 at x1 off the negative section and x2 infinitely near x1; the nodal curves are the pullback of the negative section and the strict transform of the first exceptional curve"}};
    default:
      throw Error("small_rho_cases needs 2 <= rho <= 4");
  }
}

StandardExample standard_example_invariants(int n) {
  if (n < 1) throw Error("standard example needs n >= 1");
  return {2 * n + 2, 2 * n, de(n)};
}

namespace {

// Traces of an involution on H^2 of rank rho fixing the canonical class: one
// eigenvalue is +1, the others are +-1.
std::vector<int> admissible_traces(int rho) {
  std::vector<int> out;
  for (int minus = rho - 1; minus >= 0; --minus) out.push_back(rho - 2 * minus);
  return out;
}

// k = rho(Y) - 1 is impossible: kappa >= 0 allows at most rho - 2 disjoint
// nodal curves; a rational surface reaches rho - 1 only as F2 (rho = 2).
bool too_many_nodes(int k, int rho_Y, Derivation& derivation) {
  const auto y = invariants_with_pg_q_zero(rho_Y, Kodaira::unknown);
  const int miyaoka = miyaoka_max_nodes(y.K2, y.c2).max_nodes;
  const bool kappa_nonneg_fails = k > rho_Y - 2;
  bool rational_fails = k > rho_Y - 1;
  if (k == rho_Y - 1) rational_fails = !(rho_Y == 2);
  derivation.push_back({"Y carries k disjoint nodal curves with k >= rho(Y) - 1",
                        "node bounds for p_g = q = 0 surfaces",
                        {{"k", k},
                         {"rho_Y", rho_Y},
                         {"K2_Y", y.K2},
                         {"max_nodes_kappa_nonneg", rho_Y - 2},
                         {"miyaoka_bound", miyaoka},
                         {"excluded_if_kappa_nonneg", kappa_nonneg_fails},
                         {"excluded_if_rational", rational_fails}}});
  return kappa_nonneg_fails && rational_fails;
}

// K_S ~ r D with r^2 D^2 = K^2 and r > 0, so K.D = r D^2.
std::optional<int> canonical_multiple(int K2, int D2) {
  if (D2 <= 0) return std::nullopt;
  if (K2 % D2 != 0) return std::nullopt;
  const int sq = K2 / D2;
  int r = 0;
  while ((r + 1) * (r + 1) <= sq) ++r;
  if (r * r != sq) return std::nullopt;
  return r;
}

}  // namespace

InvolutionClassification classify_involution(int K2_S) {
  if (K2_S != 8 && K2_S != 9) throw Error("classify_involution supports K^2 = 8 or 9 only");
  InvolutionClassification out;
  out.K2_S = K2_S;
  auto& der = out.derivation;

  // Minimal, general type, p_g = q = 0.
  const auto s = invariants_with_pg_q_zero(12 - K2_S - 2, Kodaira::two);
  const int rho_S = *s.rho;
  der.push_back({"rho(S) = c2(S) - 2 with c2 = 12 - K^2", "Noether formula with p_g = q = 0",
                 {{"K2_S", K2_S}, {"c2_S", s.c2}, {"rho_S", rho_S}}});

  const auto traces = admissible_traces(rho_S);
  der.push_back({"trace t of the involution on H^2 (K_S is invariant)",
                 "eigenvalues +-1 with K_S in the +1 eigenspace", {{"t_values", traces}}});

  std::vector<InvolutionCase> found;
  for (int t : traces) {
    const int D2 = 2 - t;
    der.push_back({"D^2 = 2 - t", "topological and holomorphic fixed-point formulas", {{"t", t}, {"D2", D2}}});

    if (D2 < 0) throw Error("classify_involution: trace exceeds 2");
    if (D2 > 0) {
      // The invariant part of H^2 is one-dimensional here, so K_S ~ r D.
      if ((rho_S + t) / 2 != 1) throw Error("classify_involution: unexpected invariant rank");
      const auto r = canonical_multiple(K2_S, D2);
      if (!r) {
        der.push_back({"no rational r with r^2 D^2 = K^2", "K_S numerically proportional to D",
                       {{"D2", D2}, {"K2_S", K2_S}}});
        continue;
      }
      const int KD = *r * D2;
      der.push_back({"K_S ~ r D", "invariant part of H^2 is spanned by K_S",
                     {{"r", *r}, {"KD", KD}}});
      const auto data = fixed_point_data(K2_S, rho_S, D2, KD);
      const int K2_Y = 10 - data.rho_Y;
      der.push_back({"k = K_S.D + 4 and rho(S) + t = 2 rho(Y) - 2k", "fixed-point formulas",
                     {{"k", data.k}, {"t", data.t}, {"rho_Y", data.rho_Y}, {"K2_Y", K2_Y}}});
      InvolutionCase c;
      c.label = CaseLabel::contradiction;
      c.k = data.k;
      c.rho_Y = data.rho_Y;
      c.K2_Y = K2_Y;
      c.description = "t = " + std::to_string(t) + " branch: k = " + std::to_string(data.k) +
                      " disjoint nodal curves on Y with rho(Y) = " + std::to_string(data.rho_Y);
      if (!too_many_nodes(data.k, data.rho_Y, der)) {
        throw Error("classify_involution: t = " + std::to_string(t) + " branch is not excluded");
      }
      out.eliminated.push_back(c);
      continue;
    }

    // t = rho(S): the involution acts trivially on H^2 and D^2 = 0.
    {
      const auto data = fixed_point_data(K2_S, rho_S, 0, 0);
      InvolutionCase c;
      c.label = CaseLabel::i;
      c.k = data.k;
      c.rho_Y = data.rho_Y;
      c.K2_Y = 10 - data.rho_Y;
      c.kodaira_Y = Kodaira::two;
      c.description = "D = 0; Y minimal of general type with p_g = 0, K^2 = " + std::to_string(c.K2_Y);
      der.push_back({"D = 0", "cover unramified in codimension 1 preserves general type",
                     {{"k", c.k}, {"rho_Y", c.rho_Y}, {"K2_Y", c.K2_Y}}});
      found.push_back(c);
    }

    // D != 0: K_S.D = 2m with m > 0, k = 2m + 4, rho(Y) = k + 2.
    // kappa(Y) >= 0: Y is minimal, so K_Y^2 = 8 - k >= 0.
    for (int m = 1;; ++m) {
      const auto data = fixed_point_data(K2_S, rho_S, 0, 2 * m);
      const int K2_Y = 10 - data.rho_Y;
      if (K2_Y < 0) break;
      const auto y = invariants_with_pg_q_zero(data.rho_Y, Kodaira::unknown);
      const int bound = miyaoka_max_nodes(y.K2, y.c2).max_nodes;
      InvolutionCase c;
      c.k = data.k;
      c.rho_Y = data.rho_Y;
      c.K2_Y = K2_Y;
      json values = {{"m", m}, {"k", c.k}, {"rho_Y", c.rho_Y}, {"K2_Y", K2_Y}, {"miyaoka_bound", bound}};
      if (bound < c.k) {
        der.push_back({"kappa(Y) >= 0 branch violates the node bound", "Miyaoka inequality", values});
        continue;
      }
      if (K2_Y > 0) {
        c.label = CaseLabel::ii;
        c.kodaira_Y = Kodaira::two;
        c.description = "Y minimal of general type with p_g = 0, K^2 = " + std::to_string(K2_Y);
      } else {
        // K_Y^2 = 0, p_g = q = 0: Enriques is impossible since K_Y = 0 would
        // force K_S.D = 0.
        const auto fibres = fiber_budget(y.c2, c.k);
        json configs = json::array();
        for (const auto& f : fibres) {
          json kinds = json::array();
          for (const auto& spec : f.fibers) kinds.push_back(to_string(spec.kind));
          configs.push_back({{"fibers", kinds}, {"residual_euler", f.residual_euler}});
        }
        values["fiber_configurations"] = configs;
        if (fibres.size() != 1) throw Error("classify_involution: elliptic case is not unique");
        c.label = CaseLabel::iii;
        c.kodaira_Y = Kodaira::one;
        c.description = "Y minimal properly elliptic with p_g = q = 0 and two I0* fibres; constant moduli";
      }
      der.push_back({"kappa(Y) >= 0 branch", "minimality and K_Y^2 >= 0", values});
      found.push_back(c);
    }

    // Y rational: rho(Y) = k + 2 >= 8 makes Y the standard example, and the
    // branch curve yields d m = m + 2d.
    for (const auto& sol : solve_md()) {
      const auto data = fixed_point_data(K2_S, rho_S, 0, 2 * sol.m);
      const auto example = standard_example_invariants(data.k / 2);
      if (example.rho != data.rho_Y) throw Error("classify_involution: standard example mismatch");
      InvolutionCase c;
      c.label = found.size() == 3 ? CaseLabel::iv : CaseLabel::v;
      c.k = data.k;
      c.rho_Y = data.rho_Y;
      c.K2_Y = 10 - data.rho_Y;
      c.kodaira_Y = Kodaira::minus_infinity;
      c.genus_of_pencil = sol.genus;
      c.md = std::make_pair(sol.m, sol.d);
      c.description = "Y rational standard example with rho = " + std::to_string(c.rho_Y) +
                      "; pencil of hyperelliptic curves of genus " + std::to_string(sol.genus);
      der.push_back({"rational branch: d m = m + 2d", "standard example with code DE(k/2)",
                     {{"m", sol.m}, {"d", sol.d}, {"k", c.k}, {"rho_Y", c.rho_Y}, {"genus", sol.genus}}});
      found.push_back(c);
    }
  }

  if (found.empty()) {
    if (out.eliminated.empty()) throw Error("classify_involution: no branch examined");
    out.contradiction = true;
    const auto& last = out.eliminated.back();
    der.push_back({"no involution exists", "every branch is contradictory",
                   {{"k", last.k}, {"rho_Y", last.rho_Y}, {"K2_Y", last.K2_Y}}});
  } else {
    out.cases = std::move(found);
  }
  return out;
}

}  // namespace nodal
