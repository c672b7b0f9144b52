// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nodalcodes/classify.hpp"
#include "nodalcodes/covers.hpp"
#include "nodalcodes/gf2code.hpp"
#include "nodalcodes/lattice.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

std::string components(const RootSystemReport& r) {
  std::string s;
  for (const auto& c : r.components) s += (s.empty() ? "" : "+") + c.label();
  return s.empty() ? "none" : s;
}

void c1_de_family(Outcome& o) {
  for (int n = 1; n <= 10; ++n) {
    auto c = de(n);
    bool weights = true;
    for (auto w : c.codewords()) weights = weights && std::popcount(w) % 4 == 0;
    o.expect(c.length() == 2 * n && c.dim() == n - 1 && weights && recognize_de(c) == n,
             "DE(" + std::to_string(n) + ")");
  }
  o.notes << " n=1..10";
}

void c2_root_lattices(Outcome& o) {
  for (int n = 3; n <= 5; ++n) {
    auto r = identify_root_system(construction_a(even_weight_code(n), Scaling::unscaled));
    const std::string want = "D" + std::to_string(n);
    // D3 and A3 are the same root system
    const bool type_ok = components(r) == want || (n == 3 && components(r) == "A3");
    o.expect(type_ok && r.root_count == 2 * n * (n - 1), want);
    o.notes << " " << want << (n == 3 ? "(=" + components(r) + ")" : "") << ":" << r.root_count;
  }
  for (int n = 2; n <= 3; ++n) {
    auto r = identify_root_system(construction_a(de(n), Scaling::half));
    const std::string want = "D" + std::to_string(2 * n);
    o.expect(components(r) == want && r.root_count == 2 * (2 * n) * (2 * n - 1), want);
    o.notes << " " << components(r) << ":" << r.root_count;
  }
  auto lat = construction_a(simplex_code(3), Scaling::half);
  auto r = identify_root_system(lat);
  const auto disc = discriminant(lat);
  o.expect(components(r) == "E7" && r.root_count == 126 && disc == 2, "E7");
  o.notes << " " << components(r) << ":" << r.root_count << " disc=" << disc;
}

void c3_cover_invariants(Outcome& o) {
  auto y = [](int K2) {
    SurfaceInvariants s;
    s.chi = 1;
    s.K2 = K2;
    s.c2 = 12 - K2;
    return s;
  };
  auto a = cover_invariants(y(4), {1, 4}).contracted;
  auto b = cover_invariants(y(0), {3, 7}).contracted;
  o.expect(a.K2 == 8 && a.chi == 1, "(1,4,1,4)");
  o.expect(b.K2 == 0 && b.chi == 1, "(1,0,3,7)");
  int grid = 0;
  for (int K2 = -8; K2 <= 9; ++K2) {
    for (int r = 1; r <= 6; ++r) {
      for (int m = 1; m <= 16; ++m) {
        if ((m << r) % 8 != 0) continue;
        auto out = cover_invariants(y(K2), {r, m});
        o.expect(12 * out.cover.chi == out.cover.K2 + out.cover.c2, "Noether Z");
        o.expect(12 * out.contracted.chi == out.contracted.K2 + out.contracted.c2, "Noether Z_bar");
        ++grid;
      }
    }
  }
  o.notes << " K2_Zbar=" << a.K2 << "," << b.K2 << " grid=" << grid;
}

void c4_min_m(Outcome& o) {
  for (int r = 4; r <= 20; ++r) o.expect(min_m_for_r(r) == 8, "r=" + std::to_string(r));
  o.expect(min_m_for_r(3) == 7, "r=3");
  o.notes << " min_m(3)=" << min_m_for_r(3) << " min_m(4..20)=8";
}

void c5_feasibility(Outcome& o) {
  auto report = feasible_kr_pairs();
  const std::vector<KrmTriple> want = {{4, 1, 4}, {6, 2, 6}, {7, 3, 7}, {8, 3, 7}};
  o.expect(report.triples == want, "feasible_kr_pairs");

  std::set<KrmTriple> brute;
  for (int rho = 5; rho <= 10; ++rho) {
    const int k = rho - 2;
    const int r_min = std::max(0, k - rho / 2);
    for (const auto& words : oracle::labelled_codes(k, [](int w) { return w == 4; })) {
      const int m = oracle::support_size(words);
      if (words.size() > 1 && oracle::dim_of(words) >= r_min && m < 8) brute.insert({k, oracle::dim_of(words), m});
    }
  }
  o.expect(std::vector<KrmTriple>(brute.begin(), brute.end()) == want, "labelled oracle");
  o.expect(enumerate_codes(5, WeightRule::all_weights_4, 2, 2).empty(), "L5 d2 empty");
  o.expect(enumerate_codes(8, WeightRule::all_weights_4, 4, 4).empty(), "L8 d4 empty");
  o.notes << " triples=";
  for (const auto& t : report.triples) o.notes << "(" << t.k << "," << t.r << "," << t.m << ")";
}

void c6_involutions(Outcome& o) {
  auto nine = classify_involution(9);
  const auto& v = nine.derivation.back().values;
  o.expect(nine.contradiction && v["k"] == 7 && v["rho_Y"] == 8, "K2=9");
  auto eight = classify_involution(8);
  const std::vector<std::array<int, 3>> want = {{4, 6, 4}, {6, 8, 2}, {8, 10, 0}, {10, 12, -2}, {12, 14, -4}};
  o.expect(eight.cases.size() == 5, "five cases");
  for (std::size_t i = 0; i < std::min<std::size_t>(5, eight.cases.size()); ++i) {
    const auto& c = eight.cases[i];
    o.expect(c.k == want[i][0] && c.rho_Y == want[i][1] && c.K2_Y == want[i][2], "case " + to_string(c.label));
  }
  if (eight.cases.size() == 5) {
    o.expect(eight.cases[3].genus_of_pencil == 5 && eight.cases[4].genus_of_pencil == 3, "genera");
  }
  o.expect(eight.eliminated.size() == 1 && eight.eliminated[0].k == 8 && eight.eliminated[0].rho_Y == 9 &&
               eight.eliminated[0].K2_Y == 1,
           "t=0 branch");
  o.notes << " K2=9: k=" << v["k"] << " rho_Y=" << v["rho_Y"] << "; K2=8: " << eight.cases.size() << " cases";
}

void c7_fibers(Outcome& o) {
  auto configs = fiber_budget(12, 8);
  bool ok = configs.size() == 1 && configs[0].fibers.size() == 2;
  if (ok) {
    for (const auto& f : configs[0].fibers) ok = ok && f.kind == FiberKind::I0star;
  }
  o.expect(ok, "{I0*, I0*}");
  o.notes << " " << configs.size() << " multiset(s)";
}

void c8_md(Outcome& o) {
  auto sols = solve_md();
  std::vector<std::pair<int, int>> got;
  for (const auto& s : sols) got.emplace_back(s.m, s.d);
  o.expect(got == std::vector<std::pair<int, int>>{{3, 3}, {4, 2}}, "solutions");
  o.expect(got == oracle::md_solutions(1000), "brute force <= 1000");
  o.notes << " (3,3),(4,2)";
}

void c9_miyaoka(Outcome& o) {
  const std::vector<std::array<int, 3>> rows = {{0, 12, 8}, {4, 8, 4}, {2, 10, 6}};
  for (const auto& [K2, c2, want] : rows) {
    const int got = miyaoka_max_nodes(K2, c2).max_nodes;
    const auto s = invariants_with_pg_q_zero(10 - K2, Kodaira::unknown);
    o.expect(got == want && s.c2 == c2 && got == *s.rho - 2, "(" + std::to_string(K2) + "," + std::to_string(c2) + ")");
    o.notes << " " << got;
  }
}

void c10_properties(Outcome& o) {
  std::mt19937 rng(20241016);
  int orbit = 0;
  for (int t = 0; t < 100; ++t) {
    const int length = 1 + t % 8;
    auto c = oracle::random_code(length, 1 + t % std::min(length, 5), rng);
    auto p = CoordinatePermutation(oracle::random_permutation(length, rng));
    orbit += canonical_form(apply(p, c)).code == canonical_form(c).code;
  }
  o.expect(orbit == 100, "orbit invariance");

  std::size_t codes = 0;
  bool so = true;
  for (int length = 1; length <= 10; ++length) {
    for (const auto& c : enumerate_codes(length, WeightRule::doubly_even, 0, length)) {
      ++codes;
      so = so && is_doubly_even(c) && is_self_orthogonal(c);
    }
  }
  o.expect(so, "doubly-even => self-orthogonal");

  int lattices = 0;
  bool disc_ok = true;
  std::vector<GramLattice> list = {construction_a(de(3), Scaling::half), construction_a(de(4), Scaling::half),
                                   construction_a(simplex_code(3), Scaling::half),
                                   construction_a(even_weight_code(5), Scaling::unscaled), root_lattice({'E', 8})};
  for (const auto& lat : list) {
    const auto disc = discriminant(lat);
    for (int t = 0; t < 20; ++t) {
      auto u = oracle::random_unimodular(lat.rank(), rng);
      disc_ok = disc_ok && discriminant(GramLattice(oracle::congruent(lat.doubled_gram(), u), lat.scaling())) == disc;
    }
    ++lattices;
  }
  o.expect(disc_ok, "discriminant invariance");
  o.notes << " orbit=" << orbit << "/100 codes<=10:" << codes << " lattices=" << lattices << "x20";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no stated limit
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "DE family", 1, c1_de_family},
      {2, "root lattices", 5, c2_root_lattices},
      {3, "cover invariants", 0, c3_cover_invariants},
      {4, "min m for r", 0, c4_min_m},
      {5, "feasibility list", 60, c5_feasibility},
      {6, "involutions", 0, c6_involutions},
      {7, "fiber budget", 1, c7_fibers},
      {8, "diophantine m, d", 0, c8_md},
      {9, "Miyaoka bound", 0, c9_miyaoka},
      {10, "property suites", 30, c10_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) o.expect(false, "time limit " + std::to_string(c.limit_s) + " s");
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << ")  " << std::fixed
              << std::setprecision(3) << secs << " s" << o.notes.str() << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
