#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nodalcodes/error.hpp"
#include "nodalcodes/gf2code.hpp"
#include "nodalcodes/lattice.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

std::vector<std::string> labels(const RootSystemReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.components) out.push_back(c.label());
  return out;
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size() + b.size();
  IntMatrix out(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[a.size() + i][a.size() + j] = b[i][j];
  return out;
}

}  // namespace

TEST_CASE("Gram matrix validation") {
  CHECK_THROWS_AS(GramLattice({{2, 1}, {0, 2}}, Scaling::unscaled), Error);
  CHECK_THROWS_AS(GramLattice({{2, 1}}, Scaling::unscaled), Error);
  CHECK_THROWS_AS(GramLattice({{0}}, Scaling::unscaled), Error);
  CHECK(parse_scaling("half") == Scaling::half);
  CHECK_THROWS_AS(parse_scaling("double"), Error);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    CHECK(determinant(m) == oracle::cofactor_det(m));
  }
  CHECK(determinant({}) == 1);
}

TEST_CASE("construction A: Gram matrix is the ambient basis product") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + trial % 7;
    auto code = oracle::random_even_code(k, 1 + trial % 3, rng);
    for (auto scaling : {Scaling::unscaled, Scaling::half}) {
      if (scaling == Scaling::half) {
        const auto list = enumerate_codes(k, WeightRule::doubly_even, 0, k);
        code = pad(list[static_cast<std::size_t>(trial) % list.size()], k);
      }
      auto lat = construction_a(code, scaling);
      const auto& b = lat.ambient_basis();
      REQUIRE(b.size() == static_cast<std::size_t>(k));
      const std::int64_t factor = scaling == Scaling::unscaled ? 2 : 1;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          std::int64_t dot = 0;
          for (int t = 0; t < k; ++t) dot += b[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] * b[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
          CHECK(lat.doubled_gram()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == factor * dot);
        }
      }
      // index 2^(k - r) in Z^k
      auto det_b = oracle::cofactor_det(b);
      CHECK(std::llabs(det_b) == (1LL << (k - code.dim())));
      for (const auto& row : b) {
        std::uint32_t parity = 0;
        for (int t = 0; t < k; ++t)
          if (row[static_cast<std::size_t>(t)] % 2 != 0) parity |= 1u << t;
        CHECK(code.contains(parity));
      }
    }
  }
}

TEST_CASE("root counts agree with a box search in Z^k") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 24; ++trial) {
    const int k = 2 + trial % 6;
    auto code = oracle::random_even_code(k, 1 + trial % 3, rng);
    auto lat = construction_a(code, Scaling::unscaled);
    INFO("k=" << k << " code=" << to_text(code));
    CHECK(roots(lat).size() == oracle::box_root_count(code, Scaling::unscaled));
  }
  // scaled lattices need doubly-even codes; take every one up to length 7
  for (int k = 1; k <= 7; ++k) {
    for (const auto& code : enumerate_codes(k, WeightRule::doubly_even, 0, k)) {
      auto lat = construction_a(code, Scaling::half);
      INFO("k=" << k << " code=" << to_text(code));
      CHECK(roots(lat).size() == oracle::box_root_count(code, Scaling::half));
    }
  }
  CHECK_THROWS_AS(construction_a(even_weight_code(4), Scaling::half), Error);
  CHECK_THROWS_AS(construction_a(BinaryCode::from_rows({0b111}, 3), Scaling::unscaled), Error);
}

TEST_CASE("vectors_of_norm agrees with a coefficient box search") {
  for (auto type : {RootComponent{'A', 3}, RootComponent{'D', 4}, RootComponent{'A', 5}}) {
    auto lat = root_lattice(type);
    const int n = lat.rank();
    for (std::int64_t norm : {4, 8}) {
      std::size_t count = 0;
      std::vector<std::int64_t> x(static_cast<std::size_t>(n), -4);
      while (true) {
        if (lat.doubled_inner(x, x) == norm) ++count;
        int i = 0;
        while (i < n && x[static_cast<std::size_t>(i)] == 4) x[static_cast<std::size_t>(i++)] = -4;
        if (i == n) break;
        ++x[static_cast<std::size_t>(i)];
      }
      auto found = vectors_of_norm(lat, norm);
      CHECK(std::is_sorted(found.begin(), found.end()));
      for (const auto& v : found) CHECK(lat.doubled_inner(v, v) == norm);
      // norms 2 and 4 in these types keep simple-root coefficients within [-4, 4]
      CHECK(found.size() == count);
    }
  }
}

TEST_CASE("root lattices identify as themselves with the right discriminant") {
  struct Row {
    RootComponent type;
    Rational disc;
  };
  const std::vector<Row> rows = {{{'A', 1}, 2}, {{'A', 2}, 3}, {{'A', 5}, 6},  {{'D', 4}, 4}, {{'D', 5}, 4},
                                 {{'D', 7}, 4}, {{'E', 6}, 3}, {{'E', 7}, 2}, {{'E', 8}, 1}};
  for (const auto& row : rows) {
    auto lat = root_lattice(row.type);
    auto report = identify_root_system(lat);
    INFO(row.type.label());
    CHECK(report.components == std::vector<RootComponent>{row.type});
    CHECK(report.root_count == row.type.root_count());
    CHECK(report.full_rank);
    CHECK(report.root_index == 1);
    CHECK(discriminant(lat) == row.disc);
  }
}

TEST_CASE("orthogonal sums split into components") {
  auto a2 = root_lattice({'A', 2}).doubled_gram();
  auto d4 = root_lattice({'D', 4}).doubled_gram();
  auto a1 = root_lattice({'A', 1}).doubled_gram();
  auto report = identify_root_system(GramLattice(block_sum(block_sum(d4, a1), a2), Scaling::unscaled));
  CHECK(labels(report) == std::vector<std::string>{"A1", "A2", "D4"});
  CHECK(report.root_count == 2 + 6 + 24);
}

TEST_CASE("even-weight code, unscaled, gives D_n") {
  for (int n = 3; n <= 6; ++n) {
    auto report = identify_root_system(construction_a(even_weight_code(n), Scaling::unscaled));
    CHECK(report.root_count == 2 * n * (n - 1));
    if (n == 3) {
      CHECK(labels(report) == std::vector<std::string>{"A3"});  // D3 = A3
    } else {
      CHECK(labels(report) == std::vector<std::string>{"D" + std::to_string(n)});
    }
  }
}

TEST_CASE("DE(n), scaled, gives D_2n; simplex [7,3] gives E7") {
  for (int n = 2; n <= 4; ++n) {
    auto lat = construction_a(de(n), Scaling::half);
    auto report = identify_root_system(lat);
    CHECK(labels(report) == std::vector<std::string>{"D" + std::to_string(2 * n)});
    CHECK(report.root_count == 2 * (2 * n) * (2 * n - 1));
    CHECK(discriminant(lat) == 4);
  }
  auto lat = construction_a(simplex_code(3), Scaling::half);
  auto report = identify_root_system(lat);
  CHECK(labels(report) == std::vector<std::string>{"E7"});
  CHECK(report.root_count == 126);
  CHECK(discriminant(lat) == 2);
}

TEST_CASE("no roots, and partial rank") {
  CHECK(labels(identify_root_system(GramLattice({{4, 0}, {0, 4}}, Scaling::unscaled))) ==
        std::vector<std::string>{"A1", "A1"});
  CHECK(roots(GramLattice({{8}}, Scaling::unscaled)).empty());
  auto report = identify_root_system(GramLattice({{8, 0}, {0, 8}}, Scaling::unscaled));
  CHECK(report.root_count == 0);
  CHECK(report.components.empty());
  CHECK_FALSE(report.full_rank);
  auto partial = identify_root_system(GramLattice(block_sum(root_lattice({'A', 2}).doubled_gram(), {{6}}), Scaling::unscaled));
  CHECK(labels(partial) == std::vector<std::string>{"A2"});
  CHECK_FALSE(partial.full_rank);
}

TEST_CASE("discriminant and roots are invariant under unimodular change of basis") {
  std::mt19937 rng(31);
  std::vector<GramLattice> lattices = {construction_a(de(3), Scaling::half), construction_a(simplex_code(3), Scaling::half),
                                       root_lattice({'D', 5}), root_lattice({'A', 4})};
  for (const auto& lat : lattices) {
    const auto disc = discriminant(lat);
    const auto report = identify_root_system(lat);
    for (int t = 0; t < 20; ++t) {
      auto u = oracle::random_unimodular(lat.rank(), rng);
      REQUIRE(std::llabs(oracle::cofactor_det(u)) == 1);
      GramLattice moved(oracle::congruent(lat.doubled_gram(), u), lat.scaling());
      CHECK(discriminant(moved) == disc);
      if (t < 3) {
        auto r = identify_root_system(moved);
        CHECK(r.components == report.components);
        CHECK(r.root_count == report.root_count);
      }
    }
  }
}

TEST_CASE("root search refuses large rank") {
  IntMatrix g(kMaxRootSearchRank + 1, std::vector<std::int64_t>(kMaxRootSearchRank + 1, 0));
  for (std::size_t i = 0; i < g.size(); ++i) g[i][i] = 4;
  CHECK_THROWS_AS(roots(GramLattice(g, Scaling::unscaled)), Error);
}
