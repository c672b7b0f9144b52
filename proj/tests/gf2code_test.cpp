#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nodalcodes/error.hpp"
#include "nodalcodes/gf2code.hpp"
#include "oracles.hpp"

using namespace nodal;

TEST_CASE("bit words round-trip through text, coordinate 0 leftmost") {
  auto w = BitWord::from_string("1100");
  CHECK(w.bits() == 0b0011u);
  CHECK(w.weight() == 2);
  CHECK(w.to_string() == "1100");
  CHECK_THROWS_AS(BitWord::from_string("10a1"), Error);
  CHECK_THROWS_AS(BitWord::from_string(std::string(33, '1')), Error);
}

TEST_CASE("from_rows gives the reduced echelon basis") {
  auto c = BinaryCode::from_rows({0b0011, 0b0110, 0b0101, 0}, 4);
  CHECK(c.dim() == 2);
  CHECK(c.rows() == oracle::rref({0b0011, 0b0110}));
  CHECK(c.contains(0b0101));
  CHECK_FALSE(c.contains(0b0001));
  CHECK_THROWS_AS(BinaryCode::from_rows({0b10000}, 4), Error);
}

TEST_CASE("codewords and weight enumerator agree with the spanned set") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = oracle::random_code(9, 4, rng);
    auto words = oracle::codewords(c);
    auto listed = c.codewords();
    CHECK(std::set<std::uint32_t>(listed.begin(), listed.end()) == words);
    CHECK(listed.size() == words.size());
    auto we = weight_enumerator(c);
    std::vector<std::uint64_t> expected(10, 0);
    for (auto w : words) ++expected[static_cast<std::size_t>(std::popcount(w))];
    CHECK(we.counts == expected);
    CHECK(we.total() == words.size());
  }
}

TEST_CASE("doubly-even and self-orthogonal tests agree with codeword checks") {
  std::mt19937 rng(5);
  int doubly_even_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto c = oracle::random_code(8, 1 + trial % 3, rng);
    auto words = oracle::codewords(c);
    bool de = true, so = true;
    for (auto a : words) {
      if (std::popcount(a) % 4 != 0) de = false;
      for (auto b : words) {
        if (std::popcount(a & b) % 2 != 0) so = false;
      }
    }
    CHECK(is_doubly_even(c) == de);
    CHECK(is_self_orthogonal(c) == so);
    doubly_even_seen += de;
  }
  CHECK(doubly_even_seen > 0);
}

TEST_CASE("DE(n) has length 2n, dimension n - 1 and weights divisible by 4") {
  for (int n = 1; n <= 10; ++n) {
    auto c = de(n);
    CHECK(c.length() == 2 * n);
    CHECK(c.dim() == n - 1);
    for (auto w : oracle::codewords(c)) CHECK(std::popcount(w) % 4 == 0);
    CHECK(recognize_de(c) == n);
  }
}

TEST_CASE("recognize_de survives padding and permutation") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 6; ++n) {
    auto padded = pad(de(n), 2 * n + 3);
    auto perm = CoordinatePermutation(oracle::random_permutation(padded.length(), rng));
    CHECK(recognize_de(apply(perm, padded)) == n);
  }
  CHECK(recognize_de(BinaryCode::zero(5)) == 1);
}

TEST_CASE("recognize_de rejects other codes") {
  CHECK_FALSE(recognize_de(simplex_code(3)).has_value());
  CHECK_FALSE(recognize_de(even_weight_code(6)).has_value());
  // doubled code of dimension n - 1 whose halves are not the even-weight code
  auto c = BinaryCode::from_rows({0b00001111, 0b00110011, 0b11000000}, 8);
  CHECK_FALSE(recognize_de(c).has_value());
}

TEST_CASE("simplex [7,3] has all nonzero weights 4") {
  auto c = simplex_code(3);
  CHECK(c.length() == 7);
  CHECK(c.dim() == 3);
  auto we = weight_enumerator(c);
  CHECK(we.counts[4] == 7);
  CHECK(we.counts[0] == 1);
}

TEST_CASE("reduce drops identically zero coordinates") {
  auto c = BinaryCode::from_rows({0b0101000, 0b0001010}, 7);
  auto r = reduce(c);
  CHECK(r.support == std::vector<int>{1, 3, 5});
  CHECK(r.code.length() == 3);
  CHECK(r.code.dim() == 2);
}

TEST_CASE("text form round-trips and rejects malformed input") {
  auto c = de(4);
  CHECK(parse_code_text(to_text(c)) == c);
  CHECK(parse_code_text("4 2\n1111\n0011\n") == BinaryCode::from_rows({0b1111, 0b1100}, 4));
  CHECK_THROWS_AS(parse_code_text("4 2\n1111\n"), Error);
  CHECK_THROWS_AS(parse_code_text("4 1\n111\n"), Error);
  CHECK_THROWS_AS(parse_code_text("4 1\n1111\n0000\n"), Error);
  CHECK_THROWS_AS(parse_code_text("x"), Error);
}

TEST_CASE("canonical form is the smallest column key over all permutations") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int length = 3 + trial % 5;
    auto c = oracle::random_code(length, 1 + trial % 4, rng);
    auto cf = canonical_form(c);
    CHECK(oracle::column_key(cf.code.rows(), length) == oracle::min_column_key(c));
    CHECK(apply(cf.permutation, c) == cf.code);
  }
}

TEST_CASE("equivalent agrees with brute force and returns a witness") {
  std::mt19937 rng(23);
  int positives = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int length = 4 + trial % 4;
    auto a = oracle::random_code(length, 2, rng);
    auto b = trial % 2 == 0 ? apply(CoordinatePermutation(oracle::random_permutation(length, rng)), a)
                            : oracle::random_code(length, 2, rng);
    auto perm = equivalent(a, b);
    CHECK(perm.has_value() == oracle::equivalent_by_permutations(a, b));
    if (perm) {
      CHECK(apply(*perm, a) == b);
      ++positives;
    }
  }
  CHECK(positives >= 40);
}

TEST_CASE("essential isomorphism ignores zero coordinates") {
  auto a = pad(de(3), 8);
  auto b = apply(CoordinatePermutation({7, 0, 6, 1, 5, 2, 4, 3}), pad(de(3), 8));
  CHECK(essentially_isomorphic(a, b));
  CHECK(essentially_isomorphic(de(3), pad(de(3), 9)));
  CHECK_FALSE(essentially_isomorphic(de(3), simplex_code(3)));
}

TEST_CASE("enumerate_codes matches labelled brute force up to permutation") {
  for (auto rule : {WeightRule::all_weights_4, WeightRule::doubly_even}) {
    for (int length = 1; length <= 8; ++length) {
      auto labelled = oracle::labelled_codes(length, [&](int w) { return weight_admissible(rule, w); });
      std::map<int, std::vector<BinaryCode>> by_dim;
      for (const auto& words : labelled) by_dim[oracle::dim_of(words)].push_back(oracle::to_code(words, length));
      const int top = by_dim.rbegin()->first;
      auto found = enumerate_codes(length, rule, 0, top + 1);
      std::map<int, std::size_t> found_by_dim;
      for (const auto& c : found) {
        ++found_by_dim[c.dim()];
        CHECK(canonical_form(c).code == c);
        CHECK(labelled.count(oracle::codewords(c)) == 1);
      }
      for (const auto& [dim, codes] : by_dim) {
        INFO("length " << length << " dim " << dim);
        CHECK(found_by_dim[dim] == oracle::count_classes(codes));
      }
      CHECK(found_by_dim[top + 1] == 0);
      CHECK(std::is_sorted(found.begin(), found.end()));
    }
  }
}

TEST_CASE("enumerate_codes rejects bad ranges") {
  CHECK_THROWS_AS(enumerate_codes(0, WeightRule::doubly_even, 0, 1), Error);
  CHECK_THROWS_AS(enumerate_codes(8, WeightRule::doubly_even, 3, 2), Error);
  CHECK_THROWS_AS(enumerate_codes(8, WeightRule::doubly_even, -1, 2), Error);
}
