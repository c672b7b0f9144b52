// Canonical form under coordinate permutations.
//
// A permutation of the columns of the generator matrix followed by row
// reduction yields an RREF matrix. We pick the one whose sequence of columns
// is lexicographically smallest, each column read as an integer with row i in
// bit i. RREF columns depend only on the column prefix, so the smallest
// sequence can be built greedily: zero columns first, then for each pivot
// e_s = 1 << s the columns that fall into the span of the pivots so far, in
// increasing order. The only branching is the choice of pivot column, and all
// partial choices at one depth share the same prefix, so a level-synchronous
// search keeps only the choices that minimise the next block.

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "nodalcodes/error.hpp"
#include "nodalcodes/gf2code.hpp"

namespace nodal {

namespace {

struct ColumnGroup {
  std::uint32_t value;       // column of the input generator matrix
  std::vector<int> members;  // input coordinates holding that column, ascending
};

// Span of chosen pivot columns, kept reduced by leading bit together with the
// combination of pivots each reduced vector represents.
struct PivotSpan {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> basis;  // (vector, pivot mask)

  // Coordinates of v w.r.t. the pivots, or nullopt if v is outside the span.
  std::optional<std::uint32_t> coordinates(std::uint32_t v) const {
    std::uint32_t coord = 0;
    for (const auto& [vec, mask] : basis) {
      if (v & (vec & (~vec + 1))) {
        v ^= vec;
        coord ^= mask;
      }
    }
    if (v != 0) return std::nullopt;
    return coord;
  }

  void add(std::uint32_t v, int index) {
    std::uint32_t coord = std::uint32_t{1} << index;
    for (const auto& [vec, mask] : basis) {
      if (v & (vec & (~vec + 1))) {
        v ^= vec;
        coord ^= mask;
      }
    }
    const std::uint32_t lead = v & (~v + 1);
    for (auto& [vec, mask] : basis) {
      if (vec & lead) {
        vec ^= v;
        mask ^= coord;
      }
    }
    basis.emplace_back(v, coord);
  }
};

struct SearchState {
  PivotSpan span;
  std::vector<int> block;         // per group: pivot step at which it entered the span, -1 if not yet
  std::vector<std::uint32_t> coord;  // per group: column value in the canonical matrix
};

// Columns newly absorbed when `candidate` becomes pivot number `step`.
// Returns the sorted multiset of canonical column values plus the groups.
std::pair<std::vector<std::uint32_t>, std::vector<std::pair<int, std::uint32_t>>>
absorbed_block(const SearchState& state, const std::vector<ColumnGroup>& groups, int candidate,
               int step) {
  PivotSpan span = state.span;
  span.add(groups[static_cast<std::size_t>(candidate)].value, step);
  std::vector<std::uint32_t> values;
  std::vector<std::pair<int, std::uint32_t>> absorbed;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (state.block[g] >= 0) continue;
    auto c = span.coordinates(groups[g].value);
    if (!c) continue;
    absorbed.emplace_back(static_cast<int>(g), *c);
    values.insert(values.end(), groups[g].members.size(), *c);
  }
  std::sort(values.begin(), values.end());
  return {std::move(values), std::move(absorbed)};
}

// Lexicographic comparison of blocks where running out first compares
// greater: the next column after a short block is a fresh pivot, larger than
// every column of the longer block.
int compare_blocks(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() > b.size() ? -1 : 1;
}

}  // namespace

CanonicalForm canonical_form(const BinaryCode& code) {
  const int k = code.length();
  const int r = code.dim();

  std::vector<std::uint32_t> columns(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < r; ++i) {
    const auto row = code.rows()[static_cast<std::size_t>(i)];
    for (int j = 0; j < k; ++j) {
      if ((row >> j) & 1u) columns[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
    }
  }

  std::vector<int> zero_columns;
  std::vector<ColumnGroup> groups;
  {
    std::map<std::uint32_t, std::vector<int>> by_value;
    for (int j = 0; j < k; ++j) {
      if (columns[static_cast<std::size_t>(j)] == 0) {
        zero_columns.push_back(j);
      } else {
        by_value[columns[static_cast<std::size_t>(j)]].push_back(j);
      }
    }
    for (auto& [value, members] : by_value) groups.push_back({value, std::move(members)});
  }

  SearchState root;
  root.block.assign(groups.size(), -1);
  root.coord.assign(groups.size(), 0);
  std::vector<SearchState> frontier{root};

  for (int step = 0; step < r; ++step) {
    std::vector<std::uint32_t> best;
    std::vector<std::pair<std::size_t, std::vector<std::pair<int, std::uint32_t>>>> winners;
    bool have_best = false;
    for (std::size_t s = 0; s < frontier.size(); ++s) {
      const auto& state = frontier[s];
      for (std::size_t g = 0; g < groups.size(); ++g) {
        if (state.block[g] >= 0) continue;
        auto [values, absorbed] = absorbed_block(state, groups, static_cast<int>(g), step);
        const int cmp = have_best ? compare_blocks(values, best) : -1;
        if (cmp < 0) {
          best = std::move(values);
          winners.clear();
          have_best = true;
        }
        if (cmp <= 0) winners.emplace_back(s, std::move(absorbed));
      }
    }
    std::vector<SearchState> next;
    next.reserve(winners.size());
    for (auto& [s, absorbed] : winners) {
      SearchState child = frontier[s];
      // The pivot is the absorbed group whose coordinate is exactly e_step.
      for (const auto& [g, c] : absorbed) {
        child.block[static_cast<std::size_t>(g)] = step;
        child.coord[static_cast<std::size_t>(g)] = c;
      }
      for (const auto& [g, c] : absorbed) {
        if (c == (std::uint32_t{1} << step)) {
          child.span.add(groups[static_cast<std::size_t>(g)].value, step);
          break;
        }
      }
      next.push_back(std::move(child));
    }
    frontier = std::move(next);
  }

  // Every surviving state yields the same matrix; choose the permutation with
  // the smallest image sequence.
  std::vector<int> best_images;
  std::vector<std::uint32_t> best_columns;
  for (const auto& state : frontier) {
    struct Slot {
      int block;
      std::uint32_t value;
      int coordinate;
    };
    std::vector<Slot> slots;
    slots.reserve(static_cast<std::size_t>(k));
    for (int j : zero_columns) slots.push_back({-1, 0, j});
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (state.block[g] < 0) throw Error("canonical_form: column left outside the pivot span");
      for (int j : groups[g].members) slots.push_back({state.block[g], state.coord[g], j});
    }
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
      return std::tie(a.block, a.value, a.coordinate) < std::tie(b.block, b.value, b.coordinate);
    });
    std::vector<int> images(static_cast<std::size_t>(k));
    std::vector<std::uint32_t> canon_columns(static_cast<std::size_t>(k));
    for (int pos = 0; pos < k; ++pos) {
      images[static_cast<std::size_t>(slots[static_cast<std::size_t>(pos)].coordinate)] = pos;
      canon_columns[static_cast<std::size_t>(pos)] = slots[static_cast<std::size_t>(pos)].value;
    }
    if (best_images.empty() || images < best_images) {
      best_images = std::move(images);
      best_columns = std::move(canon_columns);
    }
  }

  std::vector<std::uint32_t> rows(static_cast<std::size_t>(r), 0);
  for (int pos = 0; pos < k; ++pos) {
    for (int i = 0; i < r; ++i) {
      if ((best_columns[static_cast<std::size_t>(pos)] >> i) & 1u) rows[static_cast<std::size_t>(i)] |= std::uint32_t{1} << pos;
    }
  }
  CanonicalForm out;
  out.code = BinaryCode::from_rows(std::move(rows), k);
  out.permutation = CoordinatePermutation(std::move(best_images));
  return out;
}

std::optional<CoordinatePermutation> equivalent(const BinaryCode& a, const BinaryCode& b) {
  if (a.length() != b.length() || a.dim() != b.dim()) return std::nullopt;
  const auto ca = canonical_form(a);
  const auto cb = canonical_form(b);
  if (ca.code != cb.code) return std::nullopt;
  auto perm = cb.permutation.inverse().after(ca.permutation);
  if (apply(perm, a) != b) throw Error("equivalent: witness permutation failed verification");
  return perm;
}

}  // namespace nodal
