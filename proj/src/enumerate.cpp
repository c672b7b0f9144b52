#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "nodalcodes/error.hpp"
#include "nodalcodes/gf2code.hpp"

namespace nodal {

std::vector<BinaryCode> enumerate_codes(int length, WeightRule rule, int dim_min, int dim_max) {
  if (length < 1 || length > kMaxCodeLength) throw Error("enumerate_codes: length out of range");
  if (dim_min < 0 || dim_max < dim_min) {
    throw Error("enumerate_codes: invalid dimension range [" + std::to_string(dim_min) + ", " +
                std::to_string(dim_max) + "]");
  }
  if (length > 24) throw Error("enumerate_codes: length above 24 is not supported");

  std::vector<std::uint32_t> admissible;
  for (std::uint32_t w = 1; w <= low_mask(length); ++w) {
    if (weight_admissible(rule, std::popcount(w))) admissible.push_back(w);
    if (w == low_mask(length)) break;
  }

  // Spans already seen (keyed by their own RREF rows) mapped to their
  // canonical rows.
  std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> memo;

  std::vector<BinaryCode> result;
  std::set<BinaryCode> level{BinaryCode::zero(length)};
  for (int d = 0; d <= std::min(dim_max, length); ++d) {
    if (d >= dim_min) result.insert(result.end(), level.begin(), level.end());
    if (d == dim_max || level.empty()) break;

    std::set<BinaryCode> next;
    for (const auto& code : level) {
      const auto words = code.codewords();
      for (auto w : admissible) {
        if (code.contains(w)) continue;
        bool ok = true;
        for (auto c : words) {
          if (!weight_admissible(rule, std::popcount(c ^ w))) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        auto rows = code.rows();
        rows.push_back(w);
        const BinaryCode span = BinaryCode::from_rows(std::move(rows), length);
        auto it = memo.find(span.rows());
        if (it == memo.end()) {
          it = memo.emplace(span.rows(), canonical_form(span).code.rows()).first;
        }
        next.insert(BinaryCode::from_rows(it->second, length));
      }
    }
    level = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace nodal
