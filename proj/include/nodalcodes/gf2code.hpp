#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nodal {

inline constexpr int kMaxCodeLength = 32;

// Mask with the low `length` bits set.
constexpr std::uint32_t low_mask(int length) {
  return length >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << length) - 1;
}

// A vector of F2^k. Coordinate i lives in bit i; in the text form coordinate
// 0 is the leftmost character.
class BitWord {
 public:
  BitWord() = default;
  BitWord(std::uint32_t bits, int length);

  static BitWord from_string(std::string_view s);

  std::uint32_t bits() const { return bits_; }
  int length() const { return length_; }
  bool test(int i) const { return (bits_ >> i) & 1u; }
  int weight() const;
  std::string to_string() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  std::uint32_t bits_ = 0;
  int length_ = 0;
};

// A bijection of {0..k-1}. images()[i] is the position that coordinate i is
// sent to.
class CoordinatePermutation {
 public:
  CoordinatePermutation() = default;
  explicit CoordinatePermutation(std::vector<int> images);

  static CoordinatePermutation identity(int length);

  const std::vector<int>& images() const { return images_; }
  int size() const { return static_cast<int>(images_.size()); }

  std::uint32_t apply(std::uint32_t word) const;
  CoordinatePermutation inverse() const;
  // (this * other)(i) = this(other(i)): apply `other` first.
  CoordinatePermutation after(const CoordinatePermutation& other) const;

  friend bool operator==(const CoordinatePermutation&,
                         const CoordinatePermutation&) = default;

 private:
  std::vector<int> images_;
};

// A linear subspace of F2^k, held as its unique row-reduced echelon basis.
// Pivot of a row is its lowest set coordinate; pivots strictly increase and
// each pivot column has a single nonzero entry.
class BinaryCode {
 public:
  BinaryCode() = default;

  // Row-reduces the given rows. Dependent and zero rows are dropped.
  static BinaryCode from_rows(std::vector<std::uint32_t> rows, int length);
  static BinaryCode zero(int length) { return from_rows({}, length); }

  int length() const { return length_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::uint32_t>& rows() const { return rows_; }
  std::vector<BitWord> generators() const;

  bool contains(std::uint32_t word) const;
  // All 2^dim codewords, in Gray-code order starting from zero.
  std::vector<std::uint32_t> codewords() const;
  // Union of the supports of all codewords.
  std::uint32_t support_mask() const;

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;
  friend auto operator<=>(const BinaryCode&, const BinaryCode&) = default;

 private:
  int length_ = 0;
  std::vector<std::uint32_t> rows_;
};

struct WeightEnumerator {
  // counts[w] = number of codewords of weight w, for w = 0..length.
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

struct ReducedCode {
  BinaryCode code;
  std::vector<int> support;  // retained coordinates, ascending
};

struct CanonicalForm {
  BinaryCode code;
  CoordinatePermutation permutation;  // maps the input code onto `code`
};

enum class WeightRule {
  all_weights_4,  // every nonzero codeword has weight exactly 4
  doubly_even,    // every codeword weight is divisible by 4
};

bool weight_admissible(WeightRule rule, int weight);

BinaryCode make_code(std::span<const BitWord> generators, int length);

WeightEnumerator weight_enumerator(const BinaryCode& code);
bool is_doubly_even(const BinaryCode& code);
bool is_self_orthogonal(const BinaryCode& code);

// Self-intersection L_v^2 of the half-class attached to a codeword, -w(v)/2.
int self_intersection(std::uint32_t word);

ReducedCode reduce(const BinaryCode& code);

// Doubled even-weight code: length 2n, dimension n - 1.
BinaryCode de(int n);
BinaryCode even_weight_code(int n);
// Simplex code of dimension r: the columns are all nonzero vectors of F2^r,
// length 2^r - 1.
BinaryCode simplex_code(int r);
// Appends zero coordinates up to `length`.
BinaryCode pad(const BinaryCode& code, int length);

BinaryCode apply(const CoordinatePermutation& perm, const BinaryCode& code);

CanonicalForm canonical_form(const BinaryCode& code);
std::optional<CoordinatePermutation> equivalent(const BinaryCode& a, const BinaryCode& b);
bool essentially_isomorphic(const BinaryCode& a, const BinaryCode& b);
std::optional<int> recognize_de(const BinaryCode& code);

// Canonical representatives of every equivalence class of codes of the given
// length whose codewords obey `rule` and whose dimension lies in
// [dim_min, dim_max]. Sorted by canonical form.
std::vector<BinaryCode> enumerate_codes(int length, WeightRule rule, int dim_min, int dim_max);

// Text form: "k r" on the first line, then r rows of 0/1 characters.
std::string to_text(const BinaryCode& code);
BinaryCode parse_code_text(std::string_view text);

}  // namespace nodal
