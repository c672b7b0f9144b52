#include "nodalcodes/gf2code.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "nodalcodes/error.hpp"

namespace nodal {

namespace {

void check_length(int length) {
  if (length < 0 || length > kMaxCodeLength) {
    throw Error("code length " + std::to_string(length) + " out of range 0.." +
                std::to_string(kMaxCodeLength));
  }
}

}  // namespace

BitWord::BitWord(std::uint32_t bits, int length) : bits_(bits), length_(length) {
  check_length(length);
  if ((bits & ~low_mask(length)) != 0) {
    throw Error("bit word has bits beyond its length " + std::to_string(length));
  }
}

BitWord BitWord::from_string(std::string_view s) {
  if (s.size() > static_cast<std::size_t>(kMaxCodeLength)) {
    throw Error("bit string longer than " + std::to_string(kMaxCodeLength));
  }
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      bits |= std::uint32_t{1} << i;
    } else if (s[i] != '0') {
      throw Error("invalid character in bit string '" + std::string(s) + "'");
    }
  }
  return BitWord(bits, static_cast<int>(s.size()));
}

int BitWord::weight() const { return std::popcount(bits_); }

std::string BitWord::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (test(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

CoordinatePermutation::CoordinatePermutation(std::vector<int> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw Error("coordinate permutation is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

CoordinatePermutation CoordinatePermutation::identity(int length) {
  std::vector<int> images(static_cast<std::size_t>(length));
  std::iota(images.begin(), images.end(), 0);
  return CoordinatePermutation(std::move(images));
}

std::uint32_t CoordinatePermutation::apply(std::uint32_t word) const {
  std::uint32_t out = 0;
  for (int i = 0; i < size(); ++i) {
    if ((word >> i) & 1u) out |= std::uint32_t{1} << images_[static_cast<std::size_t>(i)];
  }
  return out;
}

CoordinatePermutation CoordinatePermutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return CoordinatePermutation(std::move(inv));
}

CoordinatePermutation CoordinatePermutation::after(const CoordinatePermutation& other) const {
  if (other.size() != size()) throw Error("composing permutations of different sizes");
  std::vector<int> out(images_.size());
  for (int i = 0; i < size(); ++i) {
    out[static_cast<std::size_t>(i)] =
        images_[static_cast<std::size_t>(other.images_[static_cast<std::size_t>(i)])];
  }
  return CoordinatePermutation(std::move(out));
}

BinaryCode BinaryCode::from_rows(std::vector<std::uint32_t> rows, int length) {
  check_length(length);
  const std::uint32_t mask = low_mask(length);
  for (auto row : rows) {
    if ((row & ~mask) != 0) throw Error("generator has bits beyond the code length");
  }

  // Gauss-Jordan with the lowest set coordinate as pivot.
  std::vector<std::uint32_t> basis;
  for (auto row : rows) {
    for (auto b : basis) {
      if (row & (b & (~b + 1))) row ^= b;
    }
    if (row == 0) continue;
    const std::uint32_t pivot = row & (~row + 1);
    for (auto& b : basis) {
      if (b & pivot) b ^= row;
    }
    basis.push_back(row);
  }
  std::sort(basis.begin(), basis.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });

  BinaryCode code;
  code.length_ = length;
  code.rows_ = std::move(basis);
  return code;
}

std::vector<BitWord> BinaryCode::generators() const {
  std::vector<BitWord> out;
  out.reserve(rows_.size());
  for (auto row : rows_) out.emplace_back(row, length_);
  return out;
}

bool BinaryCode::contains(std::uint32_t word) const {
  if ((word & ~low_mask(length_)) != 0) return false;
  for (auto row : rows_) {
    if (word & (row & (~row + 1))) word ^= row;
  }
  return word == 0;
}

std::vector<std::uint32_t> BinaryCode::codewords() const {
  if (dim() > 30) throw Error("code dimension too large to list codewords");
  const std::uint64_t count = std::uint64_t{1} << dim();
  std::vector<std::uint32_t> words;
  words.reserve(count);
  std::uint32_t word = 0;
  words.push_back(word);
  for (std::uint64_t i = 1; i < count; ++i) {
    word ^= rows_[static_cast<std::size_t>(std::countr_zero(i))];
    words.push_back(word);
  }
  return words;
}

std::uint32_t BinaryCode::support_mask() const {
  std::uint32_t mask = 0;
  for (auto row : rows_) mask |= row;
  return mask;
}

std::uint64_t WeightEnumerator::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

bool weight_admissible(WeightRule rule, int weight) {
  switch (rule) {
    case WeightRule::all_weights_4:
      return weight == 4;
    case WeightRule::doubly_even:
      return weight % 4 == 0;
  }
  return false;
}

BinaryCode make_code(std::span<const BitWord> generators, int length) {
  check_length(length);
  std::vector<std::uint32_t> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.length() != length) {
      throw Error("generator length " + std::to_string(g.length()) +
                  " does not match code length " + std::to_string(length));
    }
    rows.push_back(g.bits());
  }
  return BinaryCode::from_rows(std::move(rows), length);
}

WeightEnumerator weight_enumerator(const BinaryCode& code) {
  WeightEnumerator we;
  we.counts.assign(static_cast<std::size_t>(code.length()) + 1, 0);
  for (auto word : code.codewords()) ++we.counts[static_cast<std::size_t>(std::popcount(word))];
  return we;
}

bool is_doubly_even(const BinaryCode& code) {
  // Weights of all codewords are 0 mod 4 iff the generators are and they are
  // pairwise orthogonal: w(a+b) = w(a) + w(b) - 2|a&b|.
  const auto& rows = code.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::popcount(rows[i]) % 4 != 0) return false;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (std::popcount(rows[i] & rows[j]) % 2 != 0) return false;
    }
  }
  return true;
}

bool is_self_orthogonal(const BinaryCode& code) {
  const auto& rows = code.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (std::popcount(rows[i] & rows[j]) % 2 != 0) return false;
    }
  }
  return true;
}

int self_intersection(std::uint32_t word) { return -std::popcount(word) / 2; }

ReducedCode reduce(const BinaryCode& code) {
  ReducedCode out;
  const std::uint32_t support = code.support_mask();
  for (int i = 0; i < code.length(); ++i) {
    if ((support >> i) & 1u) out.support.push_back(i);
  }
  std::vector<std::uint32_t> rows;
  for (auto row : code.rows()) {
    std::uint32_t packed = 0;
    for (std::size_t j = 0; j < out.support.size(); ++j) {
      if ((row >> out.support[j]) & 1u) packed |= std::uint32_t{1} << j;
    }
    rows.push_back(packed);
  }
  out.code = BinaryCode::from_rows(std::move(rows), static_cast<int>(out.support.size()));
  return out;
}

BinaryCode even_weight_code(int n) {
  if (n < 1 || n > kMaxCodeLength) throw Error("even-weight code needs 1 <= n <= 32");
  std::vector<std::uint32_t> rows;
  for (int i = 0; i + 1 < n; ++i) rows.push_back((std::uint32_t{1} << i) | (std::uint32_t{1} << (i + 1)));
  return BinaryCode::from_rows(std::move(rows), n);
}

BinaryCode de(int n) {
  if (n < 1) throw Error("DE(n) needs n >= 1, got " + std::to_string(n));
  if (2 * n > kMaxCodeLength) throw Error("DE(n) needs 2n <= 32");
  const BinaryCode even = even_weight_code(n);
  std::vector<std::uint32_t> rows;
  for (auto row : even.rows()) {
    std::uint32_t doubled = 0;
    for (int i = 0; i < n; ++i) {
      if ((row >> i) & 1u) doubled |= std::uint32_t{3} << (2 * i);
    }
    rows.push_back(doubled);
  }
  return BinaryCode::from_rows(std::move(rows), 2 * n);
}

BinaryCode simplex_code(int r) {
  if (r < 1 || r > 5) throw Error("simplex code needs 1 <= r <= 5");
  const int length = (1 << r) - 1;
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(r), 0);
  for (int col = 0; col < length; ++col) {
    const int value = col + 1;
    for (int i = 0; i < r; ++i) {
      if ((value >> i) & 1) rows[static_cast<std::size_t>(i)] |= std::uint32_t{1} << col;
    }
  }
  return BinaryCode::from_rows(std::move(rows), length);
}

BinaryCode pad(const BinaryCode& code, int length) {
  if (length < code.length()) throw Error("cannot pad a code to a shorter length");
  return BinaryCode::from_rows(code.rows(), length);
}

BinaryCode apply(const CoordinatePermutation& perm, const BinaryCode& code) {
  if (perm.size() != code.length()) throw Error("permutation size does not match code length");
  std::vector<std::uint32_t> rows;
  rows.reserve(code.rows().size());
  for (auto row : code.rows()) rows.push_back(perm.apply(row));
  return BinaryCode::from_rows(std::move(rows), code.length());
}

bool essentially_isomorphic(const BinaryCode& a, const BinaryCode& b) {
  return equivalent(reduce(a).code, reduce(b).code).has_value();
}

std::optional<int> recognize_de(const BinaryCode& code) {
  const BinaryCode reduced = reduce(code).code;
  const int m = reduced.length();
  // The reduced form of DE(1) is the empty code.
  if (m == 0) return 1;
  if (m % 2 != 0) return std::nullopt;
  const int n = m / 2;
  if (reduced.dim() != n - 1) return std::nullopt;

  // Columns of the generator matrix, grouped by value.
  std::vector<std::uint32_t> columns(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < reduced.dim(); ++i) {
    const auto row = reduced.rows()[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j) {
      if ((row >> j) & 1u) columns[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
    }
  }
  std::sort(columns.begin(), columns.end());
  // Every group must split into pairs; keep one column per pair.
  std::vector<std::uint32_t> halved;
  for (std::size_t j = 0; j < columns.size();) {
    std::size_t end = j;
    while (end < columns.size() && columns[end] == columns[j]) ++end;
    if ((end - j) % 2 != 0) return std::nullopt;
    halved.insert(halved.end(), (end - j) / 2, columns[j]);
    j = end;
  }

  // The induced length-n code must be the even-weight code: dimension n - 1
  // with every generator of even weight.
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(reduced.dim()), 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < reduced.dim(); ++i) {
      if ((halved[static_cast<std::size_t>(j)] >> i) & 1u) rows[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
    }
  }
  const BinaryCode induced = BinaryCode::from_rows(rows, n);
  if (induced.dim() != n - 1) return std::nullopt;
  for (auto row : induced.rows()) {
    if (std::popcount(row) % 2 != 0) return std::nullopt;
  }
  return n;
}

std::string to_text(const BinaryCode& code) {
  std::ostringstream os;
  os << code.length() << ' ' << code.dim() << '\n';
  for (const auto& g : code.generators()) os << g.to_string() << '\n';
  return os.str();
}

BinaryCode parse_code_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  int length = -1;
  int dim = -1;
  if (!(is >> length >> dim)) throw Error("code file: expected header 'k r'");
  if (length < 0 || length > kMaxCodeLength) throw Error("code file: length out of range");
  if (dim < 0) throw Error("code file: negative dimension");
  std::vector<BitWord> gens;
  std::string row;
  for (int i = 0; i < dim; ++i) {
    if (!(is >> row)) throw Error("code file: expected " + std::to_string(dim) + " generator rows");
    auto word = BitWord::from_string(row);
    if (word.length() != length) throw Error("code file: row '" + row + "' has wrong length");
    gens.push_back(word);
  }
  if (is >> row) throw Error("code file: trailing content after generator rows");
  return make_code(gens, length);
}

}  // namespace nodal
