#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nodalcodes/gf2code.hpp"

namespace nodal {

using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

// Which Construction-A convention produced a lattice: the plain preimage
// p^{-1}(V) in Z^k, or that preimage with every inner product halved.
enum class Scaling { unscaled, half };

std::string to_string(Scaling s);
Scaling parse_scaling(const std::string& s);

// Positive-definite lattice given by the Gram matrix of a basis. The matrix
// is stored doubled so that half-integral forms stay integral.
class GramLattice {
 public:
  GramLattice() = default;
  GramLattice(IntMatrix doubled_gram, Scaling scaling);

  int rank() const { return static_cast<int>(doubled_gram_.size()); }
  const IntMatrix& doubled_gram() const { return doubled_gram_; }
  Scaling scaling() const { return scaling_; }

  // Basis vectors in Z^k when the lattice came from construction_a; empty
  // otherwise.
  const IntMatrix& ambient_basis() const { return ambient_basis_; }
  void set_ambient_basis(IntMatrix basis) { ambient_basis_ = std::move(basis); }

  // Twice the inner product of two vectors given in basis coordinates.
  std::int64_t doubled_inner(const IntVector& x, const IntVector& y) const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) {
    return a.doubled_gram_ == b.doubled_gram_ && a.scaling_ == b.scaling_;
  }

 private:
  IntMatrix doubled_gram_;
  Scaling scaling_ = Scaling::unscaled;
  IntMatrix ambient_basis_;
};

struct RootComponent {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 0;

  std::string label() const { return std::string(1, family) + std::to_string(rank); }
  int root_count() const;

  friend auto operator<=>(const RootComponent&, const RootComponent&) = default;
};

struct RootSystemReport {
  int root_count = 0;
  std::vector<RootComponent> components;  // sorted by family, then rank
  bool full_rank = false;                 // simple roots are as many as the lattice rank
  // Index of the root sublattice in the lattice; 0 unless full_rank.
  std::int64_t root_index = 0;
  IntMatrix simple_roots;
  IntMatrix cartan;
};

GramLattice construction_a(const BinaryCode& code, Scaling scaling);

// Gram matrix of the root lattice of the given ADE type (Cartan matrix).
GramLattice root_lattice(const RootComponent& type);

inline constexpr int kMaxRootSearchRank = 16;

// All vectors x (basis coordinates) with doubled norm exactly `doubled_norm`,
// sorted lexicographically.
IntMatrix vectors_of_norm(const GramLattice& lattice, std::int64_t doubled_norm);
// Norm-2 vectors.
IntMatrix roots(const GramLattice& lattice);

RootSystemReport identify_root_system(const GramLattice& lattice);

// Determinant of the true Gram matrix: det(doubled_gram) / 2^rank.
Rational discriminant(const GramLattice& lattice);

// Exact determinant of an integer matrix (fraction-free elimination).
boost::multiprecision::cpp_int determinant(const IntMatrix& m);

}  // namespace nodal
