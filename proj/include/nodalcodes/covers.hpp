#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nodal {

enum class Kodaira { minus_infinity, zero, one, two, unknown };

std::string to_string(Kodaira k);
Kodaira parse_kodaira(const std::string& s);

// Numerical invariants of a smooth projective surface. Picard number,
// geometric genus and irregularity are optional because the cover formulas
// do not determine them.
struct SurfaceInvariants {
  int chi = 1;  // holomorphic Euler characteristic
  int K2 = 0;
  int c2 = 12;
  std::optional<int> rho;
  std::optional<int> pg;
  std::optional<int> q;
  Kodaira kodaira = Kodaira::unknown;

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

// Surface with p_g = q = 0: chi = 1, c2 = rho + 2, K^2 = 10 - rho.
SurfaceInvariants invariants_with_pg_q_zero(int rho, Kodaira kodaira);

// Throws if Noether's formula fails, or if p_g = q = 0 but chi or c2
// disagree with that.
void validate(const SurfaceInvariants& s);

// Dimension r of the code and number m of curves appearing in it.
struct CoverSpec {
  int r = 0;
  int m = 0;
};

struct CoverInvariants {
  SurfaceInvariants cover;      // the G-cover Z of Y
  SurfaceInvariants contracted; // Z with the 2^{r-1} m exceptional curves blown down
  std::vector<std::string> warnings;
};

CoverInvariants cover_invariants(const SurfaceInvariants& y, const CoverSpec& spec);

// Irregularity of a surface with p_g = 0 and the given chi.
int irregularity_if_pg_zero(int chi);

// Number of A1 points on the quotient of a double cover: 4(2 chi' - chi).
int double_cover_nodes(int chi_cover, int chi_quotient);

// Smallest m with 2^r - m 2^{r-3} <= 1.
int min_m_for_r(int r);

// Lower bound on dim V from total isotropy of the image of the curves in
// Pic mod 2: max(0, k - floor(rho / 2)).
int isotropic_bound(int k, int rho);

struct NodeBound {
  int max_nodes;
  std::string assumption;
};

// floor(2 (3 c2 - K^2) / 9). Valid for minimal surfaces with kappa >= 0 and
// p_g = q = 0, which is not checked.
NodeBound miyaoka_max_nodes(int K2, int c2);

// Picard number after contracting n disjoint nodal curves.
int picard_after_contraction(int rho, int n);

}  // namespace nodal
