#include "nodalcodes/covers.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "nodalcodes/error.hpp"

namespace nodal {

namespace {

int narrow(std::int64_t v, const char* what) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw Error(std::string(what) + " overflows");
  }
  return static_cast<int>(v);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::string to_string(Kodaira k) {
  switch (k) {
    case Kodaira::minus_infinity:
      return "minus_infinity";
    case Kodaira::zero:
      return "zero";
    case Kodaira::one:
      return "one";
    case Kodaira::two:
      return "two";
    case Kodaira::unknown:
      return "unknown";
  }
  return "unknown";
}

Kodaira parse_kodaira(const std::string& s) {
  if (s == "minus_infinity" || s == "-inf" || s == "-1") return Kodaira::minus_infinity;
  if (s == "zero" || s == "0") return Kodaira::zero;
  if (s == "one" || s == "1") return Kodaira::one;
  if (s == "two" || s == "2") return Kodaira::two;
  if (s == "unknown") return Kodaira::unknown;
  throw Error("unknown Kodaira dimension '" + s + "'");
}

SurfaceInvariants invariants_with_pg_q_zero(int rho, Kodaira kodaira) {
  if (rho < 1) throw Error("Picard number must be positive");
  SurfaceInvariants s;
  s.chi = 1;
  s.c2 = rho + 2;
  s.K2 = 12 - s.c2;
  s.rho = rho;
  s.pg = 0;
  s.q = 0;
  s.kodaira = kodaira;
  return s;
}

void validate(const SurfaceInvariants& s) {
  if (12 * s.chi != s.K2 + s.c2) {
    throw Error("Noether's formula fails: 12*chi = " + std::to_string(12 * s.chi) +
                " but K2 + c2 = " + std::to_string(s.K2 + s.c2));
  }
  if (s.pg == 0 && s.q == 0) {
    if (s.chi != 1) throw Error("p_g = q = 0 forces chi = 1");
    if (s.rho && s.c2 != *s.rho + 2) throw Error("p_g = q = 0 forces c2 = rho + 2");
  }
  if (s.pg && s.q && s.chi != 1 - *s.q + *s.pg) throw Error("chi must equal 1 - q + p_g");
}

CoverInvariants cover_invariants(const SurfaceInvariants& y, const CoverSpec& spec) {
  validate(y);
  if (spec.r < 0 || spec.m < 0) throw Error("cover: r and m must be non-negative");
  if ((spec.r == 0) != (spec.m == 0)) throw Error("cover: m = 0 exactly when r = 0");
  if (spec.r > 24) throw Error("cover: r > 24 is not supported");

  const std::int64_t scale = std::int64_t{1} << spec.r;  // 2^r = |G|
  // m 2^{r-3} must be an integer.
  const std::int64_t m_scaled = spec.m * scale;
  if (m_scaled % 8 != 0) {
    throw Error("cover: chi = 2^r chi(Y) - m 2^(r-3) is not an integer for r = " +
                std::to_string(spec.r) + ", m = " + std::to_string(spec.m));
  }

  CoverInvariants out;
  auto& z = out.cover;
  z.chi = narrow(scale * y.chi - m_scaled / 8, "chi");
  z.K2 = narrow(scale * y.K2 - m_scaled / 2, "K2");
  z.c2 = narrow(scale * y.c2 - m_scaled, "c2");
  z.kodaira = y.kodaira;
  if (spec.r == 0) z = y;

  auto& zbar = out.contracted;
  zbar.chi = z.chi;
  zbar.K2 = narrow(scale * y.K2, "K2");
  zbar.c2 = narrow(12 * static_cast<std::int64_t>(zbar.chi) - zbar.K2, "c2");
  zbar.kodaira = y.kodaira;
  if (spec.r == 0) zbar = y;

  validate(z);
  validate(zbar);

  if (y.kodaira == Kodaira::minus_infinity && zbar.chi > 1) {
    out.warnings.push_back("chi of the contracted cover is " + std::to_string(zbar.chi) +
                           " > 1, impossible for a ruled surface; (r, m) is inconsistent");
  }
  return out;
}

int irregularity_if_pg_zero(int chi) { return 1 - chi; }

int double_cover_nodes(int chi_cover, int chi_quotient) {
  const std::int64_t s = 4 * (2 * static_cast<std::int64_t>(chi_quotient) - chi_cover);
  if (s < 0) throw Error("double cover: negative number of nodes " + std::to_string(s));
  return narrow(s, "node count");
}

int min_m_for_r(int r) {
  if (r < 1) throw Error("min_m_for_r needs r >= 1");
  if (r > 59) throw Error("min_m_for_r supports r <= 59");
  // 2^r - m 2^{r-3} <= 1  <=>  (8 - m) 2^r <= 8.
  const std::int64_t scale = std::int64_t{1} << r;
  for (int m = 0;; ++m) {
    if ((8 - m) * scale <= 8) return m;
  }
}

int isotropic_bound(int k, int rho) {
  if (k < 0) throw Error("isotropic_bound needs k >= 0");
  if (rho < 1) throw Error("isotropic_bound needs rho >= 1");
  return std::max(0, k - rho / 2);
}

NodeBound miyaoka_max_nodes(int K2, int c2) {
  const std::int64_t numerator = 2 * (3 * static_cast<std::int64_t>(c2) - K2);
  return {narrow(floor_div(numerator, 9), "node bound"),
          "assumes Y minimal with kappa >= 0 and p_g = q = 0 (not checked)"};
}

int picard_after_contraction(int rho, int n) {
  if (n < 0) throw Error("number of contracted curves must be non-negative");
  const int result = rho - n;
  if (result < 1) {
    throw Error("contracting " + std::to_string(n) + " curves from rho = " + std::to_string(rho) +
                " leaves Picard number " + std::to_string(result) + " < 1");
  }
  return result;
}

}  // namespace nodal
