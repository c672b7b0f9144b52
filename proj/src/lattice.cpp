#include "nodalcodes/lattice.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "nodalcodes/error.hpp"

namespace nodal {

using boost::multiprecision::cpp_int;

std::string to_string(Scaling s) { return s == Scaling::half ? "half" : "unscaled"; }

Scaling parse_scaling(const std::string& s) {
  if (s == "half") return Scaling::half;
  if (s == "unscaled") return Scaling::unscaled;
  throw Error("unknown scaling '" + s + "' (expected unscaled or half)");
}

GramLattice::GramLattice(IntMatrix doubled_gram, Scaling scaling)
    : doubled_gram_(std::move(doubled_gram)), scaling_(scaling) {
  const std::size_t n = doubled_gram_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (doubled_gram_[i].size() != n) throw Error("Gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (doubled_gram_[i][i] <= 0) throw Error("Gram matrix has a non-positive diagonal entry");
    for (std::size_t j = 0; j < i; ++j) {
      if (doubled_gram_[i][j] != doubled_gram_[j][i]) throw Error("Gram matrix is not symmetric");
    }
  }
}

std::int64_t GramLattice::doubled_inner(const IntVector& x, const IntVector& y) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      s += x[static_cast<std::size_t>(i)] * doubled_gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
           y[static_cast<std::size_t>(j)];
    }
  }
  return s;
}

int RootComponent::root_count() const {
  switch (family) {
    case 'A':
      return rank * (rank + 1);
    case 'D':
      return 2 * rank * (rank - 1);
    case 'E':
      return rank == 6 ? 72 : rank == 7 ? 126 : rank == 8 ? 240 : 0;
  }
  return 0;
}

GramLattice construction_a(const BinaryCode& code, Scaling scaling) {
  if (scaling == Scaling::half && !is_doubly_even(code)) {
    throw Error("construction_a: half scaling needs a doubly-even code");
  }
  if (scaling == Scaling::unscaled) {
    for (auto row : code.rows()) {
      if (std::popcount(row) % 2 != 0) throw Error("construction_a: unscaled form needs an even code");
    }
  }

  // Basis of p^{-1}(V): the 0/1 lift of the generator with pivot j, or 2e_j
  // when j is not a pivot. Ordered by coordinate.
  const int k = code.length();
  IntMatrix basis;
  for (int j = 0; j < k; ++j) {
    IntVector v(static_cast<std::size_t>(k), 0);
    auto it = std::find_if(code.rows().begin(), code.rows().end(),
                           [j](std::uint32_t row) { return std::countr_zero(row) == j; });
    if (it != code.rows().end()) {
      for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = (*it >> i) & 1u;
    } else {
      v[static_cast<std::size_t>(j)] = 2;
    }
    basis.push_back(std::move(v));
  }

  IntMatrix gram(static_cast<std::size_t>(k), IntVector(static_cast<std::size_t>(k), 0));
  const std::int64_t factor = scaling == Scaling::half ? 1 : 2;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      std::int64_t dot = 0;
      for (int i = 0; i < k; ++i) dot += basis[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
      gram[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = factor * dot;
    }
  }
  GramLattice lattice(std::move(gram), scaling);
  lattice.set_ambient_basis(std::move(basis));
  return lattice;
}

GramLattice root_lattice(const RootComponent& type) {
  const int n = type.rank;
  if (n < 1 || (type.family == 'D' && n < 2) || (type.family == 'E' && (n < 6 || n > 8)) ||
      (type.family != 'A' && type.family != 'D' && type.family != 'E')) {
    throw Error("no root lattice of type " + type.label());
  }
  IntMatrix cartan(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
  auto link = [&](int a, int b) {
    cartan[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = -1;
    cartan[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -1;
  };
  for (int i = 0; i < n; ++i) cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  switch (type.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      if (n >= 3) link(n - 3, n - 1);
      break;
    case 'E':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(2, n - 1);
      break;
  }
  for (auto& row : cartan) {
    for (auto& x : row) x *= 2;
  }
  return GramLattice(std::move(cartan), Scaling::unscaled);
}

cpp_int determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  // Bareiss elimination; every division is exact.
  cpp_int sign = 1;
  cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Rational discriminant(const GramLattice& lattice) {
  return Rational(determinant(lattice.doubled_gram()), cpp_int(1) << lattice.rank());
}

namespace {

// x^T Q x = sum_i diag[i] * (x_i + sum_{j>i} mu[i][j] x_j)^2.
struct QuadraticDecomposition {
  std::vector<Rational> diag;
  std::vector<std::vector<Rational>> mu;
};

QuadraticDecomposition decompose(const IntMatrix& q) {
  const std::size_t n = q.size();
  QuadraticDecomposition out;
  out.diag.assign(n, 0);
  out.mu.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Rational d = q[i][i];
    for (std::size_t k = 0; k < i; ++k) d -= out.mu[k][i] * out.mu[k][i] * out.diag[k];
    if (d <= 0) throw Error("Gram matrix is not positive definite");
    out.diag[i] = d;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = q[i][j];
      for (std::size_t k = 0; k < i; ++k) s -= out.mu[k][i] * out.mu[k][j] * out.diag[k];
      out.mu[i][j] = s / d;
    }
  }
  return out;
}

std::int64_t floor_of(const Rational& r) {
  cpp_int num = boost::multiprecision::numerator(r);
  cpp_int den = boost::multiprecision::denominator(r);
  cpp_int q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return static_cast<std::int64_t>(q);
}

void enumerate_level(const QuadraticDecomposition& qd, std::int64_t bound, int level,
                     const Rational& used, IntVector& x, IntMatrix& out) {
  const std::size_t i = static_cast<std::size_t>(level);
  const std::size_t n = x.size();
  Rational center = 0;
  for (std::size_t j = i + 1; j < n; ++j) center -= qd.mu[i][j] * x[j];
  const Rational remaining = Rational(bound) - used;
  if (remaining < 0) return;
  const Rational radius_sq = remaining / qd.diag[i];

  auto visit = [&](std::int64_t v) {
    const Rational offset = Rational(v) - center;
    const Rational term = qd.diag[i] * offset * offset;
    x[i] = v;
    if (level == 0) {
      out.push_back(x);
    } else {
      enumerate_level(qd, bound, level - 1, used + term, x, out);
    }
  };
  auto inside = [&](std::int64_t v) {
    const Rational offset = Rational(v) - center;
    return offset * offset <= radius_sq;
  };

  const std::int64_t start = floor_of(center);
  for (std::int64_t v = start; inside(v); --v) visit(v);
  for (std::int64_t v = start + 1; inside(v); ++v) visit(v);
  x[i] = 0;
}

}  // namespace

IntMatrix vectors_of_norm(const GramLattice& lattice, std::int64_t doubled_norm) {
  const int n = lattice.rank();
  if (n > kMaxRootSearchRank) {
    throw Error("short-vector search supports rank <= " + std::to_string(kMaxRootSearchRank));
  }
  if (n == 0) return {};
  const auto qd = decompose(lattice.doubled_gram());
  IntVector x(static_cast<std::size_t>(n), 0);
  IntMatrix within;
  enumerate_level(qd, doubled_norm, n - 1, Rational(0), x, within);

  IntMatrix out;
  for (auto& v : within) {
    if (lattice.doubled_inner(v, v) == doubled_norm) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix roots(const GramLattice& lattice) { return vectors_of_norm(lattice, 4); }

namespace {

RootComponent classify_component(const std::vector<std::vector<int>>& adjacency,
                                 const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<int> branch;
  std::size_t edges = 0;
  for (int v : nodes) {
    const auto degree = adjacency[static_cast<std::size_t>(v)].size();
    edges += degree;
    if (degree > 3) throw Error("root system has a node of degree > 3");
    if (degree == 3) branch.push_back(v);
  }
  if (edges / 2 != static_cast<std::size_t>(n - 1)) throw Error("Dynkin diagram is not a tree");
  if (branch.empty()) return {'A', n};
  if (branch.size() > 1) throw Error("Dynkin diagram has more than one branch node");

  // Arm lengths from the branch node.
  const int centre = branch.front();
  std::vector<int> arms;
  for (int start : adjacency[static_cast<std::size_t>(centre)]) {
    int len = 1;
    int prev = centre;
    int cur = start;
    while (true) {
      int next = -1;
      for (int w : adjacency[static_cast<std::size_t>(cur)]) {
        if (w != prev) next = w;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n};
  throw Error("Dynkin diagram is not of ADE type");
}

}  // namespace

RootSystemReport identify_root_system(const GramLattice& lattice) {
  RootSystemReport report;
  const IntMatrix all = roots(lattice);
  report.root_count = static_cast<int>(all.size());

  // Positive: first nonzero coordinate is positive.
  auto positive = [](const IntVector& v) {
    for (auto c : v) {
      if (c != 0) return c > 0;
    }
    return false;
  };
  IntMatrix pos;
  for (const auto& v : all) {
    if (positive(v)) pos.push_back(v);
  }
  const std::set<IntVector> pos_set(pos.begin(), pos.end());

  // Simple roots are the positive roots that are not a sum of two positive roots.
  for (const auto& alpha : pos) {
    bool decomposable = false;
    for (const auto& beta : pos) {
      IntVector gamma(alpha.size());
      for (std::size_t i = 0; i < alpha.size(); ++i) gamma[i] = alpha[i] - beta[i];
      if (pos_set.count(gamma)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) report.simple_roots.push_back(alpha);
  }

  const std::size_t s = report.simple_roots.size();
  report.cartan.assign(s, IntVector(s, 0));
  std::vector<std::vector<int>> adjacency(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const auto d = lattice.doubled_inner(report.simple_roots[i], report.simple_roots[j]);
      if (d % 2 != 0) throw Error("roots have half-integral inner products; lattice is not even");
      report.cartan[i][j] = d / 2;
      if (i != j) {
        if (d != 0 && d != -2) throw Error("simple roots with inner product outside {0, -1}");
        if (d == -2) adjacency[i].push_back(static_cast<int>(j));
      }
    }
  }

  std::vector<bool> seen(s, false);
  for (std::size_t start = 0; start < s; ++start) {
    if (seen[start]) continue;
    std::vector<int> nodes{static_cast<int>(start)};
    seen[start] = true;
    for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
      for (int w : adjacency[static_cast<std::size_t>(nodes[idx])]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          nodes.push_back(w);
        }
      }
    }
    report.components.push_back(classify_component(adjacency, nodes));
  }
  std::sort(report.components.begin(), report.components.end());

  int expected = 0;
  for (const auto& c : report.components) expected += c.root_count();
  if (expected != report.root_count) {
    throw Error("root count " + std::to_string(report.root_count) +
                " disagrees with the identified components (" + std::to_string(expected) + ")");
  }

  report.full_rank = static_cast<int>(s) == lattice.rank();
  if (report.full_rank) {
    IntMatrix doubled = report.cartan;
    for (auto& row : doubled) {
      for (auto& x : row) x *= 2;
    }
    // [L : R]^2 = det(R) / det(L).
    const cpp_int det_roots = determinant(doubled);
    const cpp_int det_lattice = determinant(lattice.doubled_gram());
    const cpp_int ratio = det_roots / det_lattice;
    if (ratio * det_lattice != det_roots) throw Error("root sublattice index is not an integer");
    const cpp_int index = boost::multiprecision::sqrt(ratio);
    if (index * index != ratio) throw Error("root sublattice index is not an integer");
    report.root_index = static_cast<std::int64_t>(index);
  }
  return report;
}

}  // namespace nodal
