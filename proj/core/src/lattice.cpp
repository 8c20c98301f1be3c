/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include "ckkslab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "ckkslab/error.hpp"

namespace ckkslab {
namespace lattice {

namespace {

constexpr std::size_t kMaxEnumerationDim = 6;

[[noreturn]] void fail(const std::string& msg) {
  throw Error(ErrorCode::lattice, msg);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  // b > 0
  BigInt r = a % b;
  if (r < 0) r += b;
  return (a - r) / b;
}

BigInt rational_floor(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

BigInt rational_ceil(const Rational& r) { return -rational_floor(-r); }

BigInt rational_round(const Rational& r) {
  return rational_floor(r + Rational(1, 2));
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Smallest non-negative integer k with k^2 >= r.
BigInt ceil_sqrt(const Rational& r) {
  if (r <= 0) return 0;
  BigInt k = sqrt(rational_floor(r));
  while (Rational(k * k) < r) ++k;
  return k;
}

std::size_t exact_rank(RationalMat m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Solves sum_i c_i * rows_i == v exactly via the normal equations, then
// verifies the reconstruction. Returns nullopt when v is outside the span.
std::optional<RationalVec> coords_in_rows(const RationalMat& rows,
                                          const RationalVec& v) {
  const std::size_t n = rows.size();
  const std::size_t m = v.size();
  // Gram system G c = rhs.
  RationalMat sys(n, RationalVec(n + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sys[i][j] = dot(rows[i], rows[j]);
    sys[i][n] = dot(rows[i], v);
  }
  // Exact Gaussian elimination with partial (first nonzero) pivoting.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sys[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;  // rank-deficient Gram matrix
    std::swap(sys[col], sys[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sys[i][col] == 0) continue;
      Rational f = sys[i][col] / sys[col][col];
      for (std::size_t j = col; j <= n; ++j) sys[i][j] -= f * sys[col][j];
    }
  }
  RationalVec c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = sys[i][n] / sys[i][i];
  // Verify: the normal equations alone only give the projection.
  for (std::size_t j = 0; j < m; ++j) {
    Rational acc(0);
    for (std::size_t i = 0; i < n; ++i) acc += c[i] * rows[i][j];
    if (acc != v[j]) return std::nullopt;
  }
  return c;
}

RationalVec combine(const RationalMat& rows, const std::vector<BigInt>& x) {
  RationalVec out(rows.front().size(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] += Rational(x[i]) * rows[i][j];
  }
  return out;
}

// Odometer-style walk over the integer box [lo_i, hi_i]; calls visit(x)
// for every point.
template <typename Visit>
void enumerate_box(const std::vector<BigInt>& lo, const std::vector<BigInt>& hi,
                   Visit visit) {
  const std::size_t n = lo.size();
  std::vector<BigInt> x(lo);
  for (;;) {
    visit(x);
    std::size_t i = 0;
    while (i < n) {
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      ++i;
    }
    if (i == n) return;
  }
}

bool all_zero(const std::vector<BigInt>& x) {
  return std::all_of(x.begin(), x.end(),
                     [](const BigInt& v) { return v == 0; });
}

// Gram-Schmidt on arbitrary rows (no Basis wrapper).
RationalMat gram_schmidt_rows(const RationalMat& rows) {
  RationalMat gs;
  gs.reserve(rows.size());
  for (const RationalVec& row : rows) {
    RationalVec v = row;
    for (const RationalVec& prev : gs) {
      Rational denom = squared_norm(prev);
      if (denom == 0) fail("gram_schmidt: rank-deficient input");
      Rational f = dot(row, prev) / denom;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * prev[j];
    }
    gs.push_back(std::move(v));
  }
  return gs;
}

// Squared distance from v to the span of rows (rows need not be
// orthogonal; their Gram-Schmidt images are used).
Rational dist_sq_to_span(const RationalVec& v, const RationalMat& gs_rows) {
  RationalVec res = v;
  for (const RationalVec& g : gs_rows) {
    Rational denom = squared_norm(g);
    if (denom == 0) continue;
    Rational f = dot(res, g) / denom;
    for (std::size_t j = 0; j < res.size(); ++j) res[j] -= f * g[j];
  }
  return squared_norm(res);
}

}  // namespace

Basis Basis::make(RationalMat vectors) {
  if (vectors.empty()) fail("basis must be nonempty");
  const std::size_t m = vectors.front().size();
  for (const RationalVec& row : vectors)
    if (row.size() != m) fail("basis rows must have equal dimension");
  if (vectors.size() > m) fail("more vectors than ambient dimension");
  if (exact_rank(vectors) != vectors.size()) fail("basis is rank-deficient");
  Basis b;
  b.vectors = std::move(vectors);
  return b;
}

Rational dot(const RationalVec& a, const RationalVec& b) {
  if (a.size() != b.size()) fail("dot: dimension mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational squared_norm(const RationalVec& v) { return dot(v, v); }

RationalMat gram_schmidt(const Basis& basis) {
  return gram_schmidt_rows(basis.vectors);
}

Rational lambda1_lower_bound_sq(const Basis& basis) {
  RationalMat gs = gram_schmidt(basis);
  Rational best = squared_norm(gs.front());
  for (const RationalVec& g : gs) best = std::min(best, squared_norm(g));
  return best;
}

double lambda1_lower_bound(const Basis& basis) {
  return std::sqrt(lambda1_lower_bound_sq(basis).convert_to<double>());
}

Rational determinant(const RationalMat& m) {
  const std::size_t n = m.size();
  for (const RationalVec& row : m)
    if (row.size() != n) fail("determinant: matrix must be square");
  RationalMat a = m;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[col], a[pivot]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

bool is_unimodular(const RationalMat& u) {
  const std::size_t n = u.size();
  for (const RationalVec& row : u)
    if (row.size() != n) fail("is_unimodular: matrix must be square");
  for (const RationalVec& row : u)
    for (const Rational& entry : row)
      if (!is_integer(entry)) return false;
  Rational det = determinant(u);
  return det == 1 || det == -1;
}

bool same_lattice(const Basis& b1, const Basis& b2) {
  if (b1.ambient_dim() != b2.ambient_dim() || b1.rank() != b2.rank())
    fail("same_lattice: dimension or rank mismatch");
  RationalMat change;
  change.reserve(b2.rank());
  for (const RationalVec& row : b2.vectors) {
    auto coords = coords_in_rows(b1.vectors, row);
    if (!coords) return false;  // not even the same span
    change.push_back(std::move(*coords));
  }
  return is_unimodular(change);
}

bool in_parallelepiped(const RationalVec& v, const Basis& basis) {
  auto coords = coords_in_rows(basis.vectors, v);
  if (!coords) fail("in_parallelepiped: vector outside the span");
  for (const Rational& c : *coords)
    if (c < 0 || c >= 1) return false;
  return true;
}

bool is_basis_of(const Basis& candidate, const Basis& basis) {
  if (candidate.rank() != basis.rank() ||
      candidate.ambient_dim() != basis.ambient_dim())
    fail("is_basis_of: dimension or rank mismatch");
  const std::size_t n = basis.rank();
  // Integer coordinates of each candidate vector in the reference basis;
  // membership in the lattice is a precondition.
  IntMat cand_coords;
  cand_coords.reserve(n);
  for (const RationalVec& row : candidate.vectors) {
    auto coords = coords_in_rows(basis.vectors, row);
    if (!coords) fail("is_basis_of: candidate vector outside the span");
    IntVec x(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integer((*coords)[j]))
        fail("is_basis_of: candidate vector is not a lattice point");
      x[j] = numerator((*coords)[j]);
    }
    cand_coords.push_back(std::move(x));
  }
  // A point of P(candidate) has basis coordinates sum_i c_i * x_i with
  // c_i in [0,1), so each coordinate is bounded by the signed sums.
  std::vector<BigInt> lo(n, 0), hi(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (cand_coords[i][j] < 0)
        lo[j] += cand_coords[i][j];
      else
        hi[j] += cand_coords[i][j];
    }
  }
  bool found = false;
  enumerate_box(lo, hi, [&](const std::vector<BigInt>& x) {
    if (found || all_zero(x)) return;
    RationalVec p = combine(basis.vectors, x);
    auto coords = coords_in_rows(candidate.vectors, p);
    if (!coords) return;
    for (const Rational& c : *coords)
      if (c < 0 || c >= 1) return;
    found = true;  // nonzero lattice point inside the parallelepiped
  });
  return !found;
}

Basis basis_from_generators(const IntMat& generators) {
  if (generators.empty()) fail("basis_from_generators: empty generator list");
  const std::size_t m = generators.front().size();
  for (const IntVec& g : generators)
    if (g.size() != m) fail("basis_from_generators: dimension mismatch");

  // Integer row reduction (unimodular row operations only), giving an
  // independent spanning set of the same integer span.
  IntMat rows = generators;
  std::size_t top = 0;
  for (std::size_t col = 0; col < m && top < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() ||
            abs(rows[i][col]) < abs(rows[best][col]))
          best = i;
      }
      if (best == rows.size()) break;  // column exhausted
      std::swap(rows[top], rows[best]);
      bool others = false;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        BigInt f = floor_div(rows[i][col], abs(rows[top][col]));
        if (rows[top][col] < 0) f = -f;
        for (std::size_t j = 0; j < m; ++j)
          rows[i][j] -= f * rows[top][j];
        if (rows[i][col] != 0) others = true;
      }
      if (!others) {
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  if (rows.empty()) fail("basis_from_generators: all generators are zero");

  RationalMat reduced;
  reduced.reserve(rows.size());
  for (const IntVec& r : rows) {
    RationalVec row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = Rational(r[j]);
    reduced.push_back(std::move(row));
  }
  Basis internal = Basis::make(std::move(reduced));
  const std::size_t n = internal.rank();

  // Constructive procedure: shortest vector first, then the closest
  // lattice point to the span of what has been chosen so far.
  RationalMat chosen;
  chosen.push_back(brute_force_svp(internal));
  while (chosen.size() < n) {
    // First internal basis vector outside the current span.
    std::size_t y_index = internal.rank();
    for (std::size_t i = 0; i < n; ++i) {
      RationalMat trial = chosen;
      trial.push_back(internal.vectors[i]);
      if (exact_rank(trial) == chosen.size() + 1) {
        y_index = i;
        break;
      }
    }
    if (y_index == internal.rank())
      fail("basis_from_generators: internal span exhausted early");

    // Coordinates (in the internal basis) of the chosen vectors and y.
    IntMat w_coords;
    for (const RationalVec& v : chosen) {
      auto coords = coords_in_rows(internal.vectors, v);
      IntVec x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = numerator((*coords)[j]);
      w_coords.push_back(std::move(x));
    }
    {
      IntVec y(n, 0);
      y[y_index] = 1;
      w_coords.push_back(std::move(y));
    }

    std::vector<BigInt> lo(n, 0), hi(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (const IntVec& w : w_coords) {
        if (w[j] < 0)
          lo[j] += w[j];
        else
          hi[j] += w[j];
      }
    }

    RationalMat gs = gram_schmidt_rows(chosen);
    RationalMat extended = chosen;
    extended.push_back(internal.vectors[y_index]);
    std::optional<RationalVec> best;
    Rational best_dist(0);
    enumerate_box(lo, hi, [&](const std::vector<BigInt>& x) {
      if (all_zero(x)) return;
      RationalVec p = combine(internal.vectors, x);
      auto coords = coords_in_rows(extended, p);
      if (!coords) return;
      // Inside the parallelepiped on the chosen coordinates, and with a
      // nonzero y-component so that p leaves the current span; t in (0,1]
      // keeps y itself as a fallback candidate.
      for (std::size_t i = 0; i + 1 < coords->size(); ++i)
        if ((*coords)[i] < 0 || (*coords)[i] >= 1) return;
      const Rational& t = coords->back();
      if (t <= 0 || t > 1) return;
      Rational d = dist_sq_to_span(p, gs);
      if (d == 0) return;
      if (!best || d < best_dist) {
        best = p;
        best_dist = d;
      }
    });
    if (!best) fail("basis_from_generators: enumeration found no extension");
    chosen.push_back(std::move(*best));
  }
  return Basis::make(std::move(chosen));
}

// Both searches below are exact depth-first enumerations over the
// Gram-Schmidt decomposition: for v = sum x_i b_i the squared norm splits
// as sum_j ((x_j - c_j))^2 ||b~_j||^2 with c_j determined by the levels
// already fixed, so each level is pruned by the remaining budget.
RationalVec brute_force_svp(const Basis& basis) {
  if (basis.rank() > kMaxEnumerationDim)
    fail("brute_force_svp: dimension too large for enumeration");
  const std::size_t n = basis.rank();
  RationalMat gs = gram_schmidt(basis);
  RationalVec gs_sq(n);
  for (std::size_t i = 0; i < n; ++i) gs_sq[i] = squared_norm(gs[i]);
  RationalMat mu(n, RationalVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      mu[i][j] = dot(basis.vectors[i], gs[j]) / gs_sq[j];

  // The shortest input row is an upper bound on the answer.
  Rational bound = squared_norm(basis.vectors.front());
  for (const RationalVec& row : basis.vectors)
    bound = std::min(bound, squared_norm(row));

  std::vector<BigInt> x(n, 0);
  std::optional<std::vector<BigInt>> best;
  Rational best_norm = bound;

  // Depth-first from the last coordinate; `used` is the norm contribution
  // of the levels above `level`.
  auto descend = [&](auto&& self, std::size_t level, const Rational& used) -> void {
    if (level == 0) {
      if (all_zero(x)) return;
      if (!best || used < best_norm) {
        best = x;
        best_norm = used;
      }
      return;
    }
    const std::size_t j = level - 1;
    Rational center(0);
    for (std::size_t i = level; i < n; ++i) center -= mu[i][j] * Rational(x[i]);
    Rational budget = best_norm - used;
    if (budget < 0) return;
    BigInt radius = ceil_sqrt(budget / gs_sq[j]);
    for (BigInt c = rational_ceil(center) - radius;
         c <= rational_floor(center) + radius; ++c) {
      Rational offset = Rational(c) - center;
      Rational contrib = offset * offset * gs_sq[j];
      if (used + contrib > best_norm) continue;
      x[j] = c;
      self(self, level - 1, used + contrib);
    }
    x[j] = 0;
  };
  descend(descend, n, Rational(0));

  if (!best) {
    // No interior point beat the bound strictly; the bound itself is
    // attained by a basis row.
    std::size_t arg = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (squared_norm(basis.vectors[i]) == best_norm) arg = i;
    return basis.vectors[arg];
  }
  return combine(basis.vectors, *best);
}

RationalVec brute_force_cvp(const Basis& basis, const RationalVec& t) {
  if (basis.rank() > kMaxEnumerationDim)
    fail("brute_force_cvp: dimension too large for enumeration");
  if (t.size() != basis.ambient_dim())
    fail("brute_force_cvp: target dimension mismatch");
  const std::size_t n = basis.rank();
  // Least-squares coordinates of t (exact coordinates of its projection).
  RationalMat sys(n, RationalVec(n + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      sys[i][j] = dot(basis.vectors[i], basis.vectors[j]);
    sys[i][n] = dot(basis.vectors[i], t);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sys[pivot][col] == 0) ++pivot;
    if (pivot == n) fail("brute_force_cvp: degenerate Gram matrix");
    std::swap(sys[col], sys[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sys[i][col] == 0) continue;
      Rational f = sys[i][col] / sys[col][col];
      for (std::size_t j = col; j <= n; ++j) sys[i][j] -= f * sys[col][j];
    }
  }
  RationalVec tau(n);
  for (std::size_t i = 0; i < n; ++i) tau[i] = sys[i][n] / sys[i][i];

  RationalMat gs = gram_schmidt(basis);
  RationalVec gs_sq(n);
  for (std::size_t i = 0; i < n; ++i) gs_sq[i] = squared_norm(gs[i]);
  RationalMat mu(n, RationalVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      mu[i][j] = dot(basis.vectors[i], gs[j]) / gs_sq[j];

  auto diff_norm = [&](const RationalVec& p) {
    RationalVec d = t;
    for (std::size_t j = 0; j < d.size(); ++j) d[j] -= p[j];
    return squared_norm(d);
  };

  // Babai rounding gives the initial radius; the enumeration then scans
  // the in-span distance (the out-of-span component is constant).
  std::vector<BigInt> babai(n);
  for (std::size_t i = 0; i < n; ++i) babai[i] = rational_round(tau[i]);
  RationalVec babai_point = combine(basis.vectors, babai);
  Rational perp = diff_norm(babai_point);
  {
    RationalVec delta(n);
    for (std::size_t i = 0; i < n; ++i) delta[i] = Rational(babai[i]) - tau[i];
    // in-span part of the Babai distance
    Rational in_span(0);
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc = delta[j];
      for (std::size_t i = j + 1; i < n; ++i) acc += mu[i][j] * delta[i];
      in_span += acc * acc * gs_sq[j];
    }
    perp -= in_span;  // squared distance from t to span(basis)
  }

  std::vector<BigInt> x(n, 0);
  std::vector<BigInt> best = babai;
  Rational best_norm = diff_norm(babai_point) - perp;

  auto descend = [&](auto&& self, std::size_t level, const Rational& used) -> void {
    if (level == 0) {
      if (used < best_norm) {
        best = x;
        best_norm = used;
      }
      return;
    }
    const std::size_t j = level - 1;
    Rational center = tau[j];
    for (std::size_t i = level; i < n; ++i)
      center -= mu[i][j] * (Rational(x[i]) - tau[i]);
    Rational budget = best_norm - used;
    if (budget < 0) return;
    BigInt radius = ceil_sqrt(budget / gs_sq[j]);
    for (BigInt c = rational_ceil(center) - radius;
         c <= rational_floor(center) + radius; ++c) {
      Rational offset = Rational(c) - center;
      Rational contrib = offset * offset * gs_sq[j];
      if (used + contrib > best_norm) continue;
      x[j] = c;
      self(self, level - 1, used + contrib);
    }
    x[j] = 0;
  };
  descend(descend, n, Rational(0));

  return combine(basis.vectors, best);
}

RationalMat load_matrix(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw Error(ErrorCode::io, "matrix: malformed size line");
  RationalMat out(n, RationalVec(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::string token;
      if (!(in >> token))
        throw Error(ErrorCode::io, "matrix: missing entries");
      try {
        auto slash = token.find('/');
        if (slash == std::string::npos) {
          out[i][j] = Rational(BigInt(token));
        } else {
          out[i][j] = Rational(BigInt(token.substr(0, slash)),
                               BigInt(token.substr(slash + 1)));
        }
      } catch (const std::exception&) {
        throw Error(ErrorCode::io, "matrix: malformed entry " + token);
      }
    }
  }
  return out;
}

RationalMat load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open: " + path);
  return load_matrix(in);
}

void save_vector(std::ostream& out, const RationalVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    if (denominator(v[i]) == 1)
      out << numerator(v[i]);
    else
      out << numerator(v[i]) << '/' << denominator(v[i]);
  }
  out << "\n";
}

}  // namespace lattice
}  // namespace ckkslab
