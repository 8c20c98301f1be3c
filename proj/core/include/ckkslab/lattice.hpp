/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CKKSLAB_LATTICE_HPP
#define CKKSLAB_LATTICE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ckkslab/bigint.hpp"

namespace ckkslab {
namespace lattice {

using RationalVec = std::vector<Rational>;
using RationalMat = std::vector<RationalVec>;
using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;

/// n linearly independent rational vectors in dimension m (n <= m), the
/// rows of `vectors`. Rank is verified at construction by exact
/// elimination. Everything in this module uses exact rational arithmetic
/// so boundary and determinant cases are decidable.
struct Basis {
  RationalMat vectors;

  std::size_t rank() const { return vectors.size(); }
  std::size_t ambient_dim() const {
    return vectors.empty() ? 0 : vectors.front().size();
  }

  static Basis make(RationalMat vectors);  // throws on rank deficiency
};

Rational dot(const RationalVec& a, const RationalVec& b);
Rational squared_norm(const RationalVec& v);

/// Classic Gram-Schmidt; pairwise dot products of the output are exactly 0.
RationalMat gram_schmidt(const Basis& basis);

/// min_i ||b~_i|| as a double, with the exact squared value available for
/// strict comparisons.
Rational lambda1_lower_bound_sq(const Basis& basis);
double lambda1_lower_bound(const Basis& basis);

/// Integer matrix with determinant +-1.
bool is_unimodular(const RationalMat& u);

/// Exact determinant of a square rational matrix.
Rational determinant(const RationalMat& m);

/// Whether the two bases generate the same lattice (the exact change of
/// basis is unimodular).
bool same_lattice(const Basis& b1, const Basis& b2);

/// Whether v lies in the half-open fundamental parallelepiped of the
/// basis. Errors if v is outside the span.
bool in_parallelepiped(const RationalVec& v, const Basis& basis);

/// Parallelepiped basis criterion: candidate vectors (which must lie in
/// the lattice of `basis`) form a basis iff no nonzero lattice point lies
/// in their fundamental parallelepiped. Decided by bounded enumeration.
bool is_basis_of(const Basis& candidate, const Basis& basis);

/// Basis of the integer span of a finite generator list, built by the
/// constructive procedure: shortest vector first, then repeatedly adjoin
/// the lattice point outside the current span that is closest to it.
Basis basis_from_generators(const IntMat& generators);

/// Exact shortest nonzero lattice vector by enumeration (dim <= 6).
RationalVec brute_force_svp(const Basis& basis);

/// Exact nearest lattice vector to t by enumeration around the Babai
/// rounding candidate (dim <= 6).
RationalVec brute_force_cvp(const Basis& basis, const RationalVec& t);

/// Matrix file: first line `n m`, then n rows of m rationals (`p/q` or
/// plain integers).
RationalMat load_matrix(std::istream& in);
RationalMat load_matrix_file(const std::string& path);
void save_vector(std::ostream& out, const RationalVec& v);

}  // namespace lattice
}  // namespace ckkslab

#endif
