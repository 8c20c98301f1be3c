/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CKKSLAB_RING_HPP
#define CKKSLAB_RING_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ckkslab/bigint.hpp"

namespace ckkslab {

/// Element of Z[x]/(x^N + 1), optionally reduced mod q. Coefficient of x^i
/// sits at index i. When a modulus is present every coefficient is kept in
/// the centered range (-q/2, q/2]. Immutable value type; all operations
/// below are pure.
struct RingElement {
  std::vector<BigInt> coeffs;
  std::optional<BigInt> modulus;

  std::size_t degree_bound() const { return coeffs.size(); }

  static RingElement zero(std::size_t n,
                          std::optional<BigInt> modulus = std::nullopt);
  /// From coefficient list (index 0 first); reduces if a modulus is given.
  static RingElement from_coeffs(std::vector<BigInt> coeffs,
                                 std::optional<BigInt> modulus = std::nullopt);

  bool operator==(const RingElement& other) const = default;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_scalar_mul(const RingElement& a, const BigInt& k);

/// Negacyclic product: polynomial multiply reduced by x^N = -1, then
/// centered mod q if a modulus is present. Schoolbook O(N^2).
RingElement ring_mul(const RingElement& a, const RingElement& b);

/// Centered reduction mod q_new; the result carries modulus q_new.
RingElement mod_switch(const RingElement& a, const BigInt& q_new);

/// Drops the modulus, keeping the centered coefficients as plain integers.
RingElement lift(const RingElement& a);

/// Coefficient-wise (num/den) * c rounded to the nearest integer (ties away
/// from zero). The result has no modulus; callers re-reduce.
RingElement round_scale(const RingElement& a, const BigInt& num,
                        const BigInt& den);

/// a(x^k) reduced by x^N = -1. Requires k odd, 0 < k < 2N.
RingElement automorphism(const RingElement& a, std::size_t k);

/// Largest |coefficient|.
BigInt max_abs_coeff(const RingElement& a);

/// Text form: `N=<int>`, `q=<int|none>`, then space-separated coefficients.
void save_ring_element(std::ostream& out, const RingElement& a);
RingElement load_ring_element(std::istream& in);
void save_ring_element_file(const std::string& path, const RingElement& a);
RingElement load_ring_element_file(const std::string& path);

}  // namespace ckkslab

#endif
