/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CKKSLAB_PARAMS_HPP
#define CKKSLAB_PARAMS_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ckkslab/bigint.hpp"

namespace ckkslab {

/// Public CKKS parameters.
///
/// M is the cyclotomic index (a power of two), N = M/2 the ring degree.
/// Ciphertext moduli form the chain q_l = p^l * q0 for l = 0..L. delta is
/// the encoding scale, sigma_err the error Gaussian parameter, h the
/// secret Hamming weight and P the auxiliary modulus for evaluation keys.
struct CkksParams {
  std::size_t M = 0;
  std::size_t N = 0;
  BigInt delta;
  BigInt p;
  BigInt q0;
  std::size_t L = 0;
  double sigma_err = 0.0;
  std::size_t h = 0;
  BigInt P;

  /// q_L = p^L * q0, the top-level ciphertext modulus.
  BigInt q_top() const;

  /// q_l for a single level.
  BigInt q_at(std::size_t level) const;
};

/// Throws Error(ErrorCode::params) with a distinct message per violated
/// invariant; returns normally iff the parameter set is well formed.
void validate(const CkksParams& params);

/// The full chain [q_0, ..., q_L], strictly increasing.
std::vector<BigInt> modulus_chain(const CkksParams& params);

/// The worked-example parameter set: M=8, chain [5,20,80,320,1280],
/// delta=64, sigma=3.2, h=2, P=q_L.
CkksParams toy_params();

/// A larger functional preset (N=1024, 30-bit delta). Not a claim of
/// cryptographic security.
CkksParams demo_params();

/// Flat `name=value` text format, one parameter per line.
void save_params(std::ostream& out, const CkksParams& params);
CkksParams load_params(std::istream& in);
void save_params_file(const std::string& path, const CkksParams& params);
CkksParams load_params_file(const std::string& path);

}  // namespace ckkslab

#endif
