/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CKKSLAB_TOY_LWE_HPP
#define CKKSLAB_TOY_LWE_HPP

#include <cstdint>
#include <vector>

#include "ckkslab/sampling.hpp"

namespace ckkslab {
namespace lwe {

/// Single-bit LWE public-key scheme at desk scale. The noise distribution
/// is uniform on [-floor(q/4m), floor(q/4m)], which makes decryption of
/// honest ciphertexts deterministic: |e^T r| <= m * q/(4m) = q/4 and the
/// comparison against q/4 is strict for odd q.
struct LweParams {
  std::size_t n = 0;  // secret dimension
  std::size_t m = 0;  // sample count
  std::int64_t q = 0; // prime modulus

  std::int64_t noise_bound() const { return q / (4 * static_cast<std::int64_t>(m)); }
};

struct LweKeys {
  std::vector<std::int64_t> s;               // secret, length n
  std::vector<std::vector<std::int64_t>> A;  // n x m
  std::vector<std::int64_t> b;               // s^T A + e^T, length m
};

struct LweCiphertext {
  std::vector<std::int64_t> u;  // A r, length n
  std::int64_t v = 0;           // b^T r + bit * ceil(q/2)
};

/// Miller-Rabin, deterministic for 64-bit inputs.
bool is_prime(std::uint64_t x);

/// Throws on non-prime q or degenerate sizes.
void validate(const LweParams& params);

LweKeys lwe_gen(const LweParams& params, RngState& rng);

LweCiphertext lwe_enc(const LweParams& params, const LweKeys& pk, int bit,
                      RngState& rng);

/// Encryption with a caller-chosen binary combination vector r, so the
/// identity v - s^T u = e^T r + bit * ceil(q/2) can be checked term by term.
LweCiphertext lwe_enc_with_r(const LweParams& params, const LweKeys& pk,
                             int bit, const std::vector<std::int64_t>& r);

/// Whether every entry of b - s^T A is within the noise bound (centered).
bool keys_well_formed(const LweParams& params, const LweKeys& keys);

int lwe_dec(const LweParams& params, const std::vector<std::int64_t>& s,
            const LweCiphertext& ct);

/// min(x mod q, q - x mod q): the centered absolute value used by Dec.
std::int64_t centered_abs(std::int64_t x, std::int64_t q);

}  // namespace lwe
}  // namespace ckkslab

#endif
