/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CKKSLAB_NOISE_HPP
#define CKKSLAB_NOISE_HPP

#include <optional>

#include "ckkslab/ckks.hpp"
#include "ckkslab/encoding.hpp"
#include "ckkslab/params.hpp"

namespace ckkslab {

struct NoiseBudget {
  double b_clean = 0.0;
  std::size_t level = 0;
  std::optional<double> measured;
};

/// Heuristic high-probability bound on fresh-encryption noise in the
/// canonical norm: 8*sqrt(2)*sigma*N + 6*sigma*sqrt(N) + 16*sigma*sqrt(h*N).
double b_clean(const CkksParams& params);

/// Whether delta > N + 2*b_clean, the condition under which exact decode
/// of Gaussian-integer messages is guaranteed.
bool decode_safe(const CkksParams& params);

/// Canonical norm of decrypt(sk, c) - m_expected.
double measured_noise(const CkksParams& params, const EmbeddingContext& ctx,
                      const SecretKey& sk, const Ciphertext& c,
                      const RingElement& m_expected);

/// Additive noise bound: the sum.
double add_bound(double n1, double n2);

}  // namespace ckkslab

#endif
