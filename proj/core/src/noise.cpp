/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include "ckkslab/noise.hpp"

#include <cmath>

#include "ckkslab/error.hpp"

namespace ckkslab {

double b_clean(const CkksParams& params) {
  const double sigma = params.sigma_err;
  const double n = static_cast<double>(params.N);
  const double h = static_cast<double>(params.h);
  return 8.0 * std::sqrt(2.0) * sigma * n + 6.0 * sigma * std::sqrt(n) +
         16.0 * sigma * std::sqrt(h * n);
}

bool decode_safe(const CkksParams& params) {
  const double delta = params.delta.convert_to<double>();
  return delta > static_cast<double>(params.N) + 2.0 * b_clean(params);
}

double measured_noise(const CkksParams& params, const EmbeddingContext& ctx,
                      const SecretKey& sk, const Ciphertext& c,
                      const RingElement& m_expected) {
  if (m_expected.modulus)
    throw Error(ErrorCode::ckks,
                "measured_noise expects an integer expected plaintext");
  RingElement observed = decrypt(params, sk, c);
  RingElement diff =
      lift(ring_sub(mod_switch(observed, params.q_at(c.level)),
                    mod_switch(m_expected, params.q_at(c.level))));
  return canonical_norm(ctx, diff);
}

double add_bound(double n1, double n2) {
  if (n1 < 0.0 || n2 < 0.0)
    throw Error(ErrorCode::ckks, "add_bound: noise must be non-negative");
  return n1 + n2;
}

}  // namespace ckkslab
