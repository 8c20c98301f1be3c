/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CKKSLAB_TESTS_HELPERS_HPP
#define CKKSLAB_TESTS_HELPERS_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "ckkslab/bigint.hpp"
#include "ckkslab/ring.hpp"

namespace ckkslab {
namespace testing {

// Ring element from coefficients listed low degree first.
inline RingElement poly(std::initializer_list<long> coeffs,
                        std::optional<BigInt> modulus = std::nullopt) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.emplace_back(v);
  return RingElement::from_coeffs(std::move(c), std::move(modulus));
}

inline std::vector<BigInt> vec(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace testing
}  // namespace ckkslab

#endif
