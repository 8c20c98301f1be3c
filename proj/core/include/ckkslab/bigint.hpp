/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CKKSLAB_BIGINT_HPP
#define CKKSLAB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace ckkslab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Centered representative of c mod q, in the range (-q/2, q/2].
inline BigInt centered_mod(const BigInt& c, const BigInt& q) {
  BigInt r = c % q;
  if (r < 0) r += q;
  if (2 * r > q) r -= q;
  return r;
}

// num / den rounded to the nearest integer, ties away from zero. This is
// the single rounding convention used wherever a rounded division appears
// (rescaling, key switching).
inline BigInt round_div(const BigInt& num, const BigInt& den) {
  BigInt d = den < 0 ? -den : den;
  BigInt n = den < 0 ? -num : num;
  BigInt a = n < 0 ? -n : n;
  BigInt q = (2 * a + d) / (2 * d);
  return n < 0 ? -q : q;
}

}  // namespace ckkslab

#endif
