/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include <doctest.h>

#include <cmath>
#include <complex>

#include "ckkslab/noise.hpp"
#include "helpers.hpp"

using namespace ckkslab;
using testing::poly;
using testing::vec;

namespace {

double closed_form(double sigma, double n, double h) {
  return 8.0 * std::sqrt(2.0) * sigma * n + 6.0 * sigma * std::sqrt(n) +
         16.0 * sigma * std::sqrt(h * n);
}

}  // namespace

TEST_CASE("b_clean closed form") {
  CkksParams p = toy_params();
  CHECK(b_clean(p) == doctest::Approx(328.0).epsilon(0.0005));

  CkksParams tiny = p;
  tiny.sigma_err = 1e-9;
  CHECK(b_clean(tiny) < 1e-5);

  // monotone in sigma, N and h
  CkksParams more_sigma = p;
  more_sigma.sigma_err = 4.0;
  CHECK(b_clean(more_sigma) > b_clean(p));
  CkksParams more_n = p;
  more_n.M = 16;
  more_n.N = 8;
  CHECK(b_clean(more_n) > b_clean(p));
  CkksParams more_h = p;
  more_h.h = 4;
  CHECK(b_clean(more_h) > b_clean(p));

  for (std::size_t n : {4u, 64u, 1024u}) {
    for (std::size_t h : {1u, 2u, 4u}) {
      CkksParams r = p;
      r.M = 2 * n;
      r.N = n;
      r.h = h;
      r.sigma_err = 3.2;
      double expect = closed_form(3.2, static_cast<double>(n),
                                  static_cast<double>(h));
      CHECK(b_clean(r) == doctest::Approx(expect).epsilon(1e-9));
    }
  }
}

TEST_CASE("decode_safe") {
  CHECK_FALSE(decode_safe(toy_params()));  // 64 < 4 + 2 * 328

  CkksParams big = toy_params();
  big.delta = BigInt(100000);
  CHECK(decode_safe(big));

  // strict inequality at the boundary
  CkksParams edge = toy_params();
  edge.sigma_err = 0.5;
  double bound = static_cast<double>(edge.N) + 2.0 * b_clean(edge);
  edge.delta = BigInt(static_cast<long>(std::floor(bound)));
  CHECK_FALSE(decode_safe(edge));
  edge.delta = BigInt(static_cast<long>(std::ceil(bound)) + 1);
  CHECK(decode_safe(edge));
}

TEST_CASE("measured_noise") {
  CkksParams p = toy_params();
  EmbeddingContext ctx(p.M);

  SUBCASE("trivial ciphertext has zero noise") {
    RingElement m = poly({7, -3, 2, 1});
    Ciphertext c{mod_switch(m, p.q_top()), RingElement::zero(4, p.q_top()),
                 p.L, p.delta};
    SecretKey sk{poly({0, 1, -1, 0})};
    CHECK(measured_noise(p, ctx, sk, c, m) == doctest::Approx(0.0));
  }

  SUBCASE("worked-example ciphertext noise") {
    SecretKey sk{poly({0, 1, -1, 0})};
    Ciphertext c{poly({159, 497, -210, 247}, BigInt(1280)),
                 poly({-289, 82, -117, -118}, BigInt(1280)), p.L, p.delta};
    RingElement m = poly({160, 90, 160, 45});
    double measured = measured_noise(p, ctx, sk, c, m);

    // the decryption differs from m by x^2 + 3x^3; evaluate that directly
    double direct = 0.0;
    for (std::size_t e : {1u, 3u, 5u, 7u}) {
      double theta = 2.0 * std::acos(-1.0) * e / 8.0;
      Complex zeta(std::cos(theta), std::sin(theta));
      Complex val = zeta * zeta + 3.0 * zeta * zeta * zeta;
      direct = std::max(direct, std::abs(val));
    }
    CHECK(measured == doctest::Approx(direct).epsilon(1e-9));
    CHECK(measured < b_clean(p));
  }

  SUBCASE("statistical bound on fresh encryptions") {
    RngState rng(211);
    StreamSampler sampler(rng);
    const double bound = b_clean(p);
    int ok = 0;
    const int trials = 300;
    KeyMaterial km = keygen(p, sampler);
    for (int t = 0; t < trials; ++t) {
      Ciphertext c = encrypt(p, km.pk, RingElement::zero(4), sampler);
      double m = measured_noise(p, ctx, km.sk, c, RingElement::zero(4));
      if (m < bound) ++ok;
      if (m == 0.0) continue;  // possible but unlikely; still counts above
    }
    CHECK(ok >= trials * 99 / 100);
  }
}

TEST_CASE("add_bound") {
  CHECK(add_bound(0.0, 0.0) == 0.0);
  CkksParams p = toy_params();
  CHECK(add_bound(b_clean(p), b_clean(p)) ==
        doctest::Approx(2.0 * b_clean(p)));

  // empirical dominance: noise of a sum never exceeds the sum of noises
  EmbeddingContext ctx(p.M);
  RngState rng(223);
  StreamSampler sampler(rng);
  KeyMaterial km = keygen(p, sampler);
  RingElement zero = RingElement::zero(4);
  for (int t = 0; t < 200; ++t) {
    Ciphertext c1 = encrypt(p, km.pk, zero, sampler);
    Ciphertext c2 = encrypt(p, km.pk, zero, sampler);
    double n1 = measured_noise(p, ctx, km.sk, c1, zero);
    double n2 = measured_noise(p, ctx, km.sk, c2, zero);
    double ns = measured_noise(p, ctx, km.sk, add(p, c1, c2), zero);
    CHECK(ns <= add_bound(n1, n2) + 1e-6);
  }
}
