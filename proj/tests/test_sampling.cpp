/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "ckkslab/error.hpp"
#include "ckkslab/sampling.hpp"
#include "helpers.hpp"

using namespace ckkslab;
using testing::vec;

TEST_CASE("samplers are deterministic in the seed") {
  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    RngState r1(seed), r2(seed);
    CHECK(sample_hwt(64, 20, r1) == sample_hwt(64, 20, r2));
    CHECK(sample_dg(64, 10.24, r1) == sample_dg(64, 10.24, r2));
    CHECK(sample_zo(64, 0.5, r1) == sample_zo(64, 0.5, r2));
    CHECK(sample_uniform(64, BigInt(1280), r1) ==
          sample_uniform(64, BigInt(1280), r2));
  }
  RngState a(1), b(2);
  CHECK(sample_uniform(64, BigInt(1u << 30), a) !=
        sample_uniform(64, BigInt(1u << 30), b));
}

TEST_CASE("hwt weight and support") {
  RngState rng(7);
  CHECK(sample_hwt(4, 0, rng) == vec({0, 0, 0, 0}));

  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigInt> s = sample_hwt(100, 37, rng);
    REQUIRE(s.size() == 100);
    std::size_t nonzero = 0;
    for (const BigInt& x : s) {
      CHECK((x == -1 || x == 0 || x == 1));
      if (x != 0) ++nonzero;
    }
    CHECK(nonzero == 37);
  }

  CHECK_THROWS_AS(sample_hwt(4, 5, rng), Error);
}

TEST_CASE("dg variance and tails") {
  const double sigma2 = 10.24;
  const std::size_t n = 100000;
  RngState rng(11);
  std::vector<BigInt> draws = sample_dg(n, sigma2, rng);
  REQUIRE(draws.size() == n);

  double sum = 0.0, sum_sq = 0.0;
  std::size_t tail = 0;
  const double cut = 6.0 * std::sqrt(sigma2);
  for (const BigInt& x : draws) {
    double v = x.convert_to<double>();
    sum += v;
    sum_sq += v * v;
    if (std::abs(v) > cut) ++tail;
  }
  double mean = sum / n;
  double var = sum_sq / n - mean * mean;
  CHECK(var == doctest::Approx(sigma2).epsilon(0.05));
  CHECK(static_cast<double>(tail) / n <= 1e-4);
}

TEST_CASE("zo support and frequency") {
  RngState rng(13);
  CHECK(sample_zo(0, 0.5, rng).empty());

  const double rho = 0.5;
  const std::size_t n = 100000;
  std::vector<BigInt> draws = sample_zo(n, rho, rng);
  std::size_t plus = 0, minus = 0;
  for (const BigInt& x : draws) {
    CHECK((x == -1 || x == 0 || x == 1));
    if (x == 1) ++plus;
    if (x == -1) ++minus;
  }
  double nonzero_frac = static_cast<double>(plus + minus) / n;
  double tol = 3.0 * std::sqrt(rho * (1 - rho) / n);
  CHECK(std::abs(nonzero_frac - rho) < tol);
  // signs balanced within binomial noise as well
  double plus_frac = static_cast<double>(plus) / (plus + minus);
  CHECK(std::abs(plus_frac - 0.5) < 3.0 * std::sqrt(0.25 / (plus + minus)));
}

TEST_CASE("uniform sampling is centered and uniform") {
  RngState rng(17);
  CHECK(sample_uniform(8, BigInt(1), rng) == vec({0, 0, 0, 0, 0, 0, 0, 0}));

  for (long q : {5L, 1280L}) {
    std::vector<BigInt> draws = sample_uniform(2000, BigInt(q), rng);
    for (const BigInt& x : draws) {
      CHECK(2 * x > -q);
      CHECK(2 * x <= q);
    }
  }

  // chi-square over Z_97, 1e5 draws; 149.45 is the 99.9th percentile of
  // chi-square with 96 degrees of freedom.
  const long q = 97;
  const std::size_t n = 100000;
  std::vector<std::size_t> counts(q, 0);
  std::vector<BigInt> draws = sample_uniform(n, BigInt(q), rng);
  for (const BigInt& x : draws) {
    long centered = x.convert_to<long>();
    counts[(centered % q + q) % q]++;
  }
  const double expected = static_cast<double>(n) / q;
  double stat = 0.0;
  for (std::size_t c : counts) {
    double d = c - expected;
    stat += d * d / expected;
  }
  CHECK(stat < 149.45);
}

TEST_CASE("override sampler replays fixed vectors in call order") {
  OverrideSampler ov;
  ov.push(vec({0, 1, -1, 0}));
  ov.push(vec({-221, 67, -15, 103}));
  ov.push(vec({1, 1, 0, 0}));

  CHECK(ov.hwt(4, 2) == vec({0, 1, -1, 0}));
  CHECK(ov.uniform(4, BigInt(1280)) == vec({-221, 67, -15, 103}));
  CHECK(ov.dg(4, 10.24) == vec({1, 1, 0, 0}));
  CHECK(ov.empty());

  CHECK_THROWS_AS(ov.zo(4, 0.5), Error);

  OverrideSampler wrong;
  wrong.push(vec({1, 2}));
  CHECK_THROWS_AS(wrong.uniform(4, BigInt(97)), Error);
}

TEST_CASE("override file parsing") {
  std::stringstream in(
      "# keygen vectors\n"
      "0 1 -1 0\n"
      "\n"
      "-221 67 -15 103\n");
  OverrideSampler ov = load_override(in);
  CHECK(ov.hwt(4, 2) == vec({0, 1, -1, 0}));
  CHECK(ov.uniform(4, BigInt(1280)) == vec({-221, 67, -15, 103}));
  CHECK(ov.empty());
}
