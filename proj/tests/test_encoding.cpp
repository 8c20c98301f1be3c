/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include "ckkslab/encoding.hpp"
#include "ckkslab/error.hpp"
#include "helpers.hpp"

using namespace ckkslab;
using testing::poly;

namespace {

MessageVector msg(std::initializer_list<Complex> slots) {
  return MessageVector{std::vector<Complex>(slots)};
}

MessageVector random_message(std::size_t slots, RngState& rng,
                             double magnitude = 1.0) {
  MessageVector z;
  z.slots.reserve(slots);
  for (std::size_t i = 0; i < slots; ++i)
    z.slots.emplace_back(magnitude * (2.0 * rng.uniform_double() - 1.0),
                         magnitude * (2.0 * rng.uniform_double() - 1.0));
  return z;
}

RingElement random_poly(std::size_t n, long bound, RngState& rng) {
  std::vector<BigInt> c(n);
  for (auto& x : c)
    x = BigInt(static_cast<long>(rng.uniform_below(BigInt(2 * bound + 1))
                                     .convert_to<long>()) -
               bound);
  return RingElement::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("embedding context layout") {
  EmbeddingContext ctx(8);
  CHECK(ctx.N() == 4);
  CHECK(ctx.slot_count() == 2);
  CHECK(ctx.exponents() == std::vector<std::size_t>{1, 3, 5, 7});

  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Complex> beta = ctx.beta(i);
    for (const Complex& c : beta) CHECK(std::abs(c) == doctest::Approx(1.0));
  }
}

TEST_CASE("canonical_embed") {
  EmbeddingContext ctx(8);
  std::vector<Complex> ones = canonical_embed(ctx, poly({1, 0, 0, 0}));
  for (const Complex& c : ones) {
    CHECK(c.real() == doctest::Approx(1.0));
    CHECK(c.imag() == doctest::Approx(0.0).epsilon(1e-12));
  }

  std::vector<Complex> v =
      canonical_embed(ctx, poly({160, 90, 160, 45}));
  CHECK(v[0].real() == doctest::Approx(191.82).epsilon(1e-4));
  CHECK(v[0].imag() == doctest::Approx(255.46).epsilon(1e-4));

  RngState rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    RingElement a = random_poly(8, 50, rng);
    EmbeddingContext c16(16);
    std::vector<Complex> w = canonical_embed(c16, a);
    // coordinate at exponent j is the conjugate of the one at M - j
    const auto& exps = c16.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      std::size_t mirror = 0;
      while (exps[mirror] != 16 - exps[i]) ++mirror;
      CHECK(std::abs(w[i] - std::conj(w[mirror])) < 1e-8);
    }
  }
}

TEST_CASE("embed_inverse") {
  EmbeddingContext ctx(8);
  // the scaled-and-rounded lattice point reconstructs integer coefficients
  std::vector<Complex> target;
  {
    std::vector<Complex> basis_combo(4, Complex(0, 0));
    const long z[4] = {160, 90, 160, 45};
    for (std::size_t i = 0; i < 4; ++i) {
      std::vector<Complex> beta = ctx.beta(i);
      for (std::size_t j = 0; j < 4; ++j)
        basis_combo[j] += static_cast<double>(z[i]) * beta[j];
    }
    target = basis_combo;
  }
  std::vector<Complex> alpha = embed_inverse(ctx, target);
  const double expect[4] = {160, 90, 160, 45};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(alpha[i].real() == doctest::Approx(expect[i]).epsilon(1e-9));
    CHECK(std::abs(alpha[i].imag()) < 1e-8);
  }

  RngState rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    RingElement a = random_poly(4, 1000, rng);
    std::vector<Complex> back = embed_inverse(ctx, canonical_embed(ctx, a));
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(std::abs(back[i] - Complex(a.coeffs[i].convert_to<double>(), 0)) <
            1e-8);
  }

  std::vector<Complex> zero(4, Complex(0, 0));
  for (const Complex& c : embed_inverse(ctx, zero))
    CHECK(std::abs(c) < 1e-12);
}

TEST_CASE("pi_expand and pi_restrict") {
  EmbeddingContext ctx(8);
  MessageVector z = msg({{3, 4}, {2, -1}});
  std::vector<Complex> v = pi_expand(ctx, z);
  REQUIRE(v.size() == 4);
  // contains the two slots and both conjugates
  auto contains = [&](Complex c) {
    for (const Complex& x : v)
      if (std::abs(x - c) < 1e-12) return true;
    return false;
  };
  CHECK(contains({3, 4}));
  CHECK(contains({2, -1}));
  CHECK(contains({3, -4}));
  CHECK(contains({2, 1}));

  // conjugate pairing: coordinate at exponent M-j conjugates exponent j
  const auto& exps = ctx.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    std::size_t mirror = 0;
    while (exps[mirror] != 8 - exps[i]) ++mirror;
    CHECK(std::abs(v[i] - std::conj(v[mirror])) < 1e-12);
  }

  MessageVector real_slots = msg({{1.5, 0}, {-2.25, 0}});
  std::vector<Complex> rv = pi_expand(ctx, real_slots);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    std::size_t mirror = 0;
    while (exps[mirror] != 8 - exps[i]) ++mirror;
    CHECK(std::abs(rv[i] - rv[mirror]) < 1e-12);
  }

  MessageVector back = pi_restrict(ctx, v);
  REQUIRE(back.slots.size() == 2);
  CHECK(std::abs(back.slots[0] - Complex(3, 4)) < 1e-12);
  CHECK(std::abs(back.slots[1] - Complex(2, -1)) < 1e-12);

  RngState rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    MessageVector r = random_message(2, rng);
    MessageVector rt = pi_restrict(ctx, pi_expand(ctx, r));
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(std::abs(rt.slots[i] - r.slots[i]) < 1e-12);
  }

  std::vector<Complex> asym = v;
  asym[2] += Complex(0.1, 0.1);
  CHECK_THROWS_AS(pi_restrict(ctx, asym), Error);
}

TEST_CASE("pi_restrict matches the decrypted-evaluation slots") {
  EmbeddingContext ctx(8);
  std::vector<Complex> v = canonical_embed(ctx, poly({160, 90, 161, 48}));
  MessageVector z = pi_restrict(ctx, v);
  CHECK(z.slots[0].real() == doctest::Approx(189.70).epsilon(1e-3));
  CHECK(z.slots[0].imag() == doctest::Approx(258.58).epsilon(1e-3));
  CHECK(z.slots[1].real() == doctest::Approx(130.302).epsilon(1e-3));
  CHECK(z.slots[1].imag() == doctest::Approx(-63.419).epsilon(1e-3));
}

TEST_CASE("project_onto_sigma") {
  EmbeddingContext ctx(8);
  std::vector<Complex> v = pi_expand(ctx, msg({{3, 4}, {2, -1}}));
  for (Complex& c : v) c *= 64.0;
  std::vector<double> z = project_onto_sigma(ctx, v);
  REQUIRE(z.size() == 4);
  CHECK(z[0] == doctest::Approx(160).epsilon(0.0005));
  CHECK(z[1] == doctest::Approx(90.5).epsilon(0.0005));
  CHECK(z[2] == doctest::Approx(160).epsilon(0.0005));
  CHECK(z[3] == doctest::Approx(45.2).epsilon(0.002));

  std::vector<Complex> beta2 = ctx.beta(1);
  std::vector<double> unit = project_onto_sigma(ctx, beta2);
  const double expect[4] = {0, 1, 0, 0};
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(unit[i] == doctest::Approx(expect[i]).epsilon(1e-9));

  // exact reconstruction on embedded lattice points
  RngState rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    RingElement a = random_poly(4, 100, rng);
    std::vector<Complex> w = canonical_embed(ctx, a);
    std::vector<double> coords = project_onto_sigma(ctx, w);
    std::vector<Complex> rebuilt(4, Complex(0, 0));
    for (std::size_t i = 0; i < 4; ++i) {
      std::vector<Complex> beta = ctx.beta(i);
      for (std::size_t j = 0; j < 4; ++j) rebuilt[j] += coords[i] * beta[j];
    }
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(std::abs(rebuilt[j] - w[j]) < 1e-8);
  }
}

TEST_CASE("cwr_round") {
  std::vector<double> coords = {160, 90.5, 160, 45.2};
  CHECK(cwr_round(coords, RoundMode::nearest) ==
        testing::vec({160, 90, 160, 45}));

  std::vector<double> ints = {3, -7, 0, 12};
  CHECK(cwr_round(ints, RoundMode::nearest) == testing::vec({3, -7, 0, 12}));
  RngState rng(47);
  CHECK(cwr_round(ints, RoundMode::random, &rng) ==
        testing::vec({3, -7, 0, 12}));

  // random mode is unbiased: mean of rounds of 0.25 near 0.25
  double sum = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> r = cwr_round({0.25}, RoundMode::random, &rng);
    sum += r[0].convert_to<double>();
  }
  double mean = sum / n;
  CHECK(std::abs(mean - 0.25) < 0.02);
  // and within 3 standard errors of the exact expectation
  CHECK(std::abs(mean - 0.25) < 3.0 * std::sqrt(0.25 * 0.75 / n));
}

TEST_CASE("encode golden and trivial") {
  EmbeddingContext ctx(8);
  RingElement m = encode(ctx, msg({{3, 4}, {2, -1}}), BigInt(64));
  CHECK(m == poly({160, 90, 160, 45}));

  RingElement zero = encode(ctx, msg({{0, 0}, {0, 0}}), BigInt(64));
  CHECK(zero == RingElement::zero(4));
}

TEST_CASE("decode golden") {
  EmbeddingContext ctx(8);
  MessageVector z = decode(ctx, poly({160, 90, 161, 48}), BigInt(64));
  REQUIRE(z.slots.size() == 2);
  CHECK(std::abs(z.slots[0] - Complex(2.96, 4.04)) < 0.02);
  CHECK(std::abs(z.slots[1] - Complex(2.03, -0.99)) < 0.02);

  MessageVector rounded = round_to_gaussian_integers(z);
  CHECK(rounded.slots[0] == Complex(3, 4));
  CHECK(rounded.slots[1] == Complex(2, -1));

  MessageVector unit = decode(ctx, poly({64, 0, 0, 0}), BigInt(64));
  for (const Complex& c : unit.slots) CHECK(std::abs(c - Complex(1, 0)) < 1e-9);
}

TEST_CASE("encode/decode round trip bound") {
  RngState rng(53);
  for (std::size_t M : {8u, 16u, 512u}) {
    EmbeddingContext ctx(M);
    const std::size_t N = M / 2;
    const BigInt delta = BigInt(1) << 20;
    const double bound =
        static_cast<double>(N) / (2.0 * std::ldexp(1.0, 20)) + 1e-6;
    for (int trial = 0; trial < (N > 16 ? 5 : 50); ++trial) {
      MessageVector z = random_message(N / 2, rng);
      MessageVector back = decode(ctx, encode(ctx, z, delta), delta);
      for (std::size_t i = 0; i < z.slots.size(); ++i)
        CHECK(std::abs(back.slots[i] - z.slots[i]) <= bound);
    }
  }
}

TEST_CASE("canonical_norm") {
  EmbeddingContext ctx(8);
  CHECK(canonical_norm(ctx, poly({5, 0, 0, 0})) == doctest::Approx(5.0));
  CHECK(canonical_norm(ctx, poly({0, 0, 1, 0})) == doctest::Approx(1.0));

  RngState rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    RingElement a = random_poly(4, 100, rng);
    double direct = 0;
    for (const Complex& c : canonical_embed(ctx, a))
      direct = std::max(direct, std::abs(c));
    CHECK(canonical_norm(ctx, a) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("message serialization round trip") {
  MessageVector z = msg({{3.25, -4.125}, {0.0, 1e-9}});
  std::stringstream buf;
  save_message(buf, z);
  MessageVector back = load_message(buf);
  REQUIRE(back.slots.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(std::abs(back.slots[i] - z.slots[i]) < 1e-15);
}
