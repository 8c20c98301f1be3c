/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "ckkslab/error.hpp"
#include "ckkslab/toy_lwe.hpp"

using namespace ckkslab;
using namespace ckkslab::lwe;

namespace {

std::int64_t mod_q(std::int64_t x, std::int64_t q) {
  std::int64_t r = x % q;
  return r < 0 ? r + q : r;
}

}  // namespace

TEST_CASE("primality testing") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(is_prime(257));
  CHECK(is_prime(4294967311ull));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));   // 7 * 13
  CHECK_FALSE(is_prime(561));  // Carmichael number
  CHECK_FALSE(is_prime(1ull << 40));
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate(LweParams{8, 16, 257}));
  CHECK_THROWS_AS(validate(LweParams{8, 16, 256}), Error);
  CHECK_THROWS_AS(validate(LweParams{0, 16, 257}), Error);
  CHECK(LweParams{8, 16, 257}.noise_bound() == 4);
}

TEST_CASE("key generation invariant") {
  LweParams p{4, 8, 97};
  RngState rng(5);
  LweKeys keys = lwe_gen(p, rng);
  REQUIRE(keys.s.size() == 4);
  REQUIRE(keys.A.size() == 4);
  REQUIRE(keys.b.size() == 8);

  // recompute s^T A and confirm b differs by at most the noise bound
  CHECK(keys_well_formed(p, keys));
  for (std::size_t j = 0; j < p.m; ++j) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < p.n; ++i)
      acc = mod_q(acc + keys.s[i] * keys.A[i][j], p.q);
    CHECK(centered_abs(keys.b[j] - acc, p.q) <= p.noise_bound());
  }

  // determinism
  RngState rng2(5);
  LweKeys again = lwe_gen(p, rng2);
  CHECK(again.s == keys.s);
  CHECK(again.A == keys.A);
  CHECK(again.b == keys.b);

  // tampering is detected
  LweKeys bad = keys;
  bad.b[0] = mod_q(bad.b[0] + p.q / 3, p.q);
  CHECK_FALSE(keys_well_formed(p, bad));
}

TEST_CASE("noiseless keys satisfy b = s^T A") {
  // q/(4m) = 0 forces e = 0
  LweParams p{4, 8, 31};
  REQUIRE(p.noise_bound() == 0);
  RngState rng(7);
  LweKeys keys = lwe_gen(p, rng);
  for (std::size_t j = 0; j < p.m; ++j) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < p.n; ++i)
      acc = mod_q(acc + keys.s[i] * keys.A[i][j], p.q);
    CHECK(keys.b[j] == acc);
  }
}

TEST_CASE("encryption with a forced combination vector") {
  LweParams p{8, 16, 257};
  RngState rng(11);
  LweKeys keys = lwe_gen(p, rng);
  std::vector<std::int64_t> zero_r(p.m, 0);

  LweCiphertext one = lwe_enc_with_r(p, keys, 1, zero_r);
  CHECK(one.u == std::vector<std::int64_t>(p.n, 0));
  CHECK(one.v == (p.q + 1) / 2);

  LweCiphertext zero = lwe_enc_with_r(p, keys, 0, zero_r);
  CHECK(zero.u == std::vector<std::int64_t>(p.n, 0));
  CHECK(zero.v == 0);

  CHECK_THROWS_AS(lwe_enc_with_r(p, keys, 2, zero_r), Error);
  CHECK_THROWS_AS(lwe_enc_with_r(p, keys, 0, std::vector<std::int64_t>(3, 0)),
                  Error);
}

TEST_CASE("correctness identity v - s^T u = e^T r + bit * ceil(q/2)") {
  LweParams p{8, 16, 257};
  RngState rng(13);
  LweKeys keys = lwe_gen(p, rng);

  // e recovered from the public key
  std::vector<std::int64_t> e(p.m);
  for (std::size_t j = 0; j < p.m; ++j) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < p.n; ++i)
      acc = mod_q(acc + keys.s[i] * keys.A[i][j], p.q);
    std::int64_t diff = mod_q(keys.b[j] - acc, p.q);
    e[j] = 2 * diff > p.q ? diff - p.q : diff;
  }

  for (int bit : {0, 1}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> r(p.m);
      for (auto& rj : r) rj = static_cast<std::int64_t>(rng.next_u64() & 1);
      LweCiphertext ct = lwe_enc_with_r(p, keys, bit, r);

      std::int64_t stu = 0;
      for (std::size_t i = 0; i < p.n; ++i)
        stu = mod_q(stu + keys.s[i] * ct.u[i], p.q);
      std::int64_t etr = 0;
      for (std::size_t j = 0; j < p.m; ++j) etr += e[j] * r[j];
      std::int64_t lhs = mod_q(ct.v - stu, p.q);
      std::int64_t rhs = mod_q(etr + bit * ((p.q + 1) / 2), p.q);
      CHECK(lhs == rhs);
      CHECK(centered_abs(etr, p.q) * 4 < p.q);
    }
  }
}

TEST_CASE("decryption basics") {
  LweParams p{8, 16, 257};
  std::vector<std::int64_t> s(p.n, 3);
  LweCiphertext flat{std::vector<std::int64_t>(p.n, 0), 0};
  CHECK(lwe_dec(p, s, flat) == 0);
  LweCiphertext half{std::vector<std::int64_t>(p.n, 0), (p.q + 1) / 2};
  CHECK(lwe_dec(p, s, half) == 1);
}

TEST_CASE("round trips never fail") {
  LweParams p{8, 16, 257};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RngState rng(seed);
    LweKeys keys = lwe_gen(p, rng);
    for (int bit : {0, 1}) {
      for (int trial = 0; trial < 5; ++trial) {
        LweCiphertext ct = lwe_enc(p, keys, bit, rng);
        CHECK(lwe_dec(p, keys.s, ct) == bit);
      }
    }
  }
}

TEST_CASE("centered_abs") {
  CHECK(centered_abs(0, 257) == 0);
  CHECK(centered_abs(1, 257) == 1);
  CHECK(centered_abs(256, 257) == 1);
  CHECK(centered_abs(-3, 257) == 3);
  CHECK(centered_abs(129, 257) == 128);
}
