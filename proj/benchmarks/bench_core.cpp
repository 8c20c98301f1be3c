/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include <benchmark/benchmark.h>

#include "ckkslab/ckks.hpp"
#include "ckkslab/encoding.hpp"
#include "ckkslab/params.hpp"
#include "ckkslab/ring.hpp"
#include "ckkslab/sampling.hpp"

using namespace ckkslab;

namespace {

CkksParams bench_params(std::size_t n) {
  CkksParams p;
  p.M = 2 * n;
  p.N = n;
  p.delta = BigInt(1) << 30;
  p.p = BigInt(1) << 30;
  p.q0 = BigInt(1) << 40;
  p.L = 2;
  p.sigma_err = 3.2;
  p.h = n >= 64 ? 64 : 2;
  p.P = p.q_top();
  return p;
}

void BM_ring_mul(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RngState rng(1);
  const BigInt q = BigInt(1) << 60;
  RingElement a = RingElement::from_coeffs(sample_uniform(n, q, rng), q);
  RingElement b = RingElement::from_coeffs(sample_uniform(n, q, rng), q);
  for (auto _ : state) benchmark::DoNotOptimize(ring_mul(a, b));
}
BENCHMARK(BM_ring_mul)->Arg(64)->Arg(256)->Arg(1024);

void BM_encode(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  EmbeddingContext ctx(2 * n);
  RngState rng(2);
  MessageVector z;
  for (std::size_t i = 0; i < n / 2; ++i)
    z.slots.emplace_back(rng.uniform_double(), rng.uniform_double());
  const BigInt delta = BigInt(1) << 30;
  for (auto _ : state) benchmark::DoNotOptimize(encode(ctx, z, delta));
}
BENCHMARK(BM_encode)->Arg(64)->Arg(256)->Arg(1024);

void BM_decode(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  EmbeddingContext ctx(2 * n);
  RngState rng(3);
  MessageVector z;
  for (std::size_t i = 0; i < n / 2; ++i)
    z.slots.emplace_back(rng.uniform_double(), rng.uniform_double());
  const BigInt delta = BigInt(1) << 30;
  RingElement m = encode(ctx, z, delta);
  for (auto _ : state) benchmark::DoNotOptimize(decode(ctx, m, delta));
}
BENCHMARK(BM_decode)->Arg(64)->Arg(256)->Arg(1024);

void BM_encrypt(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  CkksParams p = bench_params(n);
  RngState rng(4);
  StreamSampler sampler(rng);
  KeyMaterial keys = keygen(p, sampler);
  EmbeddingContext ctx(p.M);
  MessageVector z;
  for (std::size_t i = 0; i < n / 2; ++i)
    z.slots.emplace_back(rng.uniform_double(), rng.uniform_double());
  RingElement m = encode(ctx, z, p.delta);
  for (auto _ : state)
    benchmark::DoNotOptimize(encrypt(p, keys.pk, m, sampler));
}
BENCHMARK(BM_encrypt)->Arg(64)->Arg(256);

void BM_decrypt(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  CkksParams p = bench_params(n);
  RngState rng(5);
  StreamSampler sampler(rng);
  KeyMaterial keys = keygen(p, sampler);
  EmbeddingContext ctx(p.M);
  MessageVector z;
  for (std::size_t i = 0; i < n / 2; ++i)
    z.slots.emplace_back(rng.uniform_double(), rng.uniform_double());
  Ciphertext c = encrypt(p, keys.pk, encode(ctx, z, p.delta), sampler);
  for (auto _ : state) benchmark::DoNotOptimize(decrypt(p, keys.sk, c));
}
BENCHMARK(BM_decrypt)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
