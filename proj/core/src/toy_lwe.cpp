/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include "ckkslab/toy_lwe.hpp"

#include "ckkslab/error.hpp"

namespace ckkslab {
namespace lwe {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t mod_q(std::int64_t x, std::int64_t q) {
  std::int64_t r = x % q;
  return r < 0 ? r + q : r;
}

// Uniform integer in [0, bound).
std::int64_t uniform_below(std::int64_t bound, RngState& rng) {
  return rng.uniform_below(BigInt(bound)).convert_to<std::int64_t>();
}

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  std::uint64_t d = x - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These witnesses are a known deterministic set for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t y = powmod64(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1; ++i) {
      y = mulmod64(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void validate(const LweParams& params) {
  if (params.n == 0 || params.m == 0)
    throw Error(ErrorCode::lwe, "n and m must be positive");
  if (params.q < 2 || !is_prime(static_cast<std::uint64_t>(params.q)))
    throw Error(ErrorCode::lwe, "q must be prime");
}

LweKeys lwe_gen(const LweParams& params, RngState& rng) {
  validate(params);
  const std::int64_t q = params.q;
  const std::int64_t bound = params.noise_bound();
  LweKeys keys;
  keys.s.resize(params.n);
  for (auto& si : keys.s) si = uniform_below(q, rng);
  keys.A.assign(params.n, std::vector<std::int64_t>(params.m));
  for (auto& row : keys.A)
    for (auto& aij : row) aij = uniform_below(q, rng);
  keys.b.resize(params.m);
  for (std::size_t j = 0; j < params.m; ++j) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < params.n; ++i)
      acc = mod_q(acc + keys.s[i] * keys.A[i][j], q);
    // e uniform on [-bound, bound]
    std::int64_t e = uniform_below(2 * bound + 1, rng) - bound;
    keys.b[j] = mod_q(acc + e, q);
  }
  return keys;
}

LweCiphertext lwe_enc(const LweParams& params, const LweKeys& pk, int bit,
                      RngState& rng) {
  std::vector<std::int64_t> r(params.m);
  for (auto& rj : r) rj = static_cast<std::int64_t>(rng.next_u64() & 1);
  return lwe_enc_with_r(params, pk, bit, r);
}

LweCiphertext lwe_enc_with_r(const LweParams& params, const LweKeys& pk,
                             int bit, const std::vector<std::int64_t>& r) {
  if (bit != 0 && bit != 1)
    throw Error(ErrorCode::lwe, "message must be a single bit");
  if (r.size() != params.m)
    throw Error(ErrorCode::lwe, "combination vector length mismatch");
  const std::int64_t q = params.q;
  LweCiphertext ct;
  ct.u.resize(params.n);
  for (std::size_t i = 0; i < params.n; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < params.m; ++j)
      acc = mod_q(acc + pk.A[i][j] * r[j], q);
    ct.u[i] = acc;
  }
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < params.m; ++j)
    acc = mod_q(acc + pk.b[j] * r[j], q);
  ct.v = mod_q(acc + bit * ((q + 1) / 2), q);
  return ct;
}

bool keys_well_formed(const LweParams& params, const LweKeys& keys) {
  const std::int64_t q = params.q;
  for (std::size_t j = 0; j < params.m; ++j) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < params.n; ++i)
      acc = mod_q(acc + keys.s[i] * keys.A[i][j], q);
    if (centered_abs(keys.b[j] - acc, q) > params.noise_bound()) return false;
  }
  return true;
}

std::int64_t centered_abs(std::int64_t x, std::int64_t q) {
  std::int64_t r = mod_q(x, q);
  return std::min(r, q - r);
}

int lwe_dec(const LweParams& params, const std::vector<std::int64_t>& s,
            const LweCiphertext& ct) {
  const std::int64_t q = params.q;
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < params.n; ++i)
    acc = mod_q(acc + s[i] * ct.u[i], q);
  std::int64_t dist = centered_abs(ct.v - acc, q);
  return 4 * dist < q ? 0 : 1;
}

}  // namespace lwe
}  // namespace ckkslab
