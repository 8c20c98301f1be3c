/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CKKSLAB_SAMPLING_HPP
#define CKKSLAB_SAMPLING_HPP

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "ckkslab/bigint.hpp"

namespace ckkslab {

/// Deterministic pseudorandom stream. Identical seeds yield bit-identical
/// sample sequences. Single-owner: parallel callers need independently
/// seeded states.
class RngState {
 public:
  explicit RngState(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 bits of precision.
  double uniform_double();

  /// Standard normal via Box-Muller (explicit, so the stream layout does
  /// not depend on the standard library's distribution internals).
  double normal();

  /// Uniform integer in [0, bound) by rejection, bound >= 1.
  BigInt uniform_below(const BigInt& bound);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// -- direct samplers ---------------------------------------------------------

/// Ternary vector with exactly h nonzero entries, uniform positions and
/// signs. Throws if h > n.
std::vector<BigInt> sample_hwt(std::size_t n, std::size_t h, RngState& rng);

/// Discrete Gaussian with variance sigma2: rounded continuous normal.
std::vector<BigInt> sample_dg(std::size_t n, double sigma2, RngState& rng);

/// Entries are +1 or -1 with probability rho/2 each, 0 otherwise.
std::vector<BigInt> sample_zo(std::size_t n, double rho, RngState& rng);

/// Uniform centered representatives of Z_q, range (-q/2, q/2].
std::vector<BigInt> sample_uniform(std::size_t n, const BigInt& q, RngState& rng);

// -- injectable sampler source ----------------------------------------------

/// The four coefficient distributions behind one interface, so the scheme
/// can run either from a seeded stream or from fixed vectors (used to
/// reproduce worked examples where every random choice is pinned).
class SamplerSource {
 public:
  virtual ~SamplerSource() = default;
  virtual std::vector<BigInt> hwt(std::size_t n, std::size_t h) = 0;
  virtual std::vector<BigInt> dg(std::size_t n, double sigma2) = 0;
  virtual std::vector<BigInt> zo(std::size_t n, double rho) = 0;
  virtual std::vector<BigInt> uniform(std::size_t n, const BigInt& q) = 0;
};

class StreamSampler : public SamplerSource {
 public:
  explicit StreamSampler(RngState& rng) : rng_(rng) {}
  std::vector<BigInt> hwt(std::size_t n, std::size_t h) override;
  std::vector<BigInt> dg(std::size_t n, double sigma2) override;
  std::vector<BigInt> zo(std::size_t n, double rho) override;
  std::vector<BigInt> uniform(std::size_t n, const BigInt& q) override;

 private:
  RngState& rng_;
};

/// Replays fixed coefficient vectors, one per sampler call, in call order.
class OverrideSampler : public SamplerSource {
 public:
  void push(std::vector<BigInt> coeffs);
  bool empty() const { return queue_.empty(); }

  std::vector<BigInt> hwt(std::size_t n, std::size_t h) override;
  std::vector<BigInt> dg(std::size_t n, double sigma2) override;
  std::vector<BigInt> zo(std::size_t n, double rho) override;
  std::vector<BigInt> uniform(std::size_t n, const BigInt& q) override;

 private:
  std::vector<BigInt> pop(std::size_t n);
  std::deque<std::vector<BigInt>> queue_;
};

/// Override file: each non-empty, non-comment line is one vector of
/// space-separated decimal integers, consumed per sampler call in order.
OverrideSampler load_override(std::istream& in);
OverrideSampler load_override_file(const std::string& path);

}  // namespace ckkslab

#endif
