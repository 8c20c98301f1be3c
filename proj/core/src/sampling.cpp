/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include "ckkslab/sampling.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ckkslab/error.hpp"

namespace ckkslab {

double RngState::uniform_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngState::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform_double();
  double u2 = uniform_double();
  while (u1 <= 0.0) u1 = uniform_double();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

BigInt RngState::uniform_below(const BigInt& bound) {
  if (bound <= 0)
    throw Error(ErrorCode::sampling, "uniform_below: bound must be positive");
  if (bound == 1) return 0;
  const std::size_t bits = msb(BigInt(bound - 1)) + 1;
  const std::size_t words = (bits + 63) / 64;
  for (;;) {
    BigInt x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      x <<= 64;
      x |= BigInt(next_u64());
    }
    x >>= (words * 64 - bits);
    if (x < bound) return x;
  }
}

std::vector<BigInt> sample_hwt(std::size_t n, std::size_t h, RngState& rng) {
  if (h > n)
    throw Error(ErrorCode::sampling, "sample_hwt: h exceeds n");
  std::vector<BigInt> out(n, 0);
  // Partial Fisher-Yates over the index list; the first h slots become the
  // nonzero positions.
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < h; ++i) {
    std::size_t j =
        i + static_cast<std::size_t>(rng.uniform_below(BigInt(n - i)));
    std::swap(idx[i], idx[j]);
    out[idx[i]] = (rng.next_u64() & 1) ? 1 : -1;
  }
  return out;
}

std::vector<BigInt> sample_dg(std::size_t n, double sigma2, RngState& rng) {
  if (sigma2 <= 0.0)
    throw Error(ErrorCode::sampling, "sample_dg: sigma2 must be positive");
  const double sigma = std::sqrt(sigma2);
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = static_cast<long long>(std::llround(sigma * rng.normal()));
  return out;
}

std::vector<BigInt> sample_zo(std::size_t n, double rho, RngState& rng) {
  if (rho <= 0.0 || rho >= 1.0)
    throw Error(ErrorCode::sampling, "sample_zo: rho must be in (0,1)");
  std::vector<BigInt> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    double u = rng.uniform_double();
    if (u < rho / 2.0)
      out[i] = 1;
    else if (u < rho)
      out[i] = -1;
  }
  return out;
}

std::vector<BigInt> sample_uniform(std::size_t n, const BigInt& q, RngState& rng) {
  if (q < 1)
    throw Error(ErrorCode::sampling, "sample_uniform: q must be positive");
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = centered_mod(rng.uniform_below(q), q);
  return out;
}

std::vector<BigInt> StreamSampler::hwt(std::size_t n, std::size_t h) {
  return sample_hwt(n, h, rng_);
}
std::vector<BigInt> StreamSampler::dg(std::size_t n, double sigma2) {
  return sample_dg(n, sigma2, rng_);
}
std::vector<BigInt> StreamSampler::zo(std::size_t n, double rho) {
  return sample_zo(n, rho, rng_);
}
std::vector<BigInt> StreamSampler::uniform(std::size_t n, const BigInt& q) {
  return sample_uniform(n, q, rng_);
}

void OverrideSampler::push(std::vector<BigInt> coeffs) {
  queue_.push_back(std::move(coeffs));
}

std::vector<BigInt> OverrideSampler::pop(std::size_t n) {
  if (queue_.empty())
    throw Error(ErrorCode::sampling, "sampler override exhausted");
  std::vector<BigInt> out = std::move(queue_.front());
  queue_.pop_front();
  if (out.size() != n) {
    std::ostringstream msg;
    msg << "sampler override length mismatch: have " << out.size()
        << ", need " << n;
    throw Error(ErrorCode::sampling, msg.str());
  }
  return out;
}

std::vector<BigInt> OverrideSampler::hwt(std::size_t n, std::size_t) {
  return pop(n);
}
std::vector<BigInt> OverrideSampler::dg(std::size_t n, double) {
  return pop(n);
}
std::vector<BigInt> OverrideSampler::zo(std::size_t n, double) {
  return pop(n);
}
std::vector<BigInt> OverrideSampler::uniform(std::size_t n, const BigInt&) {
  return pop(n);
}

OverrideSampler load_override(std::istream& in) {
  OverrideSampler sampler;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::vector<BigInt> coeffs;
    std::string token;
    while (row >> token) {
      try {
        coeffs.emplace_back(token);
      } catch (const std::exception&) {
        throw Error(ErrorCode::io, "malformed override entry: " + token);
      }
    }
    if (!coeffs.empty()) sampler.push(std::move(coeffs));
  }
  return sampler;
}

OverrideSampler load_override_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open: " + path);
  return load_override(in);
}

}  // namespace ckkslab
