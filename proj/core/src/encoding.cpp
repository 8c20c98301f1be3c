/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include "ckkslab/encoding.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ckkslab/error.hpp"

namespace ckkslab {

namespace {

constexpr double kTolerance = 1e-6;

double to_double(const BigInt& v) { return v.convert_to<double>(); }

// Position of exponent e in the ascending odd-exponent list.
std::size_t exponent_index(std::size_t e) { return (e - 1) / 2; }

}  // namespace

EmbeddingContext::EmbeddingContext(std::size_t M) : m_(M), n_(M / 2) {
  if (M <= 2 || (M & (M - 1)) != 0)
    throw Error(ErrorCode::encoding, "M must be a power of two greater than 2");
  exponents_.reserve(n_);
  for (std::size_t e = 1; e < m_; e += 2) exponents_.push_back(e);
  zeta_pow_.resize(m_);
  for (std::size_t e = 0; e < m_; ++e) {
    double angle = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(m_);
    zeta_pow_[e] = Complex(std::cos(angle), std::sin(angle));
  }
}

std::vector<Complex> EmbeddingContext::beta(std::size_t i) const {
  std::vector<Complex> out(n_);
  for (std::size_t j = 0; j < n_; ++j)
    out[j] = zeta_pow_[(exponents_[j] * i) % m_];
  return out;
}

std::vector<Complex> canonical_embed(const EmbeddingContext& ctx,
                                     const RingElement& a) {
  if (a.modulus)
    throw Error(ErrorCode::encoding,
                "canonical_embed expects an integer polynomial");
  if (a.coeffs.size() != ctx.N())
    throw Error(ErrorCode::encoding, "canonical_embed: degree mismatch");
  std::vector<Complex> out(ctx.N());
  for (std::size_t j = 0; j < ctx.N(); ++j) {
    const std::size_t e = ctx.exponents()[j];
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < ctx.N(); ++i)
      acc += to_double(a.coeffs[i]) * ctx.zeta_pow(e * i);
    out[j] = acc;
  }
  return out;
}

std::vector<Complex> embed_inverse(const EmbeddingContext& ctx,
                                   const std::vector<Complex>& v) {
  const std::size_t n = ctx.N();
  if (v.size() != n)
    throw Error(ErrorCode::encoding, "embed_inverse: length mismatch");
  // The Vandermonde over the primitive roots is unitary up to sqrt(N), so
  // the inverse is the scaled conjugate transpose.
  std::vector<Complex> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t e = ctx.exponents()[j];
      acc += std::conj(ctx.zeta_pow(e * i)) * v[j];
    }
    coeffs[i] = acc / static_cast<double>(n);
  }
  // Residual check against the interpolation conditions.
  double scale = 1.0;
  for (const Complex& c : v) scale = std::max(scale, std::abs(c));
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t e = ctx.exponents()[j];
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) acc += coeffs[i] * ctx.zeta_pow(e * i);
    if (std::abs(acc - v[j]) > kTolerance * scale * static_cast<double>(n))
      throw Error(ErrorCode::encoding, "embed_inverse: residual too large");
  }
  return coeffs;
}

std::vector<Complex> pi_expand(const EmbeddingContext& ctx,
                               const MessageVector& z) {
  if (z.slots.size() != ctx.slot_count())
    throw Error(ErrorCode::encoding, "pi_expand: slot count mismatch");
  std::vector<Complex> out(ctx.N());
  for (std::size_t t = 0; t < ctx.slot_count(); ++t) {
    const std::size_t e = 2 * t + 1;  // ascending odd exponents below M/2
    out[exponent_index(e)] = z.slots[t];
    out[exponent_index(ctx.M() - e)] = std::conj(z.slots[t]);
  }
  return out;
}

MessageVector pi_restrict(const EmbeddingContext& ctx,
                          const std::vector<Complex>& v) {
  if (v.size() != ctx.N())
    throw Error(ErrorCode::encoding, "pi_restrict: length mismatch");
  double scale = 1.0;
  for (const Complex& c : v) scale = std::max(scale, std::abs(c));
  MessageVector z;
  z.slots.reserve(ctx.slot_count());
  for (std::size_t t = 0; t < ctx.slot_count(); ++t) {
    const std::size_t e = 2 * t + 1;
    const Complex& a = v[exponent_index(e)];
    const Complex& b = v[exponent_index(ctx.M() - e)];
    if (std::abs(a - std::conj(b)) > kTolerance * scale)
      throw Error(ErrorCode::encoding,
                  "pi_restrict: input is not conjugate-symmetric");
    z.slots.push_back(a);
  }
  return z;
}

std::vector<double> project_onto_sigma(const EmbeddingContext& ctx,
                                       const std::vector<Complex>& v) {
  if (v.size() != ctx.N())
    throw Error(ErrorCode::encoding, "project_onto_sigma: length mismatch");
  double scale = 1.0;
  for (const Complex& c : v) scale = std::max(scale, std::abs(c));
  std::vector<double> out(ctx.N());
  for (std::size_t i = 0; i < ctx.N(); ++i) {
    // Hermitian inner product with beta_i; ||beta_i||^2 = N.
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < ctx.N(); ++j) {
      const std::size_t e = ctx.exponents()[j];
      acc += v[j] * std::conj(ctx.zeta_pow(e * i));
    }
    acc /= static_cast<double>(ctx.N());
    if (std::abs(acc.imag()) > kTolerance * scale)
      throw Error(ErrorCode::encoding,
                  "project_onto_sigma: projection is not real");
    out[i] = acc.real();
  }
  return out;
}

std::vector<BigInt> cwr_round(const std::vector<double>& coeffs,
                              RoundMode mode, RngState* rng) {
  if (mode == RoundMode::random && rng == nullptr)
    throw Error(ErrorCode::encoding, "cwr_round: random mode needs an rng");
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (double c : coeffs) {
    if (mode == RoundMode::nearest) {
      // Round half to even. Projections of conjugate-symmetric vectors often
      // land a hair away from an exact half integer (e.g. 64*sqrt(2) =
      // 90.5096...), so anything within kHalfTieTolerance of .5 is treated as
      // a tie rather than left to the sign of the numerical noise.
      constexpr double kHalfTieTolerance = 0.02;
      const double fl = std::floor(c);
      const double frac = c - fl;
      if (std::abs(frac - 0.5) <= kHalfTieTolerance) {
        const long long lo = static_cast<long long>(fl);
        out.emplace_back(lo % 2 == 0 ? lo : lo + 1);
      } else {
        out.emplace_back(static_cast<long long>(std::nearbyint(c)));
      }
    } else {
      double fl = std::floor(c);
      double frac = c - fl;
      double u = rng->uniform_double();
      out.emplace_back(static_cast<long long>(u < 1.0 - frac ? fl : fl + 1.0));
    }
  }
  return out;
}

RingElement encode(const EmbeddingContext& ctx, const MessageVector& z,
                   const BigInt& delta, RoundMode mode, RngState* rng) {
  if (delta <= 0) throw Error(ErrorCode::encoding, "encode: delta must be positive");
  std::vector<Complex> expanded = pi_expand(ctx, z);
  const double d = to_double(delta);
  for (Complex& c : expanded) c *= d;
  std::vector<double> proj = project_onto_sigma(ctx, expanded);
  std::vector<BigInt> rounded = cwr_round(proj, mode, rng);
  // Reconstruct the lattice point and invert the embedding; the recovered
  // coefficients must be (numerically) the rounded projections.
  std::vector<Complex> point(ctx.N(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < ctx.N(); ++i) {
    const double zi = to_double(rounded[i]);
    for (std::size_t j = 0; j < ctx.N(); ++j) {
      const std::size_t e = ctx.exponents()[j];
      point[j] += zi * ctx.zeta_pow(e * i);
    }
  }
  std::vector<Complex> coeffs = embed_inverse(ctx, point);
  double scale = 1.0;
  for (const BigInt& r : rounded)
    scale = std::max(scale, std::abs(to_double(r)));
  std::vector<BigInt> integer_coeffs;
  integer_coeffs.reserve(ctx.N());
  for (const Complex& c : coeffs) {
    double rounded_c = std::nearbyint(c.real());
    if (std::abs(c.real() - rounded_c) >
            kTolerance * scale * static_cast<double>(ctx.N()) ||
        std::abs(c.imag()) > kTolerance * scale * static_cast<double>(ctx.N()))
      throw Error(ErrorCode::encoding, "encode: non-integer coefficient residual");
    integer_coeffs.emplace_back(static_cast<long long>(rounded_c));
  }
  return RingElement::from_coeffs(std::move(integer_coeffs));
}

MessageVector decode(const EmbeddingContext& ctx, const RingElement& m,
                     const BigInt& delta) {
  if (delta <= 0) throw Error(ErrorCode::encoding, "decode: delta must be positive");
  RingElement a = m.modulus ? lift(m) : m;
  std::vector<Complex> embedded = canonical_embed(ctx, a);
  MessageVector z = pi_restrict(ctx, embedded);
  const double d = to_double(delta);
  for (Complex& slot : z.slots) slot /= d;
  return z;
}

double canonical_norm(const EmbeddingContext& ctx, const RingElement& a) {
  RingElement v = a.modulus ? lift(a) : a;
  double best = 0.0;
  for (const Complex& c : canonical_embed(ctx, v))
    best = std::max(best, std::abs(c));
  return best;
}

MessageVector round_to_gaussian_integers(const MessageVector& z) {
  MessageVector out;
  out.slots.reserve(z.slots.size());
  for (const Complex& c : z.slots)
    out.slots.emplace_back(std::nearbyint(c.real()), std::nearbyint(c.imag()));
  return out;
}

void save_message(std::ostream& out, const MessageVector& z) {
  out << std::setprecision(17);
  for (const Complex& c : z.slots) out << c.real() << ' ' << c.imag() << "\n";
}

MessageVector load_message(std::istream& in) {
  MessageVector z;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    double re = 0.0, im = 0.0;
    if (!(row >> re >> im))
      throw Error(ErrorCode::io, "malformed message line: " + line);
    z.slots.emplace_back(re, im);
  }
  return z;
}

void save_message_file(const std::string& path, const MessageVector& z) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot open for writing: " + path);
  save_message(out, z);
}

MessageVector load_message_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open: " + path);
  return load_message(in);
}

}  // namespace ckkslab
