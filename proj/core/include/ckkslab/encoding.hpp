/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CKKSLAB_ENCODING_HPP
#define CKKSLAB_ENCODING_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "ckkslab/ring.hpp"
#include "ckkslab/sampling.hpp"

namespace ckkslab {

using Complex = std::complex<double>;

/// User-facing message: N/2 complex slots.
struct MessageVector {
  std::vector<Complex> slots;
};

enum class RoundMode {
  nearest,  // round half to even
  random,   // down with probability ceil(c)-c, expectation c
};

/// Evaluation data for the canonical embedding of Z[x]/(x^N + 1).
///
/// Coordinates are indexed by the odd exponents 1, 3, ..., M-1 in ascending
/// order; slots live at the exponents below M/2 and the conjugate partner
/// of exponent j is exponent M-j. beta(i) is the embedding of the monomial
/// x^i, an orthogonal basis of the embedded ring with squared norm N.
/// Immutable and freely shareable.
class EmbeddingContext {
 public:
  explicit EmbeddingContext(std::size_t M);

  std::size_t M() const { return m_; }
  std::size_t N() const { return n_; }
  std::size_t slot_count() const { return n_ / 2; }

  /// The ordered exponent list (all odd residues in [1, M)).
  const std::vector<std::size_t>& exponents() const { return exponents_; }

  /// zeta^e for the M-th root of unity zeta = exp(2*pi*i/M).
  Complex zeta_pow(std::size_t e) const { return zeta_pow_[e % m_]; }

  /// Coordinate vector of sigma(x^i).
  std::vector<Complex> beta(std::size_t i) const;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::size_t> exponents_;
  std::vector<Complex> zeta_pow_;
};

/// sigma(a): evaluate an integer polynomial at every primitive M-th root of
/// unity, in exponent order. Requires a without modulus.
std::vector<Complex> canonical_embed(const EmbeddingContext& ctx,
                                     const RingElement& a);

/// sigma^{-1}(v): coefficients of the polynomial interpolating v at the
/// primitive roots, via the scaled conjugate-transpose Vandermonde.
std::vector<Complex> embed_inverse(const EmbeddingContext& ctx,
                                   const std::vector<Complex>& v);

/// pi^{-1}: place the N/2 slots at the low exponents and their conjugates
/// at the mirror exponents, producing an element of H.
std::vector<Complex> pi_expand(const EmbeddingContext& ctx,
                               const MessageVector& z);

/// pi: extract the slot coordinates. Errors if v is not conjugate-symmetric
/// within tolerance 1e-6.
MessageVector pi_restrict(const EmbeddingContext& ctx,
                          const std::vector<Complex>& v);

/// Projection coefficients <v, beta_i>/||beta_i||^2 onto the embedded-ring
/// basis. Errors if any projection has |Im| >= 1e-6.
std::vector<double> project_onto_sigma(const EmbeddingContext& ctx,
                                       const std::vector<Complex>& v);

/// Coordinate-wise rounding; random mode needs an rng and is unbiased.
std::vector<BigInt> cwr_round(const std::vector<double>& coeffs,
                              RoundMode mode, RngState* rng = nullptr);

/// Full encoding pipeline: expand, scale by delta, project, round,
/// reconstruct the lattice point, invert the embedding, round coefficients.
RingElement encode(const EmbeddingContext& ctx, const MessageVector& z,
                   const BigInt& delta, RoundMode mode = RoundMode::nearest,
                   RngState* rng = nullptr);

/// pi(sigma(m)) / delta.
MessageVector decode(const EmbeddingContext& ctx, const RingElement& m,
                     const BigInt& delta);

/// Infinity norm of the canonical embedding.
double canonical_norm(const EmbeddingContext& ctx, const RingElement& a);

/// Per-slot nearest Gaussian integer.
MessageVector round_to_gaussian_integers(const MessageVector& z);

/// Text form: one slot per line as `<real> <imag>`.
void save_message(std::ostream& out, const MessageVector& z);
MessageVector load_message(std::istream& in);
void save_message_file(const std::string& path, const MessageVector& z);
MessageVector load_message_file(const std::string& path);

}  // namespace ckkslab

#endif
