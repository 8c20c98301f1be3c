/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CKKSLAB_CKKS_HPP
#define CKKSLAB_CKKS_HPP

#include <iosfwd>
#include <string>

#include "ckkslab/params.hpp"
#include "ckkslab/ring.hpp"
#include "ckkslab/sampling.hpp"

namespace ckkslab {

/// sk = (1, s); s is ternary with Hamming weight h, stored over Z.
struct SecretKey {
  RingElement s;
};

/// pk = (b, a) mod q_L with b = -a*s + e.
struct PublicKey {
  RingElement b;
  RingElement a;
};

/// evk = (b', a') mod P*q_L with b' = -a'*s + e' + P*s^2.
struct EvaluationKey {
  RingElement b;
  RingElement a;
};

/// Key-switching material for the Galois image of the secret:
/// b_k = -a_k*s + e_k + P*automorphism(s, k), mod P*q_L.
struct RotationKey {
  std::size_t k = 0;
  RingElement b;
  RingElement a;
};

/// Pair of ring elements mod q_level, with the current encoding scale
/// tracked explicitly so multiply/rescale can enforce alignment.
struct Ciphertext {
  RingElement c0;
  RingElement c1;
  std::size_t level = 0;
  BigInt scale;
};

struct KeyMaterial {
  SecretKey sk;
  PublicKey pk;
  EvaluationKey evk;
};

KeyMaterial keygen(const CkksParams& params, SamplerSource& sampler);

RotationKey make_rotation_key(const CkksParams& params, const SecretKey& sk,
                              std::size_t k, SamplerSource& sampler);

/// Encrypts an integer plaintext polynomial at level L with scale delta.
/// Errors if any |coefficient| >= q_L/4 (library overflow guard).
Ciphertext encrypt(const CkksParams& params, const PublicKey& pk,
                   const RingElement& m, SamplerSource& sampler);

/// Centered lift of c0 + c1*s mod q_level.
RingElement decrypt(const CkksParams& params, const SecretKey& sk,
                    const Ciphertext& c);

/// Componentwise sum; levels and scales must match exactly.
Ciphertext add(const CkksParams& params, const Ciphertext& c1,
               const Ciphertext& c2);

/// Tensor product relinearized through evk; output scale is the product of
/// the input scales and must stay below q_level/2.
Ciphertext multiply(const CkksParams& params, const Ciphertext& c1,
                    const Ciphertext& c2, const EvaluationKey& evk);

/// Rounds both components by q_{l_new}/q_l and drops to level l_new. The
/// tracked scale must be exactly divisible by p^(l - l_new).
Ciphertext rescale(const CkksParams& params, const Ciphertext& c,
                   std::size_t l_new);

/// Galois automorphism on both components with key switching back to s.
Ciphertext rotate(const CkksParams& params, const Ciphertext& c,
                  const RotationKey& rotk);

/// Automorphism without key switching; the result decrypts under
/// automorphism(s, k). Exposed for validating the permutation claim in
/// isolation.
Ciphertext apply_automorphism(const Ciphertext& c, std::size_t k);

// File format: header `type=<sk|pk|evk|rotk|ct> level=<l> scale=<int> k=<exp|->`
// followed by one (sk) or two ring elements.
void save_secret_key(std::ostream& out, const SecretKey& sk);
SecretKey load_secret_key(std::istream& in);
void save_public_key(std::ostream& out, const PublicKey& pk);
PublicKey load_public_key(std::istream& in);
void save_evaluation_key(std::ostream& out, const EvaluationKey& evk);
EvaluationKey load_evaluation_key(std::istream& in);
void save_rotation_key(std::ostream& out, const RotationKey& rotk);
RotationKey load_rotation_key(std::istream& in);
void save_ciphertext(std::ostream& out, const Ciphertext& c);
Ciphertext load_ciphertext(std::istream& in);

void save_secret_key_file(const std::string& path, const SecretKey& sk);
SecretKey load_secret_key_file(const std::string& path);
void save_public_key_file(const std::string& path, const PublicKey& pk);
PublicKey load_public_key_file(const std::string& path);
void save_evaluation_key_file(const std::string& path, const EvaluationKey& evk);
EvaluationKey load_evaluation_key_file(const std::string& path);
void save_rotation_key_file(const std::string& path, const RotationKey& rotk);
RotationKey load_rotation_key_file(const std::string& path);
void save_ciphertext_file(const std::string& path, const Ciphertext& c);
Ciphertext load_ciphertext_file(const std::string& path);

}  // namespace ckkslab

#endif
