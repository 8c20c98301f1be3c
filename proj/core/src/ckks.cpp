/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include "ckkslab/ckks.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ckkslab/encoding.hpp"
#include "ckkslab/error.hpp"

namespace ckkslab {

namespace {

double sigma2(const CkksParams& params) {
  return params.sigma_err * params.sigma_err;
}

// Sanity bound on key noise, checked at generation: the reconstructed
// error term must have canonical norm at most 8*sigma*sqrt(N).
void check_key_noise(const CkksParams& params, const RingElement& noise,
                     const char* what) {
  EmbeddingContext ctx(params.M);
  const double bound =
      8.0 * params.sigma_err * std::sqrt(static_cast<double>(params.N));
  if (canonical_norm(ctx, noise) > bound)
    throw Error(ErrorCode::ckks,
                std::string(what) + ": key noise exceeds sanity bound");
}

void check_level(const CkksParams& params, const Ciphertext& c) {
  if (c.level > params.L)
    throw Error(ErrorCode::ckks, "ciphertext level exceeds L");
  const BigInt q = params.q_at(c.level);
  if (!c.c0.modulus || *c.c0.modulus != q || !c.c1.modulus ||
      *c.c1.modulus != q)
    throw Error(ErrorCode::ckks, "ciphertext modulus does not match its level");
}

// Key-switch core: round(P^{-1} * d * key_component) mod q.
RingElement switch_term(const RingElement& d, const RingElement& key_part,
                        const BigInt& P, const BigInt& q) {
  RingElement prod = ring_mul(lift(d), lift(key_part));
  return mod_switch(round_scale(prod, 1, P), q);
}

}  // namespace

KeyMaterial keygen(const CkksParams& params, SamplerSource& sampler) {
  validate(params);
  const BigInt qL = params.q_top();
  const BigInt PqL = params.P * qL;

  // Sampler call order is part of the override-file contract:
  // s, a, e, a', e'.
  RingElement s = RingElement::from_coeffs(sampler.hwt(params.N, params.h));
  RingElement a =
      RingElement::from_coeffs(sampler.uniform(params.N, qL), qL);
  RingElement e =
      RingElement::from_coeffs(sampler.dg(params.N, sigma2(params)), qL);
  RingElement s_q = mod_switch(s, qL);
  RingElement b = ring_add(ring_neg(ring_mul(a, s_q)), e);
  check_key_noise(params, ring_add(b, ring_mul(a, s_q)), "public key");

  RingElement a2 =
      RingElement::from_coeffs(sampler.uniform(params.N, PqL), PqL);
  RingElement e2 =
      RingElement::from_coeffs(sampler.dg(params.N, sigma2(params)), PqL);
  RingElement s_pq = mod_switch(s, PqL);
  RingElement ps2 = ring_scalar_mul(ring_mul(s_pq, s_pq), params.P);
  RingElement b2 = ring_add(ring_add(ring_neg(ring_mul(a2, s_pq)), e2), ps2);
  check_key_noise(params,
                  ring_sub(ring_add(b2, ring_mul(a2, s_pq)), ps2),
                  "evaluation key");

  return KeyMaterial{SecretKey{std::move(s)},
                     PublicKey{std::move(b), std::move(a)},
                     EvaluationKey{std::move(b2), std::move(a2)}};
}

RotationKey make_rotation_key(const CkksParams& params, const SecretKey& sk,
                              std::size_t k, SamplerSource& sampler) {
  if (k == 0 || k >= params.M || k % 2 == 0)
    throw Error(ErrorCode::ckks, "rotation exponent must be odd and in (0, M)");
  const BigInt PqL = params.P * params.q_top();
  RingElement a =
      RingElement::from_coeffs(sampler.uniform(params.N, PqL), PqL);
  RingElement e =
      RingElement::from_coeffs(sampler.dg(params.N, sigma2(params)), PqL);
  RingElement s_pq = mod_switch(sk.s, PqL);
  RingElement ps_k =
      ring_scalar_mul(automorphism(s_pq, k), params.P);
  RingElement b = ring_add(ring_add(ring_neg(ring_mul(a, s_pq)), e), ps_k);
  check_key_noise(params, ring_sub(ring_add(b, ring_mul(a, s_pq)), ps_k),
                  "rotation key");
  return RotationKey{k, std::move(b), std::move(a)};
}

Ciphertext encrypt(const CkksParams& params, const PublicKey& pk,
                   const RingElement& m, SamplerSource& sampler) {
  const BigInt qL = params.q_top();
  if (m.modulus)
    throw Error(ErrorCode::ckks, "encrypt expects an integer plaintext");
  if (4 * max_abs_coeff(m) >= qL)
    throw Error(ErrorCode::ckks, "plaintext coefficients too large for q_L");
  // Call order: v, e0, e1.
  RingElement v = RingElement::from_coeffs(sampler.zo(params.N, 0.5), qL);
  RingElement e0 =
      RingElement::from_coeffs(sampler.dg(params.N, sigma2(params)), qL);
  RingElement e1 =
      RingElement::from_coeffs(sampler.dg(params.N, sigma2(params)), qL);
  RingElement m_q = mod_switch(m, qL);
  Ciphertext c;
  c.c0 = ring_add(ring_add(ring_mul(v, pk.b), m_q), e0);
  c.c1 = ring_add(ring_mul(v, pk.a), e1);
  c.level = params.L;
  c.scale = params.delta;
  return c;
}

RingElement decrypt(const CkksParams& params, const SecretKey& sk,
                    const Ciphertext& c) {
  check_level(params, c);
  RingElement s_q = mod_switch(sk.s, params.q_at(c.level));
  return lift(ring_add(c.c0, ring_mul(c.c1, s_q)));
}

Ciphertext add(const CkksParams& params, const Ciphertext& c1,
               const Ciphertext& c2) {
  check_level(params, c1);
  check_level(params, c2);
  if (c1.level != c2.level)
    throw Error(ErrorCode::ckks, "add: level mismatch");
  if (c1.scale != c2.scale)
    throw Error(ErrorCode::ckks, "add: scale mismatch");
  return Ciphertext{ring_add(c1.c0, c2.c0), ring_add(c1.c1, c2.c1), c1.level,
                    c1.scale};
}

Ciphertext multiply(const CkksParams& params, const Ciphertext& c1,
                    const Ciphertext& c2, const EvaluationKey& evk) {
  check_level(params, c1);
  check_level(params, c2);
  if (c1.level != c2.level)
    throw Error(ErrorCode::ckks, "multiply: level mismatch");
  const BigInt q = params.q_at(c1.level);
  BigInt out_scale = c1.scale * c2.scale;
  if (2 * out_scale >= q)
    throw Error(ErrorCode::ckks, "multiply: scale overflow for this level");

  RingElement d0 = ring_mul(c1.c0, c2.c0);
  RingElement d1 = ring_add(ring_mul(c1.c0, c2.c1), ring_mul(c1.c1, c2.c0));
  RingElement d2 = ring_mul(c1.c1, c2.c1);

  Ciphertext out;
  out.c0 = ring_add(d0, switch_term(d2, evk.b, params.P, q));
  out.c1 = ring_add(d1, switch_term(d2, evk.a, params.P, q));
  out.level = c1.level;
  out.scale = std::move(out_scale);
  return out;
}

Ciphertext rescale(const CkksParams& params, const Ciphertext& c,
                   std::size_t l_new) {
  check_level(params, c);
  if (l_new >= c.level)
    throw Error(ErrorCode::ckks, "rescale: target level must be lower");
  const BigInt q_old = params.q_at(c.level);
  const BigInt q_new = params.q_at(l_new);
  BigInt factor = 1;
  for (std::size_t l = l_new; l < c.level; ++l) factor *= params.p;
  if (c.scale % factor != 0)
    throw Error(ErrorCode::ckks, "rescale: scale not divisible by p^(l-l')");
  Ciphertext out;
  out.c0 = mod_switch(round_scale(lift(c.c0), q_new, q_old), q_new);
  out.c1 = mod_switch(round_scale(lift(c.c1), q_new, q_old), q_new);
  out.level = l_new;
  out.scale = c.scale / factor;
  return out;
}

Ciphertext rotate(const CkksParams& params, const Ciphertext& c,
                  const RotationKey& rotk) {
  check_level(params, c);
  const std::size_t k = rotk.k;
  if (k == 0 || k >= params.M || k % 2 == 0)
    throw Error(ErrorCode::ckks, "rotate: invalid Galois exponent");
  const BigInt q = params.q_at(c.level);
  RingElement c0k = automorphism(c.c0, k);
  RingElement c1k = automorphism(c.c1, k);
  Ciphertext out;
  out.c0 = ring_add(c0k, switch_term(c1k, rotk.b, params.P, q));
  out.c1 = switch_term(c1k, rotk.a, params.P, q);
  out.level = c.level;
  out.scale = c.scale;
  return out;
}

Ciphertext apply_automorphism(const Ciphertext& c, std::size_t k) {
  return Ciphertext{automorphism(c.c0, k), automorphism(c.c1, k), c.level,
                    c.scale};
}

// -- serialization -----------------------------------------------------------

namespace {

void write_header(std::ostream& out, const std::string& type,
                  std::size_t level, const BigInt& scale,
                  const std::string& k) {
  out << "type=" << type << " level=" << level << " scale=" << scale
      << " k=" << k << "\n";
}

struct Header {
  std::string type;
  std::size_t level = 0;
  BigInt scale;
  std::string k;
};

Header read_header(std::istream& in, const std::string& expected_type) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::io, "missing key/ciphertext header");
  std::map<std::string, std::string> kv;
  std::istringstream row(line);
  std::string token;
  while (row >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::io, "malformed header token: " + token);
    kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  Header h;
  try {
    h.type = kv.at("type");
    h.level = std::stoull(kv.at("level"));
    h.scale = BigInt(kv.at("scale"));
    h.k = kv.at("k");
  } catch (const std::exception&) {
    throw Error(ErrorCode::io, "malformed header: " + line);
  }
  if (h.type != expected_type)
    throw Error(ErrorCode::io,
                "expected type=" + expected_type + ", found type=" + h.type);
  return h;
}

template <typename T>
void save_to_file(const std::string& path, const T& value,
                  void (*saver)(std::ostream&, const T&)) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot open for writing: " + path);
  saver(out, value);
}

template <typename T>
T load_from_file(const std::string& path, T (*loader)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open: " + path);
  return loader(in);
}

}  // namespace

void save_secret_key(std::ostream& out, const SecretKey& sk) {
  write_header(out, "sk", 0, 0, "-");
  save_ring_element(out, sk.s);
}
SecretKey load_secret_key(std::istream& in) {
  read_header(in, "sk");
  return SecretKey{load_ring_element(in)};
}

void save_public_key(std::ostream& out, const PublicKey& pk) {
  write_header(out, "pk", 0, 0, "-");
  save_ring_element(out, pk.b);
  save_ring_element(out, pk.a);
}
PublicKey load_public_key(std::istream& in) {
  read_header(in, "pk");
  PublicKey pk;
  pk.b = load_ring_element(in);
  pk.a = load_ring_element(in);
  return pk;
}

void save_evaluation_key(std::ostream& out, const EvaluationKey& evk) {
  write_header(out, "evk", 0, 0, "-");
  save_ring_element(out, evk.b);
  save_ring_element(out, evk.a);
}
EvaluationKey load_evaluation_key(std::istream& in) {
  read_header(in, "evk");
  EvaluationKey evk;
  evk.b = load_ring_element(in);
  evk.a = load_ring_element(in);
  return evk;
}

void save_rotation_key(std::ostream& out, const RotationKey& rotk) {
  write_header(out, "rotk", 0, 0, std::to_string(rotk.k));
  save_ring_element(out, rotk.b);
  save_ring_element(out, rotk.a);
}
RotationKey load_rotation_key(std::istream& in) {
  Header h = read_header(in, "rotk");
  RotationKey rotk;
  try {
    rotk.k = std::stoull(h.k);
  } catch (const std::exception&) {
    throw Error(ErrorCode::io, "rotation key: malformed exponent");
  }
  rotk.b = load_ring_element(in);
  rotk.a = load_ring_element(in);
  return rotk;
}

void save_ciphertext(std::ostream& out, const Ciphertext& c) {
  write_header(out, "ct", c.level, c.scale, "-");
  save_ring_element(out, c.c0);
  save_ring_element(out, c.c1);
}
Ciphertext load_ciphertext(std::istream& in) {
  Header h = read_header(in, "ct");
  Ciphertext c;
  c.c0 = load_ring_element(in);
  c.c1 = load_ring_element(in);
  c.level = h.level;
  c.scale = h.scale;
  return c;
}

void save_secret_key_file(const std::string& path, const SecretKey& sk) {
  save_to_file(path, sk, save_secret_key);
}
SecretKey load_secret_key_file(const std::string& path) {
  return load_from_file(path, load_secret_key);
}
void save_public_key_file(const std::string& path, const PublicKey& pk) {
  save_to_file(path, pk, save_public_key);
}
PublicKey load_public_key_file(const std::string& path) {
  return load_from_file(path, load_public_key);
}
void save_evaluation_key_file(const std::string& path, const EvaluationKey& evk) {
  save_to_file(path, evk, save_evaluation_key);
}
EvaluationKey load_evaluation_key_file(const std::string& path) {
  return load_from_file(path, load_evaluation_key);
}
void save_rotation_key_file(const std::string& path, const RotationKey& rotk) {
  save_to_file(path, rotk, save_rotation_key);
}
RotationKey load_rotation_key_file(const std::string& path) {
  return load_from_file(path, load_rotation_key);
}
void save_ciphertext_file(const std::string& path, const Ciphertext& c) {
  save_to_file(path, c, save_ciphertext);
}
Ciphertext load_ciphertext_file(const std::string& path) {
  return load_from_file(path, load_ciphertext);
}

}  // namespace ckkslab
