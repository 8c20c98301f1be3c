/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

// Command-line front end. Every subcommand reads and writes the library's
// text formats, so pipelines are reproducible and diffable. Exit codes:
//   0 success, 2 usage error, and one distinct code per module error
//   (3 io, 4 params, 5 sampling, 6 ring, 7 encoding, 8 ckks, 9 lwe,
//   10 lattice).

#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "ckkslab/ckks.hpp"
#include "ckkslab/encoding.hpp"
#include "ckkslab/error.hpp"
#include "ckkslab/lattice.hpp"
#include "ckkslab/noise.hpp"
#include "ckkslab/params.hpp"
#include "ckkslab/sampling.hpp"
#include "ckkslab/toy_lwe.hpp"

namespace {

using namespace ckkslab;

// Holds whichever sampler the flags selected and keeps it alive.
struct SamplerBox {
  std::unique_ptr<RngState> rng;
  std::unique_ptr<SamplerSource> source;
};

SamplerBox make_sampler(std::uint64_t seed, const std::string& override_path) {
  SamplerBox box;
  if (!override_path.empty()) {
    box.source =
        std::make_unique<OverrideSampler>(load_override_file(override_path));
  } else {
    box.rng = std::make_unique<RngState>(seed);
    box.source = std::make_unique<StreamSampler>(*box.rng);
  }
  return box;
}

int run(int argc, char** argv) {
  CLI::App app{"leveled approximate homomorphic encryption toolkit"};
  app.require_subcommand(1);

  // --- params ---------------------------------------------------------------
  auto* params_cmd = app.add_subcommand("params", "write or check parameter files");
  std::string preset = "toy";
  std::string params_out, params_check;
  params_cmd->add_option("--preset", preset, "toy|demo")
      ->check(CLI::IsMember({"toy", "demo"}));
  params_cmd->add_option("--out", params_out, "write the preset here");
  params_cmd->add_option("--check", params_check, "validate an existing file");

  // shared flags, re-registered per subcommand
  struct Common {
    std::string params;
    std::uint64_t seed = 0;
    std::string override_path;
  };
  auto add_common = [](CLI::App* cmd, Common& c, bool with_sampler) {
    cmd->add_option("--params", c.params, "parameter file")->required();
    if (with_sampler) {
      cmd->add_option("--seed", c.seed, "rng seed (default 0)");
      cmd->add_option("--override", c.override_path,
                      "sampler override file (fixed vectors, call order)");
    }
  };

  // --- keygen ---------------------------------------------------------------
  auto* keygen_cmd = app.add_subcommand("keygen", "generate sk/pk/evk (and rotation keys)");
  Common kg;
  add_common(keygen_cmd, kg, true);
  std::string out_sk = "sk.txt", out_pk = "pk.txt", out_evk = "evk.txt";
  std::vector<std::size_t> rot_exponents;
  std::string rotk_prefix = "rotk";
  keygen_cmd->add_option("--out-sk", out_sk);
  keygen_cmd->add_option("--out-pk", out_pk);
  keygen_cmd->add_option("--out-evk", out_evk);
  keygen_cmd->add_option("--rot", rot_exponents, "Galois exponents needing keys");
  keygen_cmd->add_option("--rotk-prefix", rotk_prefix,
                         "rotation keys are written to <prefix><k>.txt");

  // --- encode / decode ------------------------------------------------------
  auto* encode_cmd = app.add_subcommand("encode", "message vector -> plaintext polynomial");
  Common enc_c;
  add_common(encode_cmd, enc_c, true);
  std::string encode_in, encode_out, encode_mode = "nearest";
  encode_cmd->add_option("--in", encode_in)->required();
  encode_cmd->add_option("--out", encode_out)->required();
  encode_cmd->add_option("--mode", encode_mode, "nearest|random")
      ->check(CLI::IsMember({"nearest", "random"}));

  auto* decode_cmd = app.add_subcommand("decode", "plaintext polynomial -> message vector");
  Common dec_c;
  add_common(decode_cmd, dec_c, false);
  std::string decode_in, decode_out;
  decode_cmd->add_option("--in", decode_in)->required();
  decode_cmd->add_option("--out", decode_out)->required();

  // --- encrypt / decrypt ----------------------------------------------------
  auto* encrypt_cmd = app.add_subcommand("encrypt", "plaintext polynomial -> ciphertext");
  Common ec;
  add_common(encrypt_cmd, ec, true);
  std::string encrypt_pk, encrypt_in, encrypt_out;
  encrypt_cmd->add_option("--pk", encrypt_pk)->required();
  encrypt_cmd->add_option("--in", encrypt_in)->required();
  encrypt_cmd->add_option("--out", encrypt_out)->required();

  auto* decrypt_cmd = app.add_subcommand("decrypt", "ciphertext -> plaintext polynomial");
  Common dc;
  add_common(decrypt_cmd, dc, false);
  std::string decrypt_sk, decrypt_in, decrypt_out;
  decrypt_cmd->add_option("--sk", decrypt_sk)->required();
  decrypt_cmd->add_option("--in", decrypt_in)->required();
  decrypt_cmd->add_option("--out", decrypt_out)->required();

  // --- eval -----------------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("eval", "homomorphic operations");
  eval_cmd->require_subcommand(1);

  auto* eval_add = eval_cmd->add_subcommand("add");
  Common ea;
  add_common(eval_add, ea, false);
  std::string add_in1, add_in2, add_out;
  eval_add->add_option("--in1", add_in1)->required();
  eval_add->add_option("--in2", add_in2)->required();
  eval_add->add_option("--out", add_out)->required();

  auto* eval_mul = eval_cmd->add_subcommand("mul");
  Common em;
  add_common(eval_mul, em, false);
  std::string mul_in1, mul_in2, mul_evk, mul_out;
  eval_mul->add_option("--in1", mul_in1)->required();
  eval_mul->add_option("--in2", mul_in2)->required();
  eval_mul->add_option("--evk", mul_evk)->required();
  eval_mul->add_option("--out", mul_out)->required();

  auto* eval_rescale = eval_cmd->add_subcommand("rescale");
  Common er;
  add_common(eval_rescale, er, false);
  std::string rescale_in, rescale_out;
  std::size_t rescale_to = 0;
  eval_rescale->add_option("--in", rescale_in)->required();
  eval_rescale->add_option("--to", rescale_to, "target level")->required();
  eval_rescale->add_option("--out", rescale_out)->required();

  auto* eval_rotate = eval_cmd->add_subcommand("rotate");
  Common ero;
  add_common(eval_rotate, ero, false);
  std::string rotate_in, rotate_key, rotate_out;
  std::size_t rotate_k = 0;
  eval_rotate->add_option("--in", rotate_in)->required();
  eval_rotate->add_option("--k", rotate_k, "Galois exponent")->required();
  eval_rotate->add_option("--rotk", rotate_key)->required();
  eval_rotate->add_option("--out", rotate_out)->required();

  // --- noise ----------------------------------------------------------------
  auto* noise_cmd = app.add_subcommand("noise", "measure ciphertext noise against the clean bound");
  Common nc;
  add_common(noise_cmd, nc, false);
  std::string noise_sk, noise_ct, noise_expect;
  noise_cmd->add_option("--sk", noise_sk)->required();
  noise_cmd->add_option("--ct", noise_ct)->required();
  noise_cmd->add_option("--expect", noise_expect, "expected plaintext polynomial")->required();

  // --- lwe ------------------------------------------------------------------
  auto* lwe_cmd = app.add_subcommand("lwe", "single-bit LWE scheme");
  auto* lwe_demo = lwe_cmd->add_subcommand("demo", "keygen, encrypt both bits, decrypt");
  std::size_t lwe_n = 8, lwe_m = 16;
  std::int64_t lwe_q = 257;
  std::uint64_t lwe_seed = 0;
  lwe_demo->add_option("--n", lwe_n);
  lwe_demo->add_option("--m", lwe_m);
  lwe_demo->add_option("--q", lwe_q);
  lwe_demo->add_option("--seed", lwe_seed);

  // --- lattice --------------------------------------------------------------
  auto* lattice_cmd = app.add_subcommand("lattice", "desk-scale lattice algorithms");
  lattice_cmd->require_subcommand(1);
  std::string lat_in, lat_target;
  auto* lat_svp = lattice_cmd->add_subcommand("svp", "shortest nonzero vector");
  lat_svp->add_option("--in", lat_in)->required();
  auto* lat_cvp = lattice_cmd->add_subcommand("cvp", "nearest lattice vector");
  lat_cvp->add_option("--in", lat_in)->required();
  lat_cvp->add_option("--target", lat_target, "1 x m matrix file")->required();
  auto* lat_bound = lattice_cmd->add_subcommand("bound", "Gram-Schmidt lower bound on lambda1");
  lat_bound->add_option("--in", lat_in)->required();
  auto* lat_basis = lattice_cmd->add_subcommand("basis", "basis from integer generators");
  lat_basis->add_option("--in", lat_in)->required();

  CLI11_PARSE(app, argc, argv);

  if (params_cmd->parsed()) {
    if (!params_check.empty()) {
      CkksParams p = load_params_file(params_check);
      validate(p);
      std::cout << "ok: q_L = " << p.q_top() << "\n";
    }
    if (!params_out.empty()) {
      save_params_file(params_out, preset == "toy" ? toy_params() : demo_params());
    }
    if (params_check.empty() && params_out.empty()) {
      std::cerr << "params: nothing to do (use --out or --check)\n";
      return 2;
    }
    return 0;
  }

  if (keygen_cmd->parsed()) {
    CkksParams p = load_params_file(kg.params);
    SamplerBox box = make_sampler(kg.seed, kg.override_path);
    KeyMaterial keys = keygen(p, *box.source);
    save_secret_key_file(out_sk, keys.sk);
    save_public_key_file(out_pk, keys.pk);
    save_evaluation_key_file(out_evk, keys.evk);
    for (std::size_t k : rot_exponents) {
      RotationKey rotk = make_rotation_key(p, keys.sk, k, *box.source);
      save_rotation_key_file(rotk_prefix + std::to_string(k) + ".txt", rotk);
    }
    return 0;
  }

  if (encode_cmd->parsed()) {
    CkksParams p = load_params_file(enc_c.params);
    EmbeddingContext ctx(p.M);
    MessageVector z = load_message_file(encode_in);
    RoundMode mode =
        encode_mode == "nearest" ? RoundMode::nearest : RoundMode::random;
    RngState rng(enc_c.seed);
    RingElement m = encode(ctx, z, p.delta, mode,
                           mode == RoundMode::random ? &rng : nullptr);
    save_ring_element_file(encode_out, m);
    return 0;
  }

  if (decode_cmd->parsed()) {
    CkksParams p = load_params_file(dec_c.params);
    EmbeddingContext ctx(p.M);
    RingElement m = load_ring_element_file(decode_in);
    save_message_file(decode_out, decode(ctx, m, p.delta));
    return 0;
  }

  if (encrypt_cmd->parsed()) {
    CkksParams p = load_params_file(ec.params);
    PublicKey pk = load_public_key_file(encrypt_pk);
    RingElement m = load_ring_element_file(encrypt_in);
    SamplerBox box = make_sampler(ec.seed, ec.override_path);
    save_ciphertext_file(encrypt_out, encrypt(p, pk, m, *box.source));
    return 0;
  }

  if (decrypt_cmd->parsed()) {
    CkksParams p = load_params_file(dc.params);
    SecretKey sk = load_secret_key_file(decrypt_sk);
    Ciphertext c = load_ciphertext_file(decrypt_in);
    save_ring_element_file(decrypt_out, decrypt(p, sk, c));
    return 0;
  }

  if (eval_add->parsed()) {
    CkksParams p = load_params_file(ea.params);
    Ciphertext c = add(p, load_ciphertext_file(add_in1), load_ciphertext_file(add_in2));
    save_ciphertext_file(add_out, c);
    return 0;
  }
  if (eval_mul->parsed()) {
    CkksParams p = load_params_file(em.params);
    Ciphertext c = multiply(p, load_ciphertext_file(mul_in1),
                            load_ciphertext_file(mul_in2),
                            load_evaluation_key_file(mul_evk));
    save_ciphertext_file(mul_out, c);
    return 0;
  }
  if (eval_rescale->parsed()) {
    CkksParams p = load_params_file(er.params);
    Ciphertext c = rescale(p, load_ciphertext_file(rescale_in), rescale_to);
    save_ciphertext_file(rescale_out, c);
    return 0;
  }
  if (eval_rotate->parsed()) {
    CkksParams p = load_params_file(ero.params);
    RotationKey rotk = load_rotation_key_file(rotate_key);
    if (rotk.k != rotate_k)
      throw Error(ErrorCode::ckks, "rotation key exponent does not match --k");
    Ciphertext c = rotate(p, load_ciphertext_file(rotate_in), rotk);
    save_ciphertext_file(rotate_out, c);
    return 0;
  }

  if (noise_cmd->parsed()) {
    CkksParams p = load_params_file(nc.params);
    EmbeddingContext ctx(p.M);
    SecretKey sk = load_secret_key_file(noise_sk);
    Ciphertext c = load_ciphertext_file(noise_ct);
    RingElement expect = load_ring_element_file(noise_expect);
    double measured = measured_noise(p, ctx, sk, c, expect);
    double bound = b_clean(p);
    std::cout << "measured_noise=" << measured << "\n";
    std::cout << "b_clean=" << bound << "\n";
    std::cout << "within_clean_bound=" << (measured < bound ? "yes" : "no") << "\n";
    std::cout << "decode_safe=" << (decode_safe(p) ? "yes" : "no") << "\n";
    return 0;
  }

  if (lwe_demo->parsed()) {
    lwe::LweParams p{lwe_n, lwe_m, lwe_q};
    RngState rng(lwe_seed);
    lwe::LweKeys keys = lwe::lwe_gen(p, rng);
    std::cout << "n=" << p.n << " m=" << p.m << " q=" << p.q
              << " noise_bound=" << p.noise_bound() << "\n";
    std::cout << "s =";
    for (auto v : keys.s) std::cout << ' ' << v;
    std::cout << "\nb =";
    for (auto v : keys.b) std::cout << ' ' << v;
    std::cout << "\n";
    for (int bit : {0, 1}) {
      lwe::LweCiphertext ct = lwe::lwe_enc(p, keys, bit, rng);
      std::cout << "bit=" << bit << " u =";
      for (auto v : ct.u) std::cout << ' ' << v;
      std::cout << " v=" << ct.v
                << " dec=" << lwe::lwe_dec(p, keys.s, ct) << "\n";
    }
    return 0;
  }

  auto load_basis = [&](const std::string& path) {
    return lattice::Basis::make(lattice::load_matrix_file(path));
  };
  if (lat_svp->parsed()) {
    lattice::RationalVec v = lattice::brute_force_svp(load_basis(lat_in));
    std::cout << "shortest =";
    std::cout << ' ';
    lattice::save_vector(std::cout, v);
    std::cout << "norm_sq = " << lattice::squared_norm(v) << "\n";
    return 0;
  }
  if (lat_cvp->parsed()) {
    lattice::RationalMat t = lattice::load_matrix_file(lat_target);
    if (t.size() != 1)
      throw Error(ErrorCode::io, "cvp target must be a 1 x m matrix");
    lattice::RationalVec v =
        lattice::brute_force_cvp(load_basis(lat_in), t.front());
    std::cout << "nearest = ";
    lattice::save_vector(std::cout, v);
    return 0;
  }
  if (lat_bound->parsed()) {
    lattice::Basis b = load_basis(lat_in);
    std::cout << "lambda1_lower_bound_sq = "
              << lattice::lambda1_lower_bound_sq(b) << "\n";
    std::cout << "lambda1_lower_bound = " << lattice::lambda1_lower_bound(b)
              << "\n";
    return 0;
  }
  if (lat_basis->parsed()) {
    lattice::RationalMat g = lattice::load_matrix_file(lat_in);
    lattice::IntMat gens;
    for (const auto& row : g) {
      lattice::IntVec r;
      for (const auto& entry : row) {
        if (denominator(entry) != 1)
          throw Error(ErrorCode::io, "generators must be integer vectors");
        r.push_back(numerator(entry));
      }
      gens.push_back(std::move(r));
    }
    lattice::Basis b = lattice::basis_from_generators(gens);
    for (const auto& row : b.vectors) lattice::save_vector(std::cout, row);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ckkslab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
