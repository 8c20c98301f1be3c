/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include "ckkslab/params.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ckkslab/error.hpp"

namespace ckkslab {

BigInt CkksParams::q_top() const { return q_at(L); }

BigInt CkksParams::q_at(std::size_t level) const {
  BigInt q = q0;
  for (std::size_t l = 0; l < level; ++l) q *= p;
  return q;
}

void validate(const CkksParams& params) {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::params, "invalid parameters: " + msg);
  };
  if (params.M <= 2 || (params.M & (params.M - 1)) != 0)
    fail("M must be a power of two greater than 2");
  if (params.N * 2 != params.M) fail("N must equal M/2");
  if (params.delta <= 0) fail("delta must be positive");
  if (params.p < 2) fail("p must be at least 2");
  if (params.q0 <= 0) fail("q0 must be positive");
  if (params.sigma_err <= 0.0) fail("sigma_err must be positive");
  if (params.h > params.N) fail("h exceeds N");
  if (params.P <= 0) fail("P must be positive");
}

std::vector<BigInt> modulus_chain(const CkksParams& params) {
  std::vector<BigInt> chain;
  chain.reserve(params.L + 1);
  BigInt q = params.q0;
  for (std::size_t l = 0; l <= params.L; ++l) {
    chain.push_back(q);
    q *= params.p;
  }
  return chain;
}

CkksParams toy_params() {
  CkksParams params;
  params.M = 8;
  params.N = 4;
  params.delta = 64;
  params.p = 4;
  params.q0 = 5;
  params.L = 4;
  params.sigma_err = 3.2;
  params.h = 2;
  params.P = params.q_top();
  return params;
}

CkksParams demo_params() {
  CkksParams params;
  params.M = 2048;
  params.N = 1024;
  params.delta = BigInt(1) << 30;
  params.p = BigInt(1) << 30;
  params.q0 = BigInt(1) << 40;
  params.L = 3;
  params.sigma_err = 3.2;
  params.h = 64;
  params.P = params.q_top();
  return params;
}

void save_params(std::ostream& out, const CkksParams& params) {
  out << "M=" << params.M << "\n";
  out << "N=" << params.N << "\n";
  out << "delta=" << params.delta << "\n";
  out << "p=" << params.p << "\n";
  out << "q0=" << params.q0 << "\n";
  out << "L=" << params.L << "\n";
  out << "sigma_err=" << params.sigma_err << "\n";
  out << "h=" << params.h << "\n";
  out << "P=" << params.P << "\n";
}

CkksParams load_params(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::io, "malformed parameter line: " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto get = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end())
      throw Error(ErrorCode::io, "missing parameter: " + key);
    return it->second;
  };
  CkksParams params;
  try {
    params.M = std::stoull(get("M"));
    params.N = std::stoull(get("N"));
    params.delta = BigInt(get("delta"));
    params.p = BigInt(get("p"));
    params.q0 = BigInt(get("q0"));
    params.L = std::stoull(get("L"));
    params.sigma_err = std::stod(get("sigma_err"));
    params.h = std::stoull(get("h"));
    params.P = BigInt(get("P"));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::io, std::string("malformed parameter value: ") + e.what());
  }
  validate(params);
  return params;
}

void save_params_file(const std::string& path, const CkksParams& params) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot open for writing: " + path);
  save_params(out, params);
}

CkksParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open: " + path);
  return load_params(in);
}

}  // namespace ckkslab
