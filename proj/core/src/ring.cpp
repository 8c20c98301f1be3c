/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#include "ckkslab/ring.hpp"

#include <fstream>
#include <sstream>

#include "ckkslab/error.hpp"

namespace ckkslab {

namespace {

void reduce_in_place(RingElement& a) {
  if (!a.modulus) return;
  const BigInt& q = *a.modulus;
  if (q < 1) throw Error(ErrorCode::ring, "modulus must be positive");
  for (BigInt& c : a.coeffs) c = centered_mod(c, q);
}

void check_compatible(const RingElement& a, const RingElement& b) {
  if (a.coeffs.size() != b.coeffs.size())
    throw Error(ErrorCode::ring, "ring degree mismatch");
  if (a.modulus.has_value() != b.modulus.has_value() ||
      (a.modulus && *a.modulus != *b.modulus))
    throw Error(ErrorCode::ring, "ring modulus mismatch");
}

}  // namespace

RingElement RingElement::zero(std::size_t n, std::optional<BigInt> modulus) {
  RingElement out;
  out.coeffs.assign(n, BigInt(0));
  out.modulus = std::move(modulus);
  return out;
}

RingElement RingElement::from_coeffs(std::vector<BigInt> coeffs,
                                     std::optional<BigInt> modulus) {
  RingElement out;
  out.coeffs = std::move(coeffs);
  out.modulus = std::move(modulus);
  reduce_in_place(out);
  return out;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
  check_compatible(a, b);
  RingElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] += b.coeffs[i];
  reduce_in_place(out);
  return out;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
  check_compatible(a, b);
  RingElement out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] -= b.coeffs[i];
  reduce_in_place(out);
  return out;
}

RingElement ring_neg(const RingElement& a) {
  RingElement out = a;
  for (BigInt& c : out.coeffs) c = -c;
  reduce_in_place(out);
  return out;
}

RingElement ring_scalar_mul(const RingElement& a, const BigInt& k) {
  RingElement out = a;
  for (BigInt& c : out.coeffs) c *= k;
  reduce_in_place(out);
  return out;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  check_compatible(a, b);
  const std::size_t n = a.coeffs.size();
  RingElement out = RingElement::zero(n, a.modulus);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs[j] == 0) continue;
      BigInt term = a.coeffs[i] * b.coeffs[j];
      std::size_t k = i + j;
      if (k >= n) {
        out.coeffs[k - n] -= term;
      } else {
        out.coeffs[k] += term;
      }
    }
  }
  reduce_in_place(out);
  return out;
}

RingElement mod_switch(const RingElement& a, const BigInt& q_new) {
  if (q_new < 1)
    throw Error(ErrorCode::ring, "mod_switch: modulus must be positive");
  RingElement out = a;
  out.modulus = q_new;
  reduce_in_place(out);
  return out;
}

RingElement lift(const RingElement& a) {
  RingElement out = a;
  out.modulus.reset();
  return out;
}

RingElement round_scale(const RingElement& a, const BigInt& num,
                        const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ring, "round_scale: zero denominator");
  RingElement out;
  out.coeffs.reserve(a.coeffs.size());
  for (const BigInt& c : a.coeffs) out.coeffs.push_back(round_div(num * c, den));
  return out;
}

RingElement automorphism(const RingElement& a, std::size_t k) {
  const std::size_t n = a.coeffs.size();
  const std::size_t m = 2 * n;
  if (k == 0 || k >= m || k % 2 == 0)
    throw Error(ErrorCode::ring,
                "automorphism: exponent must be odd and in (0, 2N)");
  RingElement out = RingElement::zero(n, a.modulus);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i * k) % m;
    if (j >= n) {
      out.coeffs[j - n] -= a.coeffs[i];
    } else {
      out.coeffs[j] += a.coeffs[i];
    }
  }
  reduce_in_place(out);
  return out;
}

BigInt max_abs_coeff(const RingElement& a) {
  BigInt best = 0;
  for (const BigInt& c : a.coeffs) {
    BigInt v = c < 0 ? -c : c;
    if (v > best) best = v;
  }
  return best;
}

void save_ring_element(std::ostream& out, const RingElement& a) {
  out << "N=" << a.coeffs.size() << "\n";
  if (a.modulus)
    out << "q=" << *a.modulus << "\n";
  else
    out << "q=none\n";
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (i) out << ' ';
    out << a.coeffs[i];
  }
  out << "\n";
}

RingElement load_ring_element(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("N=", 0) != 0)
    throw Error(ErrorCode::io, "ring element: expected N= line");
  std::size_t n = 0;
  try {
    n = std::stoull(line.substr(2));
  } catch (const std::exception&) {
    throw Error(ErrorCode::io, "ring element: malformed N");
  }
  if (!std::getline(in, line) || line.rfind("q=", 0) != 0)
    throw Error(ErrorCode::io, "ring element: expected q= line");
  std::optional<BigInt> modulus;
  if (line.substr(2) != "none") {
    try {
      modulus = BigInt(line.substr(2));
    } catch (const std::exception&) {
      throw Error(ErrorCode::io, "ring element: malformed q");
    }
  }
  if (!std::getline(in, line))
    throw Error(ErrorCode::io, "ring element: missing coefficient line");
  std::istringstream row(line);
  std::vector<BigInt> coeffs;
  coeffs.reserve(n);
  std::string token;
  while (row >> token) {
    try {
      coeffs.emplace_back(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::io, "ring element: malformed coefficient " + token);
    }
  }
  if (coeffs.size() != n)
    throw Error(ErrorCode::io, "ring element: coefficient count mismatch");
  return RingElement::from_coeffs(std::move(coeffs), std::move(modulus));
}

void save_ring_element_file(const std::string& path, const RingElement& a) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot open for writing: " + path);
  save_ring_element(out, a);
}

RingElement load_ring_element_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open: " + path);
  return load_ring_element(in);
}

}  // namespace ckkslab
