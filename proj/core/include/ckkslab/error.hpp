/* Copyright (C) 2026 ckkslab authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 */

#ifndef CKKSLAB_ERROR_HPP
#define CKKSLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ckkslab {

// One category per library component; the CLI maps these to distinct
// process exit codes.
enum class ErrorCode {
  io = 3,
  params = 4,
  sampling = 5,
  ring = 6,
  encoding = 7,
  ckks = 8,
  lwe = 9,
  lattice = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ckkslab

#endif
