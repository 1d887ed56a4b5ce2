// SPDX-FileCopyrightText: (c) 2026 The fwlab Authors
//
// SPDX-License-Identifier: Apache-2.0

#ifndef FWLAB_ERROR_HPP
#define FWLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fwlab {

// Mirrors fwlab_status in the C API; values must stay in sync.
enum class ErrorCode {
  InvalidArgument = 1,
  Inadmissible = 2,
  Precondition = 3,
  Numerical = 4,
  Io = 5,
  Parse = 6,
  Internal = 7,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
  throw Error(code, what);
}

} // namespace fwlab

#endif // FWLAB_ERROR_HPP
