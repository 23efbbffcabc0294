// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace symdpp {

// Values mirror the C API codes in symdpp.h.
enum class Status : int {
  ok = 0,
  invalid_argument = 1,
  domain = 2,
  structural = 3,
  algorithm = 4,
  numeric = 5,
  degenerate = 6,
  consistency = 7,
  region = 8,
  resource = 9,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
 public:
  Error(Status s, const std::string& what) : std::runtime_error(what), status_(s) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& what) { throw Error(s, what); }

inline void require(bool cond, Status s, const char* what) {
  if (!cond) fail(s, what);
}

}  // namespace symdpp
