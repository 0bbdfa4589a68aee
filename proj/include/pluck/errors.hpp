#pragma once

#include <stdexcept>
#include <string>

namespace pluck {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad rank, bad token, out-of-range index.
struct InvalidArgument : Error {
  using Error::Error;
};

// An exact identity that must hold by construction did not. Always a bug.
struct CertificationError : Error {
  using Error::Error;
};

// A computation would exceed an explicit size bound.
struct ResourceBound : Error {
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

}  // namespace pluck
