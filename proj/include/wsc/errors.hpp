#pragma once

#include <stdexcept>
#include <string>

namespace wsc {

/// Base of every error the library raises. `exit_code()` is the CLI contract:
/// 2 for bad input of any kind, 3 for resource limits.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 2; }
};

/// Malformed or out-of-range arguments.
class InputError : public Error
{
public:
  using Error::Error;
};

/// A structure (necklace, generalized necklace, curve) fails its defining conditions.
class ValidationError : public Error
{
public:
  ValidationError(std::string what, int index = -1)
  : Error(std::move(what)), index_(index)
  {}

  /// 1-based position that failed, or -1 when not positional.
  int index() const noexcept { return index_; }

private:
  int index_;
};

/// Operation called on an object outside its documented domain
/// (e.g. a necklace that still has dummy elements).
class PreconditionError : public Error
{
public:
  using Error::Error;
};

class ResourceError : public Error
{
public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

class OutputError : public Error
{
public:
  using Error::Error;
};

} // namespace wsc
