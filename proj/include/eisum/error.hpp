#pragma once

#include <stdexcept>
#include <string>

namespace eisum {

/// Failure classes shared by every module. The CLI maps each class onto a
/// distinct process exit code (see exit_code()).
enum class ErrorKind {
  InvalidArgument,
  DegenerateTable,
  RootFindingFailed,
  NearMultiplePole,
  UseAsymptoticPath,
  OnCut,
  NoValidContour,
  BoundUnavailable,
  StokesCollision,
  Domain,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

/// 0 is success; 1 is reserved for unexpected failures.
int exit_code(ErrorKind kind) noexcept;

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace eisum
