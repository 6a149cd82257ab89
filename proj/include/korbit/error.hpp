#pragma once

#include <stdexcept>
#include <string>

namespace korbit {

enum class ErrorKind {
  MalformedInput,
  SizeMismatch,
  PositionOutOfRange,
  NotInInterval,
  InInterval,
  NotANeighbor,
  TooLarge,
  DegenerateFlag,
  NotAnOrbitTable,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace korbit
