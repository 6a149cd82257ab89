#include "korbit/error.hpp"

namespace korbit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::NotInInterval: return "NotInInterval";
    case ErrorKind::InInterval: return "InInterval";
    case ErrorKind::NotANeighbor: return "NotANeighbor";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DegenerateFlag: return "DegenerateFlag";
    case ErrorKind::NotAnOrbitTable: return "NotAnOrbitTable";
  }
  return "Unknown";
}

}  // namespace korbit
