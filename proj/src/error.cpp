#include "mlat/error.hpp"

namespace mlat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::PaletteMismatch: return "PaletteMismatch";
    case ErrorKind::SelfLoopPresent: return "SelfLoopPresent";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::InvalidMultiplicity: return "InvalidMultiplicity";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::IncomparableAtoms: return "IncomparableAtoms";
    case ErrorKind::NegativeBetti: return "NegativeBetti";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownAtom: return "UnknownAtom";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::LawViolation: return "LawViolation";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::MalformedComplex: return "MalformedComplex";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

}  // namespace mlat
