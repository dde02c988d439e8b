#include "okbody/error.hpp"

namespace okbody {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::UnknownId: return "unknown id";
    case ErrorKind::NotPseudoeffective: return "not pseudoeffective";
    case ErrorKind::NotBig: return "not big";
    case ErrorKind::CatalogInsufficient: return "catalog insufficient";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::NotTorusInvariant: return "flag not torus-invariant";
  }
  return "error";
}

}  // namespace okbody
