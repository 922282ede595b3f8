#include "extsq/error.hpp"

namespace extsq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ring_mismatch: return "ring mismatch";
    case ErrorKind::non_unit: return "non-unit";
    case ErrorKind::bad_index: return "bad index";
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::rank_too_small: return "rank too small";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::not_wedge_column: return "not a wedge-square column";
    case ErrorKind::undecidable: return "membership undecidable in this artifact";
    case ErrorKind::height: return "height";
    case ErrorKind::membership: return "membership";
    case ErrorKind::proof_step: return "proof-step violated";
    case ErrorKind::not_inverse: return "not an inverse pair";
    case ErrorKind::parse: return "parse error";
  }
  return "unknown";
}

}  // namespace extsq
