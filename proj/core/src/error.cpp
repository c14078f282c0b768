#include "lhl/error.hpp"

namespace lhl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::NotRealRooted: return "NotRealRooted";
    case ErrorKind::VolumeTooLarge: return "VolumeTooLarge";
    case ErrorKind::SingleVertex: return "SingleVertex";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotRestricted: return "NotRestricted";
    case ErrorKind::HasFixedPoint: return "HasFixedPoint";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorKind::NotRanked: return "NotRanked";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace lhl
