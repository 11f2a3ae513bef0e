#include "bwtnice/error.hpp"

namespace bwtnice {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyWord:
      return "EmptyWord";
    case ErrorCode::kBadSentinelCount:
      return "BadSentinelCount";
    case ErrorCode::kNotABwtImage:
      return "NotABwtImage";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kInvalidState:
      return "InvalidState";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInvalidPermutation:
      return "InvalidPermutation";
    case ErrorCode::kNotNicePosition:
      return "NotNicePosition";
    case ErrorCode::kTooLarge:
      return "TooLarge";
  }
  return "Unknown";
}

}  // namespace bwtnice
