#include "cogregion/errors.hpp"

namespace cogregion {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::SelfIntersectingSelection: return "SelfIntersectingSelection";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::EmptyRegistry: return "EmptyRegistry";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::UnknownRegion: return "UnknownRegion";
    case ErrorCode::PendingSelection: return "PendingSelection";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::InvalidName: return "InvalidName";
    case ErrorCode::UnknownGeographyInIncludedSet: return "UnknownGeographyInIncludedSet";
    case ErrorCode::GeographyNotIncluded: return "GeographyNotIncluded";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::AllRowsInvalid: return "AllRowsInvalid";
    case ErrorCode::InvalidGeoJSON: return "InvalidGeoJSON";
    case ErrorCode::DuplicateGeographyName: return "DuplicateGeographyName";
    case ErrorCode::MissingNameProperty: return "MissingNameProperty";
    case ErrorCode::PortInUse: return "PortInUse";
    case ErrorCode::StaleCoverage: return "StaleCoverage";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace cogregion
