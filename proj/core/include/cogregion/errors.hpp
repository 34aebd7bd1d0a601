#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cogregion {

enum class ErrorCode {
  ValidationError,
  DegeneratePolygon,
  SelfIntersectingSelection,
  TooFewVertices,
  EmptyRegistry,
  EmptyDataset,
  UnknownRegion,
  PendingSelection,
  DuplicateName,
  InvalidName,
  UnknownGeographyInIncludedSet,
  GeographyNotIncluded,
  FileNotFound,
  HeaderMismatch,
  AllRowsInvalid,
  InvalidGeoJSON,
  DuplicateGeographyName,
  MissingNameProperty,
  PortInUse,
  StaleCoverage,
  IoError,
};

/// Stable identifier used in logs and in the HTTP error payload `code` field.
std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cogregion
