#pragma once

// Minimal RFC 4180 reader: quoted fields, doubled quotes, CRLF or LF.

#include <istream>
#include <string>
#include <vector>

namespace cogregion::detail {

class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  /// Reads the next record; false at end of input.
  bool next(std::vector<std::string>& fields);

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace cogregion::detail
