#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supergrade/classify.hpp"
#include "supergrade/liesuper.hpp"

namespace supergrade {

// Raised by the parsers; line is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct AlgebraFile {
  LieSuperalgebra algebra;
  std::optional<std::vector<int>> degrees;
};

// Line format:
//   name <text> / family <f> / params <p>... / alpha <q> / field Q
//   basis <i> even|odd <label>
//   bracket <i> <j> <k>:<scalar> ...     (i <= j, nonzero entries only)
//   deg <i> <int>
std::string serialize_algebra(const LieSuperalgebra& g, const std::optional<std::vector<int>>& degrees = std::nullopt);
AlgebraFile parse_algebra(std::string_view text);

// Catalog id recorded in the header, when the family is known.
std::optional<AlgebraId> algebra_id(const AlgebraInfo& info);

// Bitwise equality of basis, parities, labels, structure constants and header.
bool same_algebra(const LieSuperalgebra& a, const LieSuperalgebra& b);

// SUBJECT line, one CHECK line per check, OVERALL trailer. Spaces inside
// fields are written as '_'.
std::string render_report(const VerificationReport& r);

struct ReportFile {
  VerificationReport report;
  bool trailer_pass = false;
  bool consistent() const { return trailer_pass == report.overall(); }
};
ReportFile parse_report(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace supergrade
