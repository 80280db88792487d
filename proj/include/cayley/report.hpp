#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cayley/algebras.hpp"

namespace cayley {

using Json = nlohmann::ordered_json;  // preserves the fixed key order of reports

// On-disk algebra description.  Parameters are decimal strings ("p/q" for
// rationals); a doubled algebra carries its base inline, inheriting the ring.
struct AlgebraFile {
  std::string ring;
  std::string kind;       // m2 | quaternion | zorn | doubled
  std::string a, b;       // quaternion parameters
  std::string lambda;     // doubled parameter
  std::string base_kind;  // doubled base: m2 | quaternion
  std::string base_a, base_b;

  static AlgebraFile parse(const std::string& text);  // ParseError, InvalidAlgebra
  static AlgebraFile from_algebra(const AlgebraSpec& spec);
  static AlgebraFile load(const std::string& path);  // ParseError on I/O failure
  std::string serialize() const;                     // canonical JSON, one line
  AlgebraRef to_algebra() const;                     // InvalidAlgebra with field name

  bool operator==(const AlgebraFile&) const = default;
};

// One machine-readable verdict.  to_json() emits the frozen key order
// claim, ring, algebra, verdict, reason, witness, data, counts; counts holds
// scanned and time_ms, and time_ms is the only field excluded when comparing
// two runs for byte-identity.
struct Report {
  std::string claim;
  std::string ring;
  std::string algebra;
  std::string verdict;  // pass | fail | skipped
  std::string reason;   // empty for pass; skip or failure context otherwise
  Json witness;         // null unless fail
  Json data;            // claim-specific numbers
  uint64_t scanned = 0;
  int64_t time_ms = 0;

  Json to_json() const;
  std::string human_row() const;
};

std::string reports_to_json(const std::vector<Report>& reports);  // array + newline
int exit_code(const std::vector<Report>& reports, bool strict);   // 0 or 1

}  // namespace cayley
