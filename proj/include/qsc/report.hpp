#pragma once

// Machine-readable result records: one line per verified statement instance,
// as JSON lines or CSV. The schema is versioned from day one so downstream
// consumers can detect layout changes.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qsc/engine.hpp"

namespace qsc {

inline constexpr int kReportSchemaVersion = 1;

// A flattened, output-ready record. Parameter values are kept as strings so
// congruence parameters (integers) and numeric sample points ("0.05") share
// one shape; JSON emission restores numeric typing where it parses cleanly.
struct Record {
  std::string statement;
  std::vector<std::pair<std::string, std::string>> params;  // insertion-ordered
  std::string modulus = "-";
  std::string verdict;
  std::string witness_digest = "-";
  std::string note;
  long ms = 0;
};

Record to_record(const CongruenceReport& r);

std::string json_line(const Record& r);
std::string csv_header();
std::string csv_line(const Record& r);

// Streams every record in the requested format ("json" or "csv").
void write_records(std::ostream& os, const std::vector<Record>& records,
                   const std::string& format);

// 0 if everything holds, 1 if anything fails, 2 if the only blemishes are
// undefined-gcd verdicts.
int exit_code_for(const std::vector<Record>& records);

}  // namespace qsc
