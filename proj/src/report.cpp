#include "qsc/report.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <stdexcept>

namespace qsc {

namespace {

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool looks_like_decimal(const std::string& s) {
  size_t dot = s.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == s.size()) return false;
  return looks_like_integer(s.substr(0, dot)) && looks_like_integer(s.substr(dot + 1));
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Record to_record(const CongruenceReport& r) {
  Record rec;
  rec.statement = r.statement;
  for (const auto& [k, v] : r.params) rec.params.emplace_back(k, std::to_string(v));
  rec.modulus = r.modulus;
  rec.verdict = to_string(r.verdict);
  rec.witness_digest = r.witness_digest;
  rec.note = r.note;
  rec.ms = r.ms;
  return rec;
}

std::string json_line(const Record& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["statement"] = r.statement;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) {
    if (looks_like_integer(v))
      params[k] = std::stol(v);
    else if (looks_like_decimal(v))
      params[k] = std::stod(v);
    else
      params[k] = v;
  }
  j["params"] = params;
  j["modulus"] = r.modulus;
  j["verdict"] = r.verdict;
  j["witness_digest"] = r.witness_digest;
  j["ms"] = r.ms;
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

std::string csv_header() {
  return "schema_version,statement,params,modulus,verdict,witness_digest,ms,note";
}

std::string csv_line(const Record& r) {
  std::string params;
  for (const auto& [k, v] : r.params) {
    if (!params.empty()) params += ';';
    params += k + "=" + v;
  }
  std::string out = std::to_string(kReportSchemaVersion);
  for (const std::string& field :
       {r.statement, params, r.modulus, r.verdict, r.witness_digest}) {
    out += ',';
    out += csv_escape(field);
  }
  out += ',' + std::to_string(r.ms);
  out += ',' + csv_escape(r.note);
  return out;
}

void write_records(std::ostream& os, const std::vector<Record>& records,
                   const std::string& format) {
  if (format == "json") {
    for (const Record& r : records) os << json_line(r) << '\n';
  } else if (format == "csv") {
    os << csv_header() << '\n';
    for (const Record& r : records) os << csv_line(r) << '\n';
  } else {
    throw std::invalid_argument("unknown report format: " + format);
  }
}

int exit_code_for(const std::vector<Record>& records) {
  bool undefined = false;
  for (const Record& r : records) {
    if (r.verdict == "fails") return 1;
    if (r.verdict == "undefined_gcd") undefined = true;
  }
  return undefined ? 2 : 0;
}

}  // namespace qsc
