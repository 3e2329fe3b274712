#pragma once

// Verification reports shared by every check_* routine and the CLI.

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace gwadams {

enum class Status { pass, fail, mismatch_documented };

std::string to_string(Status s);

using Param = std::variant<long, std::string>;

struct ReportEntry {
  std::string lemma;
  std::vector<Param> params;
  Status status = Status::pass;
  nlohmann::json lhs;
  nlohmann::json rhs;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::vector<ReportEntry> entries;

  void add(std::string lemma, std::vector<Param> params, bool ok, nlohmann::json lhs = {},
           nlohmann::json rhs = {}, std::string note = {});
  void append(const VerificationReport& other);
  /// Orders entries by lemma id, then parameters (integers before strings).
  void sort();
  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
};

std::string params_text(const std::vector<Param>& params);

/// Serialized report. The timestamp is omitted when empty.
nlohmann::json to_json(const VerificationReport& r, const std::string& tool_version,
                       const std::string& timestamp = {});

}  // namespace gwadams
