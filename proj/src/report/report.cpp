#include "gwadams/report.hpp"

#include <algorithm>

namespace gwadams {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::mismatch_documented: return "mismatch-documented";
  }
  return "fail";
}

void VerificationReport::add(std::string lemma, std::vector<Param> params, bool ok, nlohmann::json lhs,
                             nlohmann::json rhs, std::string note) {
  entries.push_back({std::move(lemma), std::move(params), ok ? Status::pass : Status::fail, std::move(lhs),
                     std::move(rhs), std::move(note)});
}

void VerificationReport::append(const VerificationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

void VerificationReport::sort() {
  std::stable_sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
    if (a.lemma != b.lemma) return a.lemma < b.lemma;
    return a.params < b.params;
  });
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

std::string params_text(const std::vector<Param>& params) {
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    std::visit([&](const auto& v) {
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, long>) out += std::to_string(v);
      else out += v;
    }, params[i]);
  }
  return out + ")";
}

nlohmann::json to_json(const VerificationReport& r, const std::string& tool_version, const std::string& timestamp) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json params = nlohmann::json::array();
    for (const auto& p : e.params) std::visit([&](const auto& v) { params.push_back(v); }, p);
    nlohmann::json j{{"lemma", e.lemma}, {"params", params}, {"status", to_string(e.status)},
                     {"lhs", e.lhs}, {"rhs", e.rhs}};
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(std::move(j));
  }
  nlohmann::json out{{"suite", r.suite}, {"tool_version", tool_version}, {"entries", entries}};
  if (!timestamp.empty()) out["timestamp"] = timestamp;
  return out;
}

}  // namespace gwadams
