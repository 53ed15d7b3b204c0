#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "stonet/verdict.hpp"

namespace stonet {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "stonet-report/1";

struct ReportEntry {
  std::string entity;
  std::string law;
  Outcome verdict = Outcome::holds;
  std::string witness;
  Json data;
};

/// An ordered list of verdicts.  Entries keep insertion order, so a report is
/// reproducible whenever its producer is.
class Report {
 public:
  Report(std::string command, Json flags) : command_(std::move(command)), flags_(std::move(flags)) {}

  void add(std::string entity, std::string law, const Verdict& v, Json data = nullptr);
  void add(std::string entity, std::string law, bool holds, std::string witness, Json data = nullptr);

  const std::vector<ReportEntry>& entries() const noexcept { return entries_; }
  std::size_t count(Outcome o) const;

  /// 0 if nothing fails, 1 otherwise.
  int exit_code() const { return count(Outcome::fails) == 0 ? 0 : 1; }

  Json to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  Json flags_;
  std::vector<ReportEntry> entries_;
};

}  // namespace stonet
