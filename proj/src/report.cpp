#include "stonet/report.hpp"

#include <algorithm>
#include <sstream>

namespace stonet {

void Report::add(std::string entity, std::string law, const Verdict& v, Json data) {
  entries_.push_back(ReportEntry{std::move(entity), std::move(law), v.outcome, v.witness,
                                 std::move(data)});
}

void Report::add(std::string entity, std::string law, bool holds, std::string witness,
                 Json data) {
  add(std::move(entity), std::move(law),
      holds ? Verdict::pass() : Verdict::fail(std::move(witness)), std::move(data));
}

std::size_t Report::count(Outcome o) const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [&](const ReportEntry& e) { return e.verdict == o; }));
}

Json Report::to_json() const {
  Json out;
  out["schema"] = kReportSchema;
  out["command"] = command_;
  out["flags"] = flags_;
  Json entries = Json::array();
  for (const auto& e : entries_) {
    Json j;
    j["entity"] = e.entity;
    j["law"] = e.law;
    j["verdict"] = to_string(e.verdict);
    if (!e.witness.empty()) {
      j["witness"] = e.witness;
    }
    if (!e.data.is_null()) {
      j["data"] = e.data;
    }
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  out["summary"] = Json{{"holds", count(Outcome::holds)},
                        {"fails", count(Outcome::fails)},
                        {"unknown", count(Outcome::unknown)}};
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command_ << "\n";
  for (const auto& e : entries_) {
    os << "  [" << to_string(e.verdict) << "] " << e.entity << " " << e.law;
    if (!e.witness.empty()) {
      os << ": " << e.witness;
    }
    if (!e.data.is_null()) {
      os << " " << e.data.dump();
    }
    os << "\n";
  }
  os << count(Outcome::holds) << " hold, " << count(Outcome::fails) << " fail, "
     << count(Outcome::unknown) << " unknown\n";
  return os.str();
}

}  // namespace stonet
