#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pluck {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Error };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

// One verified claim. `witness` carries whatever data demonstrates the
// outcome (the offending instance on failure, computed values on success).
struct CheckRecord {
  std::string check;
  std::string family;
  std::size_t rank = 0;
  Status status = Status::Pass;
  Json witness = Json::object();

  bool passed() const { return status == Status::Pass; }

  Json to_json() const {
    Json j;
    j["check"] = check;
    j["family"] = family;
    j["rank"] = rank;
    j["status"] = to_string(status);
    if (!witness.empty()) j["witness"] = witness;
    return j;
  }
};

inline CheckRecord make_record(std::string check, std::string family, std::size_t rank) {
  CheckRecord r;
  r.check = std::move(check);
  r.family = std::move(family);
  r.rank = rank;
  return r;
}

// Marks the record failed (never un-fails it) and notes why.
inline void fail(CheckRecord& r, const std::string& why) {
  r.status = Status::Fail;
  if (!r.witness.contains("failures")) r.witness["failures"] = Json::array();
  r.witness["failures"].push_back(why);
}

inline void expect(CheckRecord& r, bool cond, const std::string& why) {
  if (!cond) fail(r, why);
}

struct RunReport {
  std::string command;
  Json parameters = Json::object();
  std::vector<CheckRecord> checks;
  Json payload;  // command-specific output, e.g. a straightening result
  Status forced = Status::Pass;  // set to Error when the command itself errored

  Status status() const {
    if (forced != Status::Pass) return forced;
    bool error = false;
    for (const auto& c : checks) {
      if (c.status == Status::Fail) return Status::Fail;
      if (c.status == Status::Error) error = true;
    }
    return error ? Status::Error : Status::Pass;
  }

  // Records are emitted sorted by check name (then family, rank) so the
  // order in which they were produced never shows in the output.
  Json to_json() const {
    std::vector<CheckRecord> sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(), [](const CheckRecord& a, const CheckRecord& b) {
      if (a.check != b.check) return a.check < b.check;
      if (a.family != b.family) return a.family < b.family;
      return a.rank < b.rank;
    });
    Json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["status"] = to_string(status());
    Json arr = Json::array();
    for (const auto& c : sorted) arr.push_back(c.to_json());
    j["checks"] = arr;
    if (!payload.is_null()) j["result"] = payload;
    return j;
  }
};

}  // namespace pluck
