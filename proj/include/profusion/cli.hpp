#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace profusion {

inline constexpr const char* kToolVersion = "1.0.0";

/// One command-line job.
struct JobSpec {
  /// blocks, brauer-pairs, fusion, tower, dihedral-certify, pathalg or presentation.
  std::string command;
  /// Group file or constructor name.
  std::string group;
  std::string tower;
  std::string quiver;
  std::optional<int> tame;
  std::uint32_t p = 2;
  std::optional<std::uint32_t> field_degree;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> degree;
  /// "principal", "all" or a block index.
  std::string block = "principal";
  bool nilpotent = false;
  bool oracle = false;
  bool timing = false;
  std::string out;

  nlohmann::ordered_json to_json() const;
};

enum class Verdict { Pass, Fail, Skipped };

struct Check {
  std::string name;
  Verdict verdict = Verdict::Skipped;
  nlohmann::ordered_json witness;
};

struct Report {
  JobSpec job;
  nlohmann::ordered_json field;
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  /// Module error that stopped the job, as "Code: message".
  std::optional<std::string> error;
  std::optional<double> elapsed_ms;

  /// Adds a check; names are unique within a report.
  void add(std::string name, Verdict verdict, nlohmann::ordered_json witness = nullptr);
  void add(std::string name, bool pass, nlohmann::ordered_json witness = nullptr) {
    add(std::move(name), pass ? Verdict::Pass : Verdict::Fail, std::move(witness));
  }
  /// No error and no failed check.
  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

/// Throws ParseError on an unknown command, a missing input or a zero limit.
void validate(const JobSpec& job);

/// Validates and runs a job. Module errors are captured in the report.
Report run(const JobSpec& job);

}  // namespace profusion
