#pragma once

// Verification suites per simple type and their text / JSON reports.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bdouble/rootsys.hpp"

namespace bdouble {

enum class SuiteStatus { Pass, Fail, Skipped };
std::string status_name(SuiteStatus s);

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::Pass;
  std::vector<std::string> details;
  std::string reason;   // skipped
  std::string witness;  // fail
  std::optional<double> millis;
};

struct LambdaEntry {
  std::string automorphism;
  std::size_t order = 1;
  Scalar lambda;
};

struct VerificationReport {
  SimpleType type;
  std::vector<Scalar> epsilons;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  std::vector<LambdaEntry> lambda_table;
  std::map<std::string, std::size_t> dims;

  bool passed() const;
};

struct SuiteOptions {
  std::vector<Scalar> epsilons;       // empty means default_epsilons()
  std::vector<std::string> suites;    // empty means all, in the standard order
  std::size_t der_cap = 24;           // largest algebra handed to the derivation solver
  std::uint64_t seed = 20240611;
  std::size_t samples_per_family = 5;
  bool timings = false;
};

const std::vector<std::string>& suite_names();
std::vector<Scalar> default_epsilons();

// Throws InputError for an unknown suite name. Falsifications are recorded
// in the report, never thrown.
VerificationReport run_suite(const SimpleType& type, const SuiteOptions& options = {});

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace bdouble
