#pragma once

// The acceptance suite as a library: ten numbered criteria, each a
// deterministic seeded check. Criterion transcripts carry no timings or other
// run-dependent data, so two runs with one seed serialize identically;
// criterion 10 exploits exactly that.

#include <cstdint>
#include <string>
#include <vector>

#include "qweyl/json_io.hpp"

namespace qweyl {

inline constexpr int criterion_count = 10;
inline constexpr std::uint64_t default_selftest_seed = 20240704;

const char* criterion_name(int index);

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// index in 1..10. Criterion 10 runs criteria 1..9 twice and compares the
// serialized transcripts byte for byte.
CriterionResult run_criterion(int index, std::uint64_t seed);

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool pass = false;
};

SelftestReport run_selftest(std::uint64_t seed = default_selftest_seed);

json to_json(const CriterionResult& r);
json to_json(const SelftestReport& r);

}  // namespace qweyl
