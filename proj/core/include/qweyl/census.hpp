#pragma once

// Brute-force classification over small prime fields: enumerate every matrix
// pair satisfying the relation, filter the irreducible noncommutative ones,
// group them by equivalence, and compare the classes against the canonical
// families the reduction targets.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/reduce.hpp"
#include "qweyl/solutions.hpp"

namespace qweyl {

struct CensusOptions {
  bool prune = false;           // skip x with non-scalar x^l (irreducible census only)
  unsigned jobs = 1;            // x-sweep partitions, merged deterministically
  std::uint64_t budget = 10'000'000;  // maximum x-sweep size
};

// Sweeps every x in M_n(F_p) in base-p index order; the relation is linear in
// y, so each x contributes its whole affine solution set, also in a fixed
// order. Returns the number of pairs emitted. Prime fields only.
std::uint64_t enumerate_solutions(const FieldCtx& ctx, std::size_t n,
                                  const std::function<void(const Solution&)>& emit,
                                  const CensusOptions& opts = {});

struct CensusClass {
  std::optional<CanonicalForm> canonical;  // absent when canonicalize fails
  std::uint64_t size = 0;
  Solution representative;
  std::size_t canonical_members = 0;  // how many predicted forms landed here
};

struct CensusReport {
  FieldCtx ctx;
  std::size_t n = 0;
  bool pruned = false;
  std::uint64_t total_solutions = 0;
  std::uint64_t irreducible_count = 0;  // noncommutative irreducible pairs
  std::vector<CensusClass> classes;
  std::vector<std::string> anomalies;
};

CensusReport classify_bruteforce(const FieldCtx& ctx, std::size_t n,
                                 const CensusOptions& opts = {});

// The canonical list the classification predicts: one singular form per field
// element and one nonsingular form per (orbit representative, nonzero eta).
std::vector<CanonicalForm> predicted_forms(const FieldCtx& ctx);

struct CrossValidation {
  bool bijection = false;
  std::vector<CanonicalForm> missing;      // predicted forms hitting no class
  std::vector<std::string> unexpected;     // classes no predicted form reaches
  std::vector<std::string> anomalies;      // copied from the census report
};

CrossValidation cross_validate(const CensusReport& report);

}  // namespace qweyl
