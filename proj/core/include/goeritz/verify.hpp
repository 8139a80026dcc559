#pragma once

// Verification sweeps behind `goeritz verify`. Each suite checks one family of
// statements exhaustively over a bounded range and reports counterexamples.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goeritz/serialize.hpp"
#include "goeritz/word.hpp"

namespace goeritz {

struct VerifyConfig {
  int max_p = 50;                    // shell, bridge and presentation sweeps
  int classification_max_p = 200;
  int max_len = 14;                  // exhaustive obstruction soundness
  int oz_max_len = 16;
  std::int64_t random_words = 100000;
  int random_max_len = 20;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  int max_depth = 64;
  unsigned threads = 0;              // 0: hardware concurrency
  std::size_t max_counterexamples = 20;
  /// Test hook: the named suite ("all" for every suite) records a synthetic failure.
  std::optional<std::string> inject_failure;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::vector<Json> counterexamples;
  double seconds = 0;
};

/// Suite names in execution order.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown name.
SuiteResult run_suite(std::string_view name, const VerifyConfig& config);
std::vector<SuiteResult> run_verify(const VerifyConfig& config);

Json to_json(const SuiteResult& r);

/// Every cyclically reduced letter sequence of the given length that is its own
/// least rotation: one representative per cyclic word.
std::vector<std::vector<Letter>> canonical_cyclic_words(int length);

}  // namespace goeritz
