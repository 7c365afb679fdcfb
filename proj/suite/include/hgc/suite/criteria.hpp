#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hgc::suite {

struct SuiteOptions {
  int dim = 3;               // dimension bound of the main corpus
  std::uint32_t seed = 20161;
  std::size_t corpus_size = 60;
  int nmax = 3;              // lifting degree bound for fibration checks
  std::uint64_t budget = 0;  // per criterion; 0 means unlimited
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  /// "criterion 7 PASS: detail"
  std::string line() const;
};

inline constexpr int kCriteria = 12;

/// Runs one criterion. Exceptions from the library are caught and reported
/// as a failure with their message.
CriterionResult run_criterion(int id, const SuiteOptions& options);

/// Runs criteria 1..12 in order, calling `on_result` after each.
std::vector<CriterionResult> run_all(const SuiteOptions& options,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace hgc::suite
