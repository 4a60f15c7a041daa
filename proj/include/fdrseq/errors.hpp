#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fdrseq {

// Non-convergence or loss of accuracy in a numerical routine.
// The CLI maps this to exit code 3.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One or more data rows admit no valid test statistic (zero variance,
// all-zero Wilcoxon sample, ...). Carries the offending 0-based row indices.
struct DegenerateDataError : std::invalid_argument {
  std::vector<std::size_t> rows;

  DegenerateDataError(const std::string& msg, std::vector<std::size_t> offending)
      : std::invalid_argument(msg), rows(std::move(offending)) {}
};

}  // namespace fdrseq
