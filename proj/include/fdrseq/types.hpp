#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fdrseq {

// The six supported multiple testing procedures. The first four are
// step-down fixed sequence methods, the last two are step-up baselines
// that sort the p-values internally and ignore the testing order.
enum class ProcedureKind {
  Arbitrary,   // fixed sequence, FDR control under arbitrary dependence
  NegAssoc,    // fixed sequence, FDR control under negative association
  KArbitrary,  // fixed sequence with k-acceptance stopping, arbitrary dependence
  KAdaptive,   // fixed sequence with k-acceptance stopping, adaptive constants (independence)
  BH,          // Benjamini-Hochberg step-up
  BY,          // Benjamini-Yekutieli step-up
};

bool is_fixed_sequence(ProcedureKind kind);
bool uses_acceptance_budget(ProcedureKind kind);
std::string to_string(ProcedureKind kind);
ProcedureKind procedure_kind_from_string(const std::string& name);

struct ProcedureSpec {
  ProcedureKind kind = ProcedureKind::Arbitrary;
  double alpha = 0.05;
  std::size_t k = 1;  // acceptance budget; must stay 1 for the conventional kinds

  // Checks alpha in (0,1), k >= 1, and k == 1 for kinds without a budget.
  void validate() const;
  // Additionally checks k <= m. m is a property of the data, so this runs
  // at dispatch time rather than at construction.
  void validate_for(std::size_t m) const;
};

// P-values in testing order. Values are validated once on construction.
class OrderedPValues {
 public:
  explicit OrderedPValues(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

enum class Decision { Rejected, Accepted, Untested };

std::string to_string(Decision d);

struct TestOutcome {
  std::vector<Decision> decisions;   // one per hypothesis, in testing order
  std::size_t rejection_count = 0;   // R
  std::size_t acceptance_count = 0;  // accepted among tested positions
  std::size_t stop_index = 0;        // last tested position (1-based); m if never halted
};

}  // namespace fdrseq
