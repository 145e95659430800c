#pragma once

#include "whvi/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace whvi {

enum class VerdictStatus { HoldsCertified, HoldsSampled, Violated, Inconclusive };

std::string_view to_string(VerdictStatus s);

struct Probe {
  Vector point;
  double value = 0.0;
};

/// Outcome of a numerical condition check. Sampling can only certify violations:
/// HoldsSampled is evidence, HoldsCertified is reserved for vacuous or closed-form cases.
struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::optional<Vector> witness;       ///< required when Violated
  std::optional<Vector> witness_dual;  ///< second half of a pair witness (Z-property)
  std::vector<Probe> trace;
  std::string notes;

  bool holds() const {
    return status == VerdictStatus::HoldsCertified || status == VerdictStatus::HoldsSampled;
  }
  bool violated() const { return status == VerdictStatus::Violated; }
};

/// Conjunction: any violation wins (first one in order), then inconclusive, then sampled.
Verdict conjunction(const std::vector<Verdict>& parts);

}  // namespace whvi
