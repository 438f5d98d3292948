#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace wlp {

enum class CriterionPart { even_d, odd_d };

/// Witness (n, k) for failure of WLP by the numeric criterion. The pair
/// satisfies the part-specific double inequality, re-checkable with plain
/// integer arithmetic:
///   even d:  3d - 4 p^n < 6 k p^n < 3d - 2 p^n
///   odd d:   3d + 1 - 4 p^n < 6 k p^n < 3d - 1 - 2 p^n
struct CriterionWitness {
  CriterionPart part = CriterionPart::even_d;
  std::int64_t n = 0;  // prime-power exponent, n >= 1
  std::int64_t k = 0;  // k >= 0
  friend bool operator==(const CriterionWitness&, const CriterionWitness&) = default;
};

/// First degree m where multiplication by the linear form drops below
/// maximal rank, with the observed and expected ranks.
struct FailingDegree {
  std::int64_t m = 0;
  std::int64_t rank = 0;
  std::int64_t max_rank = 0;  // min(h(m), h(m+1))
  friend bool operator==(const FailingDegree&, const FailingDegree&) = default;
};

/// Tag for verdicts produced by a closed form (e.g. "3d-1=2^5" for the
/// characteristic-2 law).
struct ClosedForm {
  std::string tag;
  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

/// monostate = no witness (holds, or a closed-form failure).
using WlpWitness = std::variant<std::monostate, CriterionWitness, FailingDegree, ClosedForm>;

struct WlpVerdict {
  bool holds = false;
  WlpWitness witness;
  friend bool operator==(const WlpVerdict&, const WlpVerdict&) = default;
};

}  // namespace wlp
