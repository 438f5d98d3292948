#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "wlp/criterion.hpp"
#include "wlp/graded_algebra.hpp"
#include "wlp/int_util.hpp"

namespace {

using wlp::CriterionPart;
using wlp::CriterionWitness;
using wlp::decide_wlp_criterion;
using wlp::divisor_obstruction;
using wlp::exceptional_primes;
using wlp::PrimeModulus;
using wlp::wlp_char2;
using wlp::WlpVerdict;

TEST(DecideWlpCriterion, KnownVerdictsAndWitnesses) {
  const WlpVerdict v45 = decide_wlp_criterion(4, PrimeModulus(5));
  EXPECT_FALSE(v45.holds);
  EXPECT_EQ(std::get<CriterionWitness>(v45.witness),
            (CriterionWitness{CriterionPart::even_d, 1, 0}));

  EXPECT_TRUE(decide_wlp_criterion(6, PrimeModulus(3)).holds);

  const WlpVerdict v31 = decide_wlp_criterion(31, PrimeModulus(11));
  EXPECT_FALSE(v31.holds);
  EXPECT_EQ(std::get<CriterionWitness>(v31.witness),
            (CriterionWitness{CriterionPart::odd_d, 1, 1}));

  EXPECT_TRUE(decide_wlp_criterion(5, PrimeModulus(7)).holds);

  const WlpVerdict v20 = decide_wlp_criterion(20, PrimeModulus(7));
  EXPECT_FALSE(v20.holds);
  EXPECT_EQ(std::get<CriterionWitness>(v20.witness),
            (CriterionWitness{CriterionPart::even_d, 1, 1}));

  EXPECT_FALSE(decide_wlp_criterion(3, PrimeModulus(3)).holds);
  EXPECT_TRUE(decide_wlp_criterion(1, PrimeModulus(7)).holds);
  EXPECT_THROW(decide_wlp_criterion(0, PrimeModulus(3)), std::invalid_argument);
}

// Re-verify every reported witness with arithmetic independent of the
// scanning helper.
TEST(DecideWlpCriterion, WitnessesRecheckByDirectArithmetic) {
  for (std::int64_t d = 1; d <= 60; ++d)
    for (std::int64_t pr = 2; pr <= 3 * d / 2 + 2; ++pr) {
      if (!wlp::is_prime(static_cast<std::uint64_t>(pr))) continue;
      const WlpVerdict v = decide_wlp_criterion(d, PrimeModulus(pr));
      if (v.holds) {
        EXPECT_TRUE(std::holds_alternative<std::monostate>(v.witness));
        continue;
      }
      const auto& w = std::get<CriterionWitness>(v.witness);
      EXPECT_EQ(w.part, d % 2 == 0 ? CriterionPart::even_d : CriterionPart::odd_d);
      EXPECT_GE(w.n, 1);
      EXPECT_GE(w.k, 0);
      std::int64_t q = 1;
      for (std::int64_t i = 0; i < w.n; ++i) q *= pr;
      if (d % 2 == 0) {
        EXPECT_LT(3 * d - 4 * q, 6 * w.k * q) << "d=" << d << " p=" << pr;
        EXPECT_LT(6 * w.k * q, 3 * d - 2 * q) << "d=" << d << " p=" << pr;
      } else {
        EXPECT_LT(3 * d + 1 - 4 * q, 6 * w.k * q) << "d=" << d << " p=" << pr;
        EXPECT_LT(6 * w.k * q, 3 * d - 1 - 2 * q) << "d=" << d << " p=" << pr;
      }
    }
}

TEST(DecideWlpCriterion, AgreesWithBruteforceOnASmallGrid) {
  for (std::int64_t d = 1; d <= 10; ++d)
    for (const std::int64_t pr : {2, 3, 5, 7, 11, 13})
      EXPECT_EQ(decide_wlp_criterion(d, PrimeModulus(pr)).holds,
                wlp::wlp_bruteforce(d, PrimeModulus(pr)).holds)
          << "d=" << d << " p=" << pr;
}

// The odd-d window is empty at n = 0 for every d, so restricting the scan
// to n >= 1 loses nothing. Checked directly, not through the scan helper.
TEST(DecideWlpCriterion, OddWindowEmptyAtExponentZero) {
  for (std::int64_t d = 1; d <= 10000; ++d) {
    const std::int64_t lo = 3 * d + 1 - 4;  // q = 1
    const std::int64_t hi = 3 * d - 1 - 2;
    for (std::int64_t k = 0; 6 * k <= hi; ++k)
      EXPECT_FALSE(lo < 6 * k && 6 * k < hi) << "d=" << d << " k=" << k;
  }
}

TEST(ExceptionalPrimes, KnownTables) {
  EXPECT_EQ(exceptional_primes(8), (std::vector<std::int64_t>{2, 3, 7, 11}));
  EXPECT_EQ(exceptional_primes(12), (std::vector<std::int64_t>{2, 11, 13, 17}));
  EXPECT_EQ(exceptional_primes(14), (std::vector<std::int64_t>{2, 5, 11, 13, 17, 19}));
  EXPECT_EQ(exceptional_primes(1), (std::vector<std::int64_t>{}));
}

TEST(WlpChar2, KnownValuesAndTags) {
  const WlpVerdict d3 = wlp_char2(3);
  EXPECT_TRUE(d3.holds);
  EXPECT_EQ(std::get<wlp::ClosedForm>(d3.witness).tag, "3d-1=2^3");

  const WlpVerdict d11 = wlp_char2(11);
  EXPECT_TRUE(d11.holds);
  EXPECT_EQ(std::get<wlp::ClosedForm>(d11.witness).tag, "3d-1=2^5");

  const WlpVerdict d2 = wlp_char2(2);
  EXPECT_FALSE(d2.holds);
  EXPECT_TRUE(std::holds_alternative<std::monostate>(d2.witness));

  EXPECT_TRUE(wlp_char2(1).holds);
  EXPECT_TRUE(wlp_char2(5).holds);  // 3d+1 = 16
}

TEST(WlpChar2, MatchesCriterionUpTo512) {
  for (std::int64_t d = 1; d <= 512; ++d)
    EXPECT_EQ(wlp_char2(d).holds, decide_wlp_criterion(d, PrimeModulus(2)).holds)
        << "d=" << d;
}

TEST(DivisorObstruction, KnownValuesAndConsequence) {
  EXPECT_TRUE(divisor_obstruction(9, PrimeModulus(3)));
  EXPECT_TRUE(divisor_obstruction(15, PrimeModulus(5)));
  EXPECT_FALSE(decide_wlp_criterion(15, PrimeModulus(5)).holds);
  // d even: divisibility does not obstruct (d=6, p=3 even holds WLP)
  EXPECT_FALSE(divisor_obstruction(6, PrimeModulus(3)));
  EXPECT_TRUE(decide_wlp_criterion(6, PrimeModulus(3)).holds);
  EXPECT_FALSE(divisor_obstruction(9, PrimeModulus(2)));
  EXPECT_THROW(divisor_obstruction(0, PrimeModulus(3)), std::invalid_argument);
}

}  // namespace
