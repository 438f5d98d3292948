#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "wlp/fp.hpp"
#include "wlp/fp_matrix.hpp"

namespace {

using wlp::FpMatrix;
using wlp::PrimeModulus;

TEST(IsPrime, KnownValues) {
  EXPECT_TRUE(wlp::is_prime(2));
  EXPECT_FALSE(wlp::is_prime(1));
  EXPECT_FALSE(wlp::is_prime(91));  // 7 * 13
  EXPECT_TRUE(wlp::is_prime(3));
  EXPECT_FALSE(wlp::is_prime(4));
  EXPECT_TRUE(wlp::is_prime(97));
  EXPECT_FALSE(wlp::is_prime(1000001));  // 101 * 9901
  EXPECT_TRUE(wlp::is_prime(2147483647));
}

TEST(PrimeModulus, RejectsNonPrimesAndRange) {
  EXPECT_THROW(PrimeModulus(1), std::invalid_argument);
  EXPECT_THROW(PrimeModulus(0), std::invalid_argument);
  EXPECT_THROW(PrimeModulus(-7), std::invalid_argument);
  EXPECT_THROW(PrimeModulus(91), std::invalid_argument);
  EXPECT_THROW(PrimeModulus(std::int64_t{1} << 31), std::invalid_argument);
  // prime, but at/above the 2^31 cap
  EXPECT_THROW(PrimeModulus(2147483659), std::invalid_argument);
  EXPECT_NO_THROW(PrimeModulus(2));
  EXPECT_NO_THROW(PrimeModulus(2147483647));
}

TEST(PrimeModulus, Arithmetic) {
  const PrimeModulus p(17);
  EXPECT_EQ(p.add(5, 13), 1u);
  EXPECT_EQ(p.sub(5, 13), 9u);
  EXPECT_EQ(p.mul(5, 13), 14u);
  EXPECT_EQ(p.neg(5), 12u);
  EXPECT_EQ(p.inv(5), 7u);  // 5 * 7 = 35 = 1 mod 17
  EXPECT_EQ(p.pow(5, 0), 1u);
  EXPECT_EQ(p.residue(-1), 16u);
  EXPECT_THROW(p.inv(0), std::domain_error);

  const PrimeModulus two(2);
  EXPECT_EQ(two.inv(1), 1u);
  EXPECT_EQ(two.add(1, 1), 0u);
}

TEST(PrimeModulus, BarrettReductionMatchesHardwareDivision) {
  std::mt19937_64 rng(20240811);
  const std::int64_t primes[] = {2, 3, 5, 97, 65537, 2147483647};
  for (const std::int64_t pr : primes) {
    const PrimeModulus p(pr);
    for (int t = 0; t < 2000; ++t) {
      const std::uint64_t x = rng() >> 2;  // < 2^62
      EXPECT_EQ(p.reduce(x), x % static_cast<std::uint64_t>(pr));
    }
  }
}

TEST(FpMatrixRank, KnownValues) {
  for (const std::int64_t pr : {2, 5, 13}) {
    const PrimeModulus p(pr);
    const auto id3 = FpMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, p);
    EXPECT_EQ(id3.rank(), 3u);
  }
  const auto ones = FpMatrix::from_rows({{1, 1}, {1, 1}}, PrimeModulus(2));
  EXPECT_EQ(ones.rank(), 1u);
  const auto dep = FpMatrix::from_rows({{1, 2}, {2, 4}}, PrimeModulus(5));
  EXPECT_EQ(dep.rank(), 1u);
  const auto zero = FpMatrix(4, 3, PrimeModulus(7));
  EXPECT_EQ(zero.rank(), 0u);
}

std::vector<std::int64_t> small_primes_upto(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p <= n; ++p)
    if (wlp::is_prime(static_cast<std::uint64_t>(p))) ps.push_back(p);
  return ps;
}

FpMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                       PrimeModulus p) {
  FpMatrix m(rows, cols, p);
  std::uniform_int_distribution<std::int64_t> dist(0, p.value() - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dist(rng));
  return m;
}

TEST(FpMatrixRank, TransposeInvariance) {
  std::mt19937_64 rng(1);
  const auto primes = small_primes_upto(100);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int t = 0; t < 300; ++t) {
    const PrimeModulus p(primes[pick(rng)]);
    const FpMatrix m = random_matrix(rng, dim(rng), dim(rng), p);
    EXPECT_EQ(m.rank(), m.transposed().rank());
  }
}

TEST(FpMatrixRank, ElementaryRowOperationsPreserveRank) {
  std::mt19937_64 rng(2);
  const auto primes = small_primes_upto(100);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<std::size_t> dim(2, 7);
  for (int t = 0; t < 300; ++t) {
    const PrimeModulus p(primes[pick(rng)]);
    const std::size_t rows = dim(rng), cols = dim(rng);
    const FpMatrix m = random_matrix(rng, rows, cols, p);
    const std::size_t base = m.rank();

    std::uniform_int_distribution<std::size_t> row(0, rows - 1);
    std::uniform_int_distribution<std::int64_t> nonzero(1, p.value() - 1);

    // scale one row by a nonzero scalar
    FpMatrix scaled = m;
    const std::size_t r1 = row(rng);
    const std::uint32_t s = p.residue(nonzero(rng));
    for (std::size_t c = 0; c < cols; ++c) scaled.set(r1, c, p.mul(s, m.at(r1, c)));
    EXPECT_EQ(scaled.rank(), base);

    // add one row to another
    FpMatrix added = m;
    const std::size_t r2 = row(rng);
    std::size_t r3 = row(rng);
    if (rows > 1)
      while (r3 == r2) r3 = row(rng);
    if (r3 != r2) {
      for (std::size_t c = 0; c < cols; ++c)
        added.set(r3, c, p.add(m.at(r3, c), m.at(r2, c)));
      EXPECT_EQ(added.rank(), base);
    }
  }
}

// Independent determinant oracle: cofactor expansion, sizes <= 4.
std::uint32_t cofactor_det(const FpMatrix& m, std::vector<std::size_t> rows,
                           std::vector<std::size_t> cols, PrimeModulus p) {
  const std::size_t n = rows.size();
  if (n == 1) return m.at(rows[0], cols[0]);
  std::uint32_t det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t cc = 0; cc < n; ++cc)
      if (cc != c) sub_cols.push_back(cols[cc]);
    const std::uint32_t minor = cofactor_det(m, sub_rows, sub_cols, p);
    const std::uint32_t term = p.mul(m.at(rows[0], cols[c]), minor);
    det = c % 2 == 0 ? p.add(det, term) : p.sub(det, term);
  }
  return det;
}

TEST(FpMatrixRank, FullRankWhenCofactorDeterminantNonzero) {
  std::mt19937_64 rng(3);
  const auto primes = small_primes_upto(100);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  int nonsingular_seen = 0;
  for (int t = 0; t < 500; ++t) {
    const PrimeModulus p(primes[pick(rng)]);
    const std::size_t n = dim(rng);
    const FpMatrix m = random_matrix(rng, n, n, p);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    if (cofactor_det(m, idx, idx, p) != 0) {
      ++nonsingular_seen;
      EXPECT_EQ(m.rank(), n);
    }
  }
  EXPECT_GT(nonsingular_seen, 100);
}

}  // namespace
