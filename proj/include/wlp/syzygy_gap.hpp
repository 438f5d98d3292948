#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "wlp/fp_matrix.hpp"
#include "wlp/int_util.hpp"

namespace wlp {

// Syzygy gap of I = (x^{d1}, y^{d2}, (x+y)^{d3}) in S = F_p[x,y], computed
// two independent ways: from graded linear algebra on S/I (gap_oracle) and
// from Han's closed form (delta_star_han). On every minimally generated
// triple the two must agree; cross-checking them is the point of having
// both.

using Rational = boost::rational<std::int64_t>;
using RationalTriple = std::array<Rational, 3>;

/// Exact taxi-cab (L1) distance between triples.
inline Rational taxicab(const RationalTriple& v, const RationalTriple& w) {
  Rational sum(0);
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational diff = v[i] - w[i];
    sum += diff < Rational(0) ? -diff : diff;
  }
  return sum;
}

/// Lattice of integer triples with odd coordinate sum; equivalently all
/// three entries odd, or exactly one of them odd.
inline bool is_in_L_odd(std::int64_t u1, std::int64_t u2, std::int64_t u3) {
  return (u1 + u2 + u3) % 2 != 0;
}

/// The three forms fail to minimally generate the ideal, so the expected
/// resolution shape does not apply and no syzygy gap is defined.
class DegenerateTripleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syzygy generator degrees alpha <= beta and gap delta = beta - alpha of a
/// minimally generated triple. The resolution twists are -alpha and -beta,
/// so alpha + beta = d1 + d2 + d3 and delta has the parity of d1 + d2 + d3;
/// minimality forces max(d1,d2,d3) < alpha.
struct GapCertificate {
  std::array<std::int64_t, 3> degrees{};
  PrimeModulus p;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t delta = 0;
};

namespace detail {

/// Row n of Pascal's triangle mod p. Additive recurrence: exact for any n,
/// no inverses involved.
inline std::vector<std::uint32_t> binomial_row(std::int64_t n, PrimeModulus p) {
  std::vector<std::uint32_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = p.reduce(1);
  for (std::int64_t r = 1; r <= n; ++r)
    for (std::int64_t j = r; j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          p.add(row[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j - 1)]);
  return row;
}

/// A generator of I as a coefficient vector: coeff[a] multiplies x^a y^{deg-a}.
struct BivariateForm {
  std::int64_t deg = 0;
  std::vector<std::uint32_t> coeff;
};

/// dim of the degree-m piece of the ideal spanned by the given forms: the
/// rank of the matrix whose columns are g * (monomial of degree m - deg g)
/// written in the basis {x^a y^{m-a}} of S_m.
inline std::int64_t ideal_dim(const std::vector<BivariateForm>& gens, std::int64_t m,
                              PrimeModulus p) {
  std::size_t cols = 0;
  for (const auto& g : gens)
    if (m >= g.deg) cols += static_cast<std::size_t>(m - g.deg + 1);
  if (cols == 0) return 0;
  FpMatrix mat(static_cast<std::size_t>(m) + 1, cols, p);
  std::size_t c = 0;
  for (const auto& g : gens) {
    for (std::int64_t t = 0; t + g.deg <= m; ++t, ++c)
      for (std::int64_t a = 0; a <= g.deg; ++a)
        mat.set(static_cast<std::size_t>(t + a), c, g.coeff[static_cast<std::size_t>(a)]);
  }
  return static_cast<std::int64_t>(mat.rank());
}

}  // namespace detail

/// Compute the syzygy gap of (x^{d1}, y^{d2}, (x+y)^{d3}) from the graded
/// Hilbert function of S/I.
///
/// For each degree m, dim (S/I)_m = (m+1) - ideal_dim(m). With
/// H(t) = sum_m dim (S/I)_m t^m and N(t) = (1-t)^2 H(t), the polynomial
/// T(t) = N(t) - 1 + t^{d1} + t^{d2} + t^{d3} collects the syzygy degrees:
/// a minimally generated triple has T(t) = t^alpha + t^beta (one
/// coefficient-2 term when alpha = beta). Any other shape, or a syzygy at
/// or below the largest generator degree, means the triple is degenerate
/// and is reported as an error rather than guessed at.
inline GapCertificate gap_oracle(std::int64_t d1, std::int64_t d2, std::int64_t d3,
                                 PrimeModulus p) {
  if (d1 < 1 || d2 < 1 || d3 < 1)
    throw std::invalid_argument("gap_oracle: degrees must be >= 1");
  const std::string triple = "(" + std::to_string(d1) + "," + std::to_string(d2) + "," +
                             std::to_string(d3) + ") mod " + std::to_string(p.value());

  std::vector<detail::BivariateForm> gens(3);
  gens[0].deg = d1;
  gens[0].coeff.assign(static_cast<std::size_t>(d1) + 1, 0);
  gens[0].coeff.back() = p.reduce(1);  // x^{d1}
  gens[1].deg = d2;
  gens[1].coeff.assign(static_cast<std::size_t>(d2) + 1, 0);
  gens[1].coeff.front() = p.reduce(1);  // y^{d2}
  gens[2].deg = d3;
  gens[2].coeff = detail::binomial_row(d3, p);  // (x+y)^{d3}

  // Hilbert function of S/I up to the Artinian cutoff. x^{d1} and y^{d2}
  // alone already annihilate every degree >= d1 + d2 - 1.
  const std::int64_t cap = d1 + d2;
  std::vector<std::int64_t> h;
  for (std::int64_t m = 0;; ++m) {
    if (m > cap) throw std::logic_error("gap_oracle: Hilbert function failed to terminate");
    const std::int64_t dim = m + 1 - detail::ideal_dim(gens, m, p);
    if (dim == 0) {
      // cutoff guard: the function must stay zero from here on
      for (std::int64_t off = 1; off <= 2; ++off)
        if (detail::ideal_dim(gens, m + off, p) != m + off + 1)
          throw std::logic_error("gap_oracle: Hilbert function revived after reaching zero");
      break;
    }
    h.push_back(dim);
  }

  // T(t) = (1-t)^2 H(t) - 1 + t^{d1} + t^{d2} + t^{d3}
  const std::int64_t dmax = std::max({d1, d2, d3});
  const auto tsize = static_cast<std::size_t>(
      std::max<std::int64_t>(static_cast<std::int64_t>(h.size()) + 2, dmax + 1));
  std::vector<std::int64_t> tpoly(tsize, 0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    tpoly[i] += h[i];
    tpoly[i + 1] -= 2 * h[i];
    tpoly[i + 2] += h[i];
  }
  tpoly[0] -= 1;
  tpoly[static_cast<std::size_t>(d1)] += 1;
  tpoly[static_cast<std::size_t>(d2)] += 1;
  tpoly[static_cast<std::size_t>(d3)] += 1;

  std::vector<std::pair<std::int64_t, std::int64_t>> terms;  // (degree, coefficient)
  for (std::size_t i = 0; i < tpoly.size(); ++i)
    if (tpoly[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i), tpoly[i]);

  std::int64_t alpha = 0, beta = 0;
  if (terms.size() == 1 && terms[0].second == 2) {
    alpha = beta = terms[0].first;
  } else if (terms.size() == 2 && terms[0].second == 1 && terms[1].second == 1) {
    alpha = terms[0].first;
    beta = terms[1].first;
  } else {
    throw DegenerateTripleError("gap_oracle: " + triple +
                                " is degenerate: numerator of the Hilbert series does not "
                                "have the two-syzygy shape");
  }
  if (alpha + beta != d1 + d2 + d3)
    throw std::logic_error("gap_oracle: syzygy degrees violate alpha + beta = d1 + d2 + d3");
  if (dmax >= alpha)
    throw DegenerateTripleError("gap_oracle: " + triple +
                                " is degenerate: not minimally generated (syzygy at or "
                                "below a generator degree)");
  return GapCertificate{{d1, d2, d3}, p, alpha, beta, beta - alpha};
}

/// Witness for a positive delta*: minimal s = -n, the closest odd-sum
/// lattice point u (unique: L_odd points are pairwise L1-distance >= 2
/// apart, so radius-1 balls around them are disjoint), and the scaled
/// distance m = m_numerator / p^n < 1.
struct HanWitness {
  std::int64_t s = 0;
  std::array<std::int64_t, 3> u{};
  std::int64_t m_numerator = 0;
  friend bool operator==(const HanWitness&, const HanWitness&) = default;
};

struct HanCertificate {
  std::array<std::int64_t, 3> v{};
  PrimeModulus p;
  std::int64_t delta_star = 0;
  std::optional<HanWitness> witness;  // empty iff no (s, u) pair exists; then delta_star = 0
};

/// Evaluate delta* by Han's closed form, entirely in 64-bit integers.
///
/// For s = -n <= 0 the condition td(p^s v, u) < 1 clears denominators to
/// sum_i |v_i - p^n u_i| < p^n, and then delta* = p^{-s}(1 - m) =
/// p^n - sum_i |v_i - p^n u_i|; every comparison is an integer comparison.
///
/// Searching s <= 0 only is sound: for s >= 1 the triple p^s v is integral,
/// so its taxi-cab distance to L_odd is a nonnegative integer, and distance
/// 0 would require (for odd p) that v itself has odd coordinate sum, which
/// s = 0 already detects; for p = 2 the scaled coordinate sum is even.
///
/// The search starts at n_max = (least n with p^n >= v1+v2+v3) + 1 and
/// descends, returning at the first (therefore minimal) s that admits a
/// u in L_odd. Above the start level no admissible u exists: each candidate
/// coordinate is 0 or 1, the all-odd choice (1,1,1) would need
/// 2 p^n < v1+v2+v3, and the single-odd choices contradict sortedness or
/// the triangle hypothesis v3 < v1 + v2.
inline HanCertificate delta_star_han(std::int64_t v1, std::int64_t v2, std::int64_t v3,
                                     PrimeModulus p) {
  if (v1 < 1) throw std::invalid_argument("delta_star_han: entries must be >= 1");
  if (!(v1 <= v2 && v2 <= v3))
    throw std::invalid_argument("delta_star_han: entries must be sorted v1 <= v2 <= v3");
  if (v3 >= checked_add(v1, v2))
    throw std::invalid_argument("delta_star_han: triangle hypothesis v3 < v1 + v2 violated");

  const std::int64_t total = checked_add(checked_add(v1, v2), v3);
  std::vector<std::int64_t> powers{1};  // p^0 .. p^{n_max}
  while (powers.back() < total) powers.push_back(checked_mul(powers.back(), p.value()));
  powers.push_back(checked_mul(powers.back(), p.value()));

  const std::array<std::int64_t, 3> v{v1, v2, v3};
  for (auto n = static_cast<std::int64_t>(powers.size()) - 1; n >= 0; --n) {
    const std::int64_t q = powers[static_cast<std::size_t>(n)];
    std::optional<HanWitness> best;
    // u_i ranges over the integers within distance 1 of v_i / q
    for (std::int64_t du1 = -1; du1 <= 1; ++du1) {
      const std::int64_t u1 = v[0] / q + du1;
      if (u1 < 0) continue;
      for (std::int64_t du2 = -1; du2 <= 1; ++du2) {
        const std::int64_t u2 = v[1] / q + du2;
        if (u2 < 0) continue;
        for (std::int64_t du3 = -1; du3 <= 1; ++du3) {
          const std::int64_t u3 = v[2] / q + du3;
          if (u3 < 0 || !is_in_L_odd(u1, u2, u3)) continue;
          std::int64_t m_num = 0;
          const std::array<std::int64_t, 3> u{u1, u2, u3};
          for (std::size_t i = 0; i < 3; ++i) {
            const std::int64_t scaled = checked_mul(q, u[i]);
            m_num = checked_add(m_num, scaled >= v[i] ? scaled - v[i] : v[i] - scaled);
          }
          if (m_num >= q) continue;
          // ties cannot occur (the admissible u is unique), but keep the
          // certificate reproducible anyway: least m, then lex-least u
          if (!best || m_num < best->m_numerator) best = HanWitness{-n, u, m_num};
        }
      }
    }
    if (best) return HanCertificate{v, p, q - best->m_numerator, best};
  }
  return HanCertificate{v, p, 0, std::nullopt};
}

/// Witness for the diagonal double inequality 3d/(6k+2) > p^n > 3d/(6k+4);
/// n >= 0 is allowed here, unlike in the WLP criterion proper.
struct DiagonalWitness {
  std::int64_t n = 0;
  std::int64_t k = 0;
  friend bool operator==(const DiagonalWitness&, const DiagonalWitness&) = default;
};

/// Largest n >= 0 (with its k >= 0) satisfying the diagonal condition, by
/// the cleared-denominator test 3d - 4 p^n < 6 k p^n < 3d - 2 p^n. Empty if
/// no (n, k) exists. Equivalent to the existence of s <= 0 and an odd u
/// with |d p^s - u| < 1/3, i.e. a diagonal point of L_odd within taxi-cab
/// distance 1 of p^s (d,d,d).
inline std::optional<DiagonalWitness> diagonal_condition_scan(std::int64_t d, PrimeModulus p) {
  if (d < 1) throw std::invalid_argument("diagonal_condition_scan: d must be >= 1");
  const std::int64_t three_d = checked_mul(3, d);
  std::optional<DiagonalWitness> best;
  for (std::int64_t n = 0, q = 1; checked_mul(2, q) < three_d;
       ++n, q = checked_mul(q, p.value())) {
    const std::int64_t lo = three_d - checked_mul(4, q);
    const std::int64_t hi = three_d - checked_mul(2, q);
    if (const auto k = detail::first_k_in_window(lo, hi, q)) best = DiagonalWitness{n, *k};
  }
  return best;
}

}  // namespace wlp
