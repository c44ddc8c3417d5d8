#pragma once

// Brute-force oracles. Nothing here calls the stability checker, the gluing
// rank, the polarization solver or the component enumerator; each claim is
// re-derived from its definition so the library is never checked against
// itself.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chainmod/curve.hpp"
#include "chainmod/matrix.hpp"
#include "chainmod/rational.hpp"

namespace chainmod::oracle {

/// Grid for the implication sweep: χ_i ∈ [chi_min, chi_max], k_i ∈ [0, r],
/// S_j = a_j / w_den with 0 < a_1 < ... < a_{n−1} < w_den.
struct SweepBounds {
  std::size_t n = 2;
  std::int64_t r = 2;
  std::int64_t chi_min = 0;
  std::int64_t chi_max = -1;  // default: empty range
  std::int64_t w_den = 6;
  std::size_t max_witnesses = 8;
};

struct SweepTuple {
  std::vector<std::int64_t> chi_vec;
  std::vector<std::int64_t> k_vec;
  std::vector<Rat> weights;
};

struct SweepReport {
  std::size_t tuples = 0;
  std::size_t hypothesis_true = 0;
  std::size_t bounds_true = 0;
  std::vector<SweepTuple> implication_failures;       // hypothesis true, bounds false
  std::vector<SweepTuple> non_equivalence_witnesses;  // bounds true, hypothesis false
  std::size_t non_equivalence_count = 0;

  bool passed() const { return implication_failures.empty(); }
};

struct ImplicationEval {
  bool hypothesis_holds;  // χ_1 <= w_1χ + k_1, χ_i <= w_iχ + k_i + r, χ_n <= w_nχ + r
  bool bounds_hold;       // weak node-rank bounds for every j <= n−1
};

/// Evaluates both systems for one tuple with S_j = numerators[j−1] / den,
/// in integer arithmetic scaled by den.
ImplicationEval evaluate_implication_tuple(std::int64_t r, std::span<const std::int64_t> chi_vec,
                                           std::span<const std::int64_t> k_vec,
                                           std::span<const std::int64_t> numerators,
                                           std::int64_t den);

/// Exhaustive sweep asserting hypothesis ⇒ weak node-rank bounds.
SweepReport sweep_implication(const SweepBounds& bounds);

/// Σ_{i∈I} χ_i > (|I|−1)r for every nonempty I ⊆ {1..n}, literally.
/// Throws InvalidInput for n > 20.
bool subset_bruteforce(std::int64_t r, std::span<const std::int64_t> chi_vec);

/// Largest t with a nonzero t × t minor (Leibniz determinants).
/// Throws InvalidInput if either dimension exceeds 6.
std::int64_t minor_rank(const RatMatrix& m);

/// Component Euler vectors by an independent route: each partial sum
/// P_j = χ_1 + ... + χ_j must satisfy S_jχ + r(j−1) < P_j < S_jχ + rj, a
/// condition on P_j alone, so the set is the product of per-j candidate
/// lists found by scanning integers. Sorted lexicographically.
std::vector<std::vector<std::int64_t>> component_euler_vectors(std::size_t n, std::int64_t r,
                                                               std::int64_t chi,
                                                               const Polarization& w);

}  // namespace chainmod::oracle
