#pragma once

// Existence and construction of a polarization w for which a given Euler
// vector satisfies the strict partial-Euler bounds.
//
// With S_j = w_1 + ... + w_j and P_j = χ_1 + ... + χ_j, the strict bound at j
// is equivalent to  P_j − rj < S_j χ < P_j − r(j−1),  i.e. each S_j lies in an
// open box of width r/|χ| that depends on j alone. Together with
// 0 < S_1 < ... < S_{n−1} < 1 this is a chain of one-dimensional
// constraints, solved exactly below.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainmod/curve.hpp"
#include "chainmod/rational.hpp"

namespace chainmod {

enum class WCase { Case1, Case2, Case3, NotInW };

/// Which sufficient family the Euler vector belongs to:
///   Case1: χ = 0 and (j−1)r < P_j < jr for 1 <= j <= n−1,
///   Case2: χ < 0 and every χ_i < 0,
///   Case3: χ > 0 and Σ_{i∈I} χ_i > (|I|−1)r for every nonempty I.
struct Membership {
  WCase which = WCase::NotInW;
  std::string reason;  // first failing condition when NotInW
};

Membership membership_W(std::int64_t r, std::span<const std::int64_t> chi_vec);

/// Σ_{i∈I} χ_i > (|I|−1)r for all nonempty I, checked through the m smallest
/// entries for m = 1..n (the binding subset of each size).
bool subset_condition(std::int64_t r, std::span<const std::int64_t> chi_vec);

struct PartialSumBox {
  std::size_t j;
  OpenInterval raw;  // straight from the inequality; width r/|χ|
  OpenInterval box;  // raw ∩ (0, 1)
};

/// Boxes for S_1..S_{n−1}. Throws Degenerate when χ = 0.
std::vector<PartialSumBox> partial_sum_boxes(std::int64_t r, std::span<const std::int64_t> chi_vec);

struct SolveStep {
  PartialSumBox box;
  OpenInterval feasible;        // after chain propagation
  std::optional<Rat> chosen;  // S_j, absent once infeasibility is found
};

enum class SolveStatus { Feasible, Infeasible };

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  Membership membership;
  bool degenerate = false;  // χ = 0: the bounds do not involve w
  std::optional<Polarization> weights;
  std::optional<std::size_t> witness_j;  // first j with an empty feasible set
  std::vector<SolveStep> trace;
};

/// Picks each S_j as the least-denominator rational in its propagated box.
/// A Feasible result is re-verified (validate_polarization and the strict
/// bounds); a failure there throws InvariantViolation.
SolveResult construct_polarization(std::int64_t r, std::span<const std::int64_t> chi_vec);

/// Exhaustive search over S_j = a_j / max_den with 0 < a_1 < ... < a_{n−1} <
/// max_den, testing the bounds row by row. Returns the first hit.
std::optional<Polarization> grid_oracle(std::int64_t r, std::span<const std::int64_t> chi_vec,
                                        std::int64_t max_den);

const char* to_string(WCase c);
const char* to_string(SolveStatus s);

}  // namespace chainmod
