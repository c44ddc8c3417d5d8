#pragma once

// Inequality systems governing w-(semi)stability of sheaves on a chain.
// Vector bundles obey the partial-Euler bounds; weak bounds are necessary,
// and with semistable restrictions they are also sufficient. A glued sheaf
// E_u with rank(σ_i) = k_i obeys the node-rank bounds, which follow from the
// (m,k)-semistability hypothesis system.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chainmod/curve.hpp"
#include "chainmod/rational.hpp"

namespace chainmod {

enum class InequalityVerdict { AllStrict, AllWeak, Violated };

struct InequalityRow {
  std::size_t j;
  Rat lower_bound;
  std::int64_t value;
  Rat upper_bound;
  bool satisfied_strict;
  bool satisfied_weak;
};

struct InequalityReport {
  bool strict = false;
  std::vector<InequalityRow> rows;
  InequalityVerdict verdict = InequalityVerdict::AllStrict;
};

/// Bounds for χ_j:  S_j χ − P_{j−1} + r(j−1)  and  S_j χ − P_{j−1} + rj,
/// where S_j = w_1 + ... + w_j and P_{j−1} = `chi_prefix`. 1 <= j <= n−1.
OpenInterval partial_euler_interval(std::size_t j, const Polarization& w, std::int64_t chi,
                               std::int64_t chi_prefix, std::int64_t r);
ClosedInterval partial_euler_closed(std::size_t j, const Polarization& w, std::int64_t chi,
                               std::int64_t chi_prefix, std::int64_t r);

/// Evaluates the partial-Euler bounds for j = 1..n−1. In strict mode any
/// row that is not strict makes the verdict Violated.
InequalityReport check_partial_euler(const ChainCurve& curve, std::int64_t r,
                                std::span<const std::int64_t> chi_vec, const Polarization& w,
                                bool strict);

/// Node-rank bounds for E_u, j = 1..n−1:
///   S_jχ − P_{j−1} − Σ_{i=j+1}^{n−1} k_i + (j−1)r  <=  χ_j
///                       <=  S_jχ − P_{j−1} + Σ_{i<=j} k_i + (j−1)r.
InequalityReport sigma_rank_bounds(const ChainCurve& curve, std::int64_t r,
                                   std::span<const std::int64_t> chi_vec,
                                   std::span<const std::int64_t> k_vec, const Polarization& w,
                                   bool strict);

struct HypothesisRow {
  std::size_t i;
  std::int64_t value;
  Rat bound;
  bool holds;
};

struct HypothesisReport {
  std::vector<HypothesisRow> rows;
  bool holds = true;
};

/// χ_1 <= w_1χ + k_1,  χ_i <= w_iχ + k_i + r (1 < i < n),  χ_n <= w_nχ + r.
/// Empty (and true) for n = 1.
HypothesisReport hypothesis_system(const ChainCurve& curve, std::int64_t r,
                                   std::span<const std::int64_t> chi_vec,
                                   std::span<const std::int64_t> k_vec, const Polarization& w);

/// Facts about the component bundles that numerical data cannot decide.
/// An empty vector means "not asserted"; otherwise it must have length n.
struct ComponentFlags {
  std::vector<bool> mk_semistable;  // E_1 (0,k_1)-, E_i (0,k_i+r)-, E_n (0,r)-semistable
  bool mk_stable_any = false;
  std::vector<bool> restriction_semistable;  // each E_i semistable
  bool restriction_stable_any = false;
};

enum class StabilityStatus { CertifiedSemistable, CertifiedStable, NecessaryViolated, Indeterminate };

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::Indeterminate;
  std::vector<std::string> reasons;
};

/// Combines the necessary and sufficient criteria. Throws InvalidInput on
/// inconsistent flags.
StabilityVerdict classify(const ChainCurve& curve, std::int64_t r,
                          std::span<const std::int64_t> chi_vec,
                          std::span<const std::int64_t> k_vec, const Polarization& w,
                          const ComponentFlags& flags);

const char* to_string(InequalityVerdict v);
const char* to_string(StabilityStatus s);

}  // namespace chainmod
