#include "chainmod/polarization_solver.hpp"

#include <algorithm>

#include "chainmod/checked.hpp"
#include "chainmod/errors.hpp"
#include "chainmod/euler.hpp"
#include "chainmod/stability.hpp"

namespace chainmod {

namespace {

void check_input(std::int64_t r, std::span<const std::int64_t> chi_vec) {
  if (r < 1) throw InvalidInput("rank r must be >= 1");
  if (chi_vec.empty()) throw InvalidInput("empty Euler vector");
}

std::vector<std::int64_t> prefix_sums(std::span<const std::int64_t> chi_vec) {
  std::vector<std::int64_t> p(chi_vec.size() + 1, 0);
  for (std::size_t i = 0; i < chi_vec.size(); ++i) p[i + 1] = checked::add(p[i], chi_vec[i]);
  return p;
}

// First j <= n−1 violating (j−1)r < P_j < jr, if any.
std::optional<std::size_t> failing_prefix(std::int64_t r, std::span<const std::int64_t> chi_vec) {
  const auto p = prefix_sums(chi_vec);
  for (std::size_t j = 1; j < chi_vec.size(); ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    if (!(checked::mul(jj - 1, r) < p[j] && p[j] < checked::mul(jj, r))) return j;
  }
  return std::nullopt;
}

Polarization uniform_polarization(std::size_t n) {
  return validate_polarization(std::vector<Rat>(n, rat_make(1, static_cast<std::int64_t>(n))));
}

Polarization from_partial_sums(const std::vector<Rat>& sums) {
  std::vector<Rat> w;
  w.reserve(sums.size() + 1);
  Rat previous;
  for (const auto& s : sums) {
    w.push_back(s - previous);
    previous = s;
  }
  w.push_back(Rat(1) - previous);
  return validate_polarization(std::move(w));
}

}  // namespace

bool subset_condition(std::int64_t r, std::span<const std::int64_t> chi_vec) {
  std::vector<std::int64_t> sorted(chi_vec.begin(), chi_vec.end());
  std::sort(sorted.begin(), sorted.end());
  std::int64_t running = 0;
  for (std::size_t m = 1; m <= sorted.size(); ++m) {
    running = checked::add(running, sorted[m - 1]);
    if (running <= checked::mul(static_cast<std::int64_t>(m) - 1, r)) return false;
  }
  return true;
}

Membership membership_W(std::int64_t r, std::span<const std::int64_t> chi_vec) {
  check_input(r, chi_vec);
  const auto chi = chi_total(chi_vec, r);
  if (chi == 0) {
    if (auto j = failing_prefix(r, chi_vec)) {
      return {WCase::NotInW, "chi = 0 but (j-1)r < chi_1 + ... + chi_j < jr fails at j = " +
                                 std::to_string(*j)};
    }
    return {WCase::Case1, ""};
  }
  if (chi < 0) {
    for (std::size_t i = 0; i < chi_vec.size(); ++i) {
      if (chi_vec[i] >= 0) {
        return {WCase::NotInW,
                "chi < 0 but chi_" + std::to_string(i + 1) + " = " + std::to_string(chi_vec[i]) +
                    " is not negative"};
      }
    }
    return {WCase::Case2, ""};
  }
  if (!subset_condition(r, chi_vec)) {
    return {WCase::NotInW, "chi > 0 but some subset I has sum(chi_i, i in I) <= (|I|-1)r"};
  }
  return {WCase::Case3, ""};
}

std::vector<PartialSumBox> partial_sum_boxes(std::int64_t r,
                                             std::span<const std::int64_t> chi_vec) {
  check_input(r, chi_vec);
  const auto chi = chi_total(chi_vec, r);
  if (chi == 0) throw Degenerate("chi = 0: the bounds do not depend on w");
  const auto p = prefix_sums(chi_vec);
  const OpenInterval unit{Rat(0), Rat(1)};
  std::vector<PartialSumBox> boxes;
  for (std::size_t j = 1; j < chi_vec.size(); ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    // P_j − rj < S_j χ < P_j − r(j−1); dividing by χ < 0 flips the ends.
    Rat a = rat_make(checked::sub(p[j], checked::mul(r, jj)), chi);
    Rat b = rat_make(checked::sub(p[j], checked::mul(r, jj - 1)), chi);
    OpenInterval raw = chi > 0 ? OpenInterval{a, b} : OpenInterval{b, a};
    boxes.push_back({j, raw, interval_intersect(raw, unit)});
  }
  return boxes;
}

SolveResult construct_polarization(std::int64_t r, std::span<const std::int64_t> chi_vec) {
  check_input(r, chi_vec);
  SolveResult result;
  result.membership = membership_W(r, chi_vec);
  const auto n = chi_vec.size();
  const auto chi = chi_total(chi_vec, r);

  if (chi == 0 || n == 1) {
    result.degenerate = (chi == 0);
    if (auto j = failing_prefix(r, chi_vec)) {
      result.witness_j = j;
      return result;
    }
    result.status = SolveStatus::Feasible;
    result.weights = uniform_polarization(n);
  } else {
    auto boxes = partial_sum_boxes(r, chi_vec);
    // Backward pass: S_j < S_{j+1} < hi_{j+1}, so each upper end inherits
    // the minimum of all later upper ends.
    std::vector<Rat> upper(boxes.size());
    Rat running(1);
    for (std::size_t idx = boxes.size(); idx-- > 0;) {
      running = std::min(running, boxes[idx].box.hi);
      upper[idx] = running;
    }
    std::vector<Rat> sums;
    Rat previous(0);
    for (std::size_t idx = 0; idx < boxes.size(); ++idx) {
      OpenInterval feasible{std::max(boxes[idx].box.lo, previous), upper[idx]};
      if (feasible.empty()) {
        result.trace.push_back({boxes[idx], feasible, std::nullopt});
        result.witness_j = boxes[idx].j;
        return result;
      }
      Rat s = pick_in_open(feasible);
      result.trace.push_back({boxes[idx], feasible, s});
      previous = s;
      sums.push_back(std::move(s));
    }
    result.status = SolveStatus::Feasible;
    result.weights = from_partial_sums(sums);
  }

  const ChainCurve curve(std::vector<std::int64_t>(n, 0));
  const auto check = check_partial_euler(curve, r, chi_vec, *result.weights, true);
  if (check.verdict != InequalityVerdict::AllStrict) {
    throw InvariantViolation("constructed polarization fails the strict bounds");
  }
  return result;
}

std::optional<Polarization> grid_oracle(std::int64_t r, std::span<const std::int64_t> chi_vec,
                                        std::int64_t max_den) {
  check_input(r, chi_vec);
  if (max_den < 1) throw InvalidInput("max_den must be >= 1");
  const auto n = chi_vec.size();
  const ChainCurve curve(std::vector<std::int64_t>(n, 0));
  if (n == 1) {
    auto w = validate_polarization({Rat(1)});
    return w;
  }
  const Integer chi(static_cast<long>(chi_total(chi_vec, r)));
  const Integer den(static_cast<long>(max_den));

  // Row j, scaled by max_den:
  //   a_j χ − D P_{j−1} + D r(j−1) < D χ_j < a_j χ − D P_{j−1} + D r j.
  auto row_ok = [&](std::size_t j, std::int64_t a, const Integer& prefix) {
    Integer base = Integer(static_cast<long>(a)) * chi - den * prefix +
                   den * Integer(static_cast<long>(r)) * Integer(static_cast<long>(j - 1));
    Integer value = den * Integer(static_cast<long>(chi_vec[j - 1]));
    return base < value && value < base + den * Integer(static_cast<long>(r));
  };

  std::vector<std::int64_t> numerators(n - 1);
  std::optional<Polarization> found;
  // Depth-first over strictly increasing numerators; row j only involves a_j.
  auto search = [&](auto&& self, std::size_t j, std::int64_t lowest, const Integer& prefix) -> bool {
    if (j == n) {
      std::vector<Rat> sums;
      for (auto a : numerators) sums.push_back(rat_make(a, max_den));
      auto w = from_partial_sums(sums);
      if (check_partial_euler(curve, r, chi_vec, w, true).verdict != InequalityVerdict::AllStrict) {
        throw InvariantViolation("grid oracle row test disagrees with the full check");
      }
      found = std::move(w);
      return true;
    }
    const auto remaining = static_cast<std::int64_t>(n - 1 - j);
    for (std::int64_t a = lowest; a <= max_den - 1 - remaining; ++a) {
      if (!row_ok(j, a, prefix)) continue;
      numerators[j - 1] = a;
      if (self(self, j + 1, a + 1, prefix + Integer(static_cast<long>(chi_vec[j - 1])))) return true;
    }
    return false;
  };
  search(search, 1, 1, Integer(0));
  return found;
}

const char* to_string(WCase c) {
  switch (c) {
    case WCase::Case1: return "Case1";
    case WCase::Case2: return "Case2";
    case WCase::Case3: return "Case3";
    case WCase::NotInW: return "NotInW";
  }
  return "?";
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "?";
}

}  // namespace chainmod
