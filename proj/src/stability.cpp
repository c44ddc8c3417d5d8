#include "chainmod/stability.hpp"

#include <algorithm>
#include <optional>

#include "chainmod/checked.hpp"
#include "chainmod/errors.hpp"
#include "chainmod/euler.hpp"

namespace chainmod {

namespace {

void check_shape(const ChainCurve& curve, std::int64_t r, std::span<const std::int64_t> chi_vec,
                 const Polarization& w) {
  if (r < 1) throw InvalidInput("rank r must be >= 1");
  if (chi_vec.size() != curve.n()) {
    throw InvalidInput("Euler vector has length " + std::to_string(chi_vec.size()) +
                       ", curve has " + std::to_string(curve.n()) + " components");
  }
  if (w.size() != curve.n()) {
    throw InvalidInput("polarization has length " + std::to_string(w.size()) + ", curve has " +
                       std::to_string(curve.n()) + " components");
  }
}

void check_sigma_ranks(const ChainCurve& curve, std::int64_t r,
                       std::span<const std::int64_t> k_vec) {
  if (k_vec.size() != curve.node_count()) {
    throw InvalidInput("sigma ranks have length " + std::to_string(k_vec.size()) + ", expected " +
                       std::to_string(curve.node_count()));
  }
  for (std::size_t i = 0; i < k_vec.size(); ++i) {
    if (k_vec[i] < 0 || k_vec[i] > r) {
      throw ValidationError(i + 1, "k_" + std::to_string(i + 1) + " = " +
                                       std::to_string(k_vec[i]) + " outside [0, r]");
    }
  }
}

InequalityRow make_row(std::size_t j, Rat lower, std::int64_t value, Rat upper) {
  Rat v(value);
  bool strict = lower < v && v < upper;
  bool weak = lower <= v && v <= upper;
  return {j, std::move(lower), value, std::move(upper), strict, weak};
}

void finish(InequalityReport& report) {
  bool all_strict = std::all_of(report.rows.begin(), report.rows.end(),
                                [](const auto& row) { return row.satisfied_strict; });
  bool all_weak = std::all_of(report.rows.begin(), report.rows.end(),
                              [](const auto& row) { return row.satisfied_weak; });
  if (all_strict) {
    report.verdict = InequalityVerdict::AllStrict;
  } else if (all_weak && !report.strict) {
    report.verdict = InequalityVerdict::AllWeak;
  } else {
    report.verdict = InequalityVerdict::Violated;
  }
}

// S_j χ − P_{j−1} + r(j−1), the common part of every lower/upper bound.
Rat base_bound(std::size_t j, const Polarization& w, std::int64_t chi, std::int64_t chi_prefix,
               std::int64_t r) {
  auto jm1 = static_cast<std::int64_t>(j) - 1;
  return w.partial_sum(j) * Rat(chi) - Rat(chi_prefix) + Rat(checked::mul(r, jm1));
}

}  // namespace

OpenInterval partial_euler_interval(std::size_t j, const Polarization& w, std::int64_t chi,
                               std::int64_t chi_prefix, std::int64_t r) {
  if (j < 1 || j + 1 > w.size()) {
    throw InvalidInput("index j = " + std::to_string(j) + " outside 1..n-1");
  }
  Rat lower = base_bound(j, w, chi, chi_prefix, r);
  Rat upper = lower + Rat(r);
  return {std::move(lower), std::move(upper)};
}

ClosedInterval partial_euler_closed(std::size_t j, const Polarization& w, std::int64_t chi,
                               std::int64_t chi_prefix, std::int64_t r) {
  auto open = partial_euler_interval(j, w, chi, chi_prefix, r);
  return {std::move(open.lo), std::move(open.hi)};
}

InequalityReport check_partial_euler(const ChainCurve& curve, std::int64_t r,
                                std::span<const std::int64_t> chi_vec, const Polarization& w,
                                bool strict) {
  check_shape(curve, r, chi_vec, w);
  const auto chi = chi_total(chi_vec, r);
  InequalityReport report;
  report.strict = strict;
  std::int64_t prefix = 0;
  for (std::size_t j = 1; j < curve.n(); ++j) {
    auto iv = partial_euler_interval(j, w, chi, prefix, r);
    report.rows.push_back(make_row(j, std::move(iv.lo), chi_vec[j - 1], std::move(iv.hi)));
    prefix = checked::add(prefix, chi_vec[j - 1]);
  }
  finish(report);
  return report;
}

InequalityReport sigma_rank_bounds(const ChainCurve& curve, std::int64_t r,
                                   std::span<const std::int64_t> chi_vec,
                                   std::span<const std::int64_t> k_vec, const Polarization& w,
                                   bool strict) {
  check_shape(curve, r, chi_vec, w);
  check_sigma_ranks(curve, r, k_vec);
  const auto chi = chi_total(chi_vec, r);
  const std::int64_t k_total = checked::sum(k_vec);
  InequalityReport report;
  report.strict = strict;
  std::int64_t prefix = 0;
  std::int64_t k_through_j = 0;
  for (std::size_t j = 1; j < curve.n(); ++j) {
    k_through_j += k_vec[j - 1];
    const std::int64_t k_after_j = k_total - k_through_j;
    Rat base = base_bound(j, w, chi, prefix, r);
    report.rows.push_back(make_row(j, base - Rat(k_after_j), chi_vec[j - 1], base + Rat(k_through_j)));
    prefix = checked::add(prefix, chi_vec[j - 1]);
  }
  finish(report);
  return report;
}

HypothesisReport hypothesis_system(const ChainCurve& curve, std::int64_t r,
                                   std::span<const std::int64_t> chi_vec,
                                   std::span<const std::int64_t> k_vec, const Polarization& w) {
  check_shape(curve, r, chi_vec, w);
  check_sigma_ranks(curve, r, k_vec);
  HypothesisReport report;
  const auto n = curve.n();
  if (n == 1) return report;
  const Rat chi(chi_total(chi_vec, r));
  for (std::size_t i = 1; i <= n; ++i) {
    std::int64_t extra = 0;
    if (i == 1) {
      extra = k_vec[0];
    } else if (i == n) {
      extra = r;
    } else {
      extra = k_vec[i - 1] + r;
    }
    Rat bound = w[i - 1] * chi + Rat(extra);
    bool holds = Rat(chi_vec[i - 1]) <= bound;
    report.holds = report.holds && holds;
    report.rows.push_back({i, chi_vec[i - 1], std::move(bound), holds});
  }
  return report;
}

namespace {

bool all_true(const std::vector<bool>& flags) {
  return !flags.empty() && std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

bool any_true(const std::vector<bool>& flags) {
  return std::any_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

void check_flags(const std::vector<bool>& semistable, bool stable_any, std::size_t n,
                 const char* name) {
  if (!semistable.empty() && semistable.size() != n) {
    throw InvalidInput(std::string(name) + " flags must have one entry per component");
  }
  if (stable_any && !any_true(semistable)) {
    throw InvalidInput(std::string("inconsistent flags: a component is asserted stable but no ") +
                       name + " flag is true");
  }
}

std::string first_failing_row(const InequalityReport& report) {
  for (const auto& row : report.rows) {
    if (!row.satisfied_weak) return "j = " + std::to_string(row.j);
  }
  return "no row";
}

}  // namespace

StabilityVerdict classify(const ChainCurve& curve, std::int64_t r,
                          std::span<const std::int64_t> chi_vec,
                          std::span<const std::int64_t> k_vec, const Polarization& w,
                          const ComponentFlags& flags) {
  check_flags(flags.mk_semistable, flags.mk_stable_any, curve.n(), "(m,k)-semistable");
  check_flags(flags.restriction_semistable, flags.restriction_stable_any, curve.n(),
              "restriction-semistable");

  StabilityVerdict verdict;
  const auto node_weak = sigma_rank_bounds(curve, r, chi_vec, k_vec, w, false);
  if (node_weak.verdict == InequalityVerdict::Violated) {
    verdict.status = StabilityStatus::NecessaryViolated;
    verdict.reasons.push_back("node-rank bounds (necessary for w-semistability of E_u) fail at " +
                              first_failing_row(node_weak));
    return verdict;
  }

  const bool locally_free =
      std::all_of(k_vec.begin(), k_vec.end(), [&](auto k) { return k == r; });
  std::optional<InequalityReport> euler_weak;
  if (locally_free) {
    euler_weak = check_partial_euler(curve, r, chi_vec, w, false);
    if (euler_weak->verdict == InequalityVerdict::Violated) {
      verdict.status = StabilityStatus::NecessaryViolated;
      verdict.reasons.push_back(
          "partial-Euler bounds (necessary for a w-semistable vector bundle) fail at " +
          first_failing_row(*euler_weak));
      return verdict;
    }
  }

  bool semistable = false;
  bool stable = false;

  if (locally_free && all_true(flags.restriction_semistable)) {
    semistable = true;
    verdict.reasons.push_back(
        "vector bundle with semistable restrictions satisfying the weak partial-Euler bounds");
    if (euler_weak->verdict == InequalityVerdict::AllStrict && flags.restriction_stable_any) {
      stable = true;
      verdict.reasons.push_back(
          "partial-Euler bounds strict and at least one restriction stable");
    }
  }

  const auto hypothesis = hypothesis_system(curve, r, chi_vec, k_vec, w);
  if (hypothesis.holds && all_true(flags.mk_semistable)) {
    semistable = true;
    verdict.reasons.push_back(
        "(m,k)-semistable components satisfying the node-rank hypothesis system");
    if (flags.mk_stable_any && node_weak.verdict == InequalityVerdict::AllStrict) {
      stable = true;
      verdict.reasons.push_back(
          "a component is (m,k)-stable and the node-rank bounds hold strictly");
    }
  }

  if (stable) {
    verdict.status = StabilityStatus::CertifiedStable;
  } else if (semistable) {
    verdict.status = StabilityStatus::CertifiedSemistable;
  } else {
    verdict.status = StabilityStatus::Indeterminate;
    verdict.reasons.push_back("necessary bounds hold but no sufficient criterion applies");
  }
  return verdict;
}

const char* to_string(InequalityVerdict v) {
  switch (v) {
    case InequalityVerdict::AllStrict: return "AllStrict";
    case InequalityVerdict::AllWeak: return "AllWeak";
    case InequalityVerdict::Violated: return "Violated";
  }
  return "?";
}

const char* to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::CertifiedSemistable: return "CertifiedSemistable";
    case StabilityStatus::CertifiedStable: return "CertifiedStable";
    case StabilityStatus::NecessaryViolated: return "NecessaryViolated";
    case StabilityStatus::Indeterminate: return "Indeterminate";
  }
  return "?";
}

}  // namespace chainmod
