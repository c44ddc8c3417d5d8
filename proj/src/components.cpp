#include "chainmod/components.hpp"

#include <algorithm>
#include <numeric>

#include "chainmod/checked.hpp"
#include "chainmod/errors.hpp"
#include "chainmod/euler.hpp"
#include "chainmod/random.hpp"
#include "chainmod/stability.hpp"

namespace chainmod {

namespace {

void check_input(const ChainCurve& curve, std::int64_t r, const Polarization& w) {
  if (r < 1) throw InvalidInput("rank r must be >= 1");
  if (w.size() != curve.n()) throw InvalidInput("polarization length differs from component count");
}

}  // namespace

Component rationality_verdict(Component comp, std::int64_t r) {
  comp.coprime_everywhere = std::all_of(comp.multidegree.begin(), comp.multidegree.end(),
                                        [&](auto d) { return std::gcd(r, d) == 1; });
  comp.verdict = comp.coprime_everywhere ? Rationality::RationalByMainTheorem : Rationality::Unknown;
  return comp;
}

Enumeration enumerate_with_report(const ChainCurve& curve, std::int64_t r, std::int64_t chi,
                                  const Polarization& w) {
  check_input(curve, r, w);
  const auto n = curve.n();
  // Σχ_i = χ + r(n−1).
  const std::int64_t total = checked::add(chi, checked::mul(r, static_cast<std::int64_t>(n) - 1));
  Enumeration out;
  std::vector<std::int64_t> chis;
  chis.reserve(n);

  auto emit = [&](std::int64_t prefix) {
    chis.push_back(checked::sub(total, prefix));
    Component c;
    c.chi_vec = chis;
    for (std::size_t i = 0; i < n; ++i) {
      c.multidegree.push_back(degree_from_chi(chis[i], r, curve.genera()[i]));
    }
    if (check_partial_euler(curve, r, c.chi_vec, w, true).verdict != InequalityVerdict::AllStrict) {
      throw InvariantViolation("enumerated component fails the strict bounds");
    }
    out.components.push_back(rationality_verdict(std::move(c), r));
    chis.pop_back();
  };

  auto descend = [&](auto&& self, std::size_t j, std::int64_t prefix) -> void {
    if (j == n) {
      emit(prefix);
      return;
    }
    auto iv = partial_euler_interval(j, w, chi, prefix, r);
    if (iv.lo.is_integer()) out.boundary_hits.push_back({j, chis, iv.lo});
    if (iv.hi.is_integer()) out.boundary_hits.push_back({j, chis, iv.hi});
    for (auto value : list_integers_in(iv)) {
      chis.push_back(value);
      self(self, j + 1, checked::add(prefix, value));
      chis.pop_back();
    }
  };
  descend(descend, 1, 0);
  return out;
}

std::vector<Component> enumerate_components(const ChainCurve& curve, std::int64_t r,
                                            std::int64_t chi, const Polarization& w) {
  return enumerate_with_report(curve, r, chi, w).components;
}

bool is_generic(const Polarization& w, std::int64_t chi) {
  for (std::size_t j = 1; j < w.size(); ++j) {
    if ((w.partial_sum(j) * Rat(chi)).is_integer()) return false;
  }
  return true;
}

Polarization generic_w_sampler(const ChainCurve& curve, std::int64_t r, std::int64_t chi,
                               std::uint64_t seed) {
  if (r < 1) throw InvalidInput("rank r must be >= 1");
  const auto n = curve.n();
  if (n == 1) return validate_polarization({Rat(1)});
  if (chi == 0) {
    throw Infeasible("chi = 0: every bound is an integer, no polarization is generic");
  }
  Rng rng(seed);
  const auto slots = static_cast<std::int64_t>(n);
  constexpr int kMaxDraws = 10000;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const std::int64_t den = rng.uniform(std::max<std::int64_t>(slots, 2), 1000);
    // n−1 distinct numerators in 1..den−1, sorted.
    std::vector<std::int64_t> picks;
    while (picks.size() + 1 < n) {
      auto a = rng.uniform(1, den - 1);
      if (std::find(picks.begin(), picks.end(), a) == picks.end()) picks.push_back(a);
    }
    std::sort(picks.begin(), picks.end());
    std::vector<Rat> w;
    std::int64_t previous = 0;
    for (auto a : picks) {
      w.push_back(rat_make(a - previous, den));
      previous = a;
    }
    w.push_back(rat_make(den - previous, den));
    auto pol = validate_polarization(std::move(w));
    if (is_generic(pol, chi)) return pol;
  }
  throw Infeasible("no generic polarization found in " + std::to_string(kMaxDraws) + " draws");
}

std::size_t component_count(const ChainCurve& curve, std::int64_t r, std::int64_t chi,
                            const Polarization& w) {
  return enumerate_components(curve, r, chi, w).size();
}

const char* to_string(Rationality v) {
  return v == Rationality::RationalByMainTheorem ? "RationalByMainTheorem" : "Unknown";
}

}  // namespace chainmod
