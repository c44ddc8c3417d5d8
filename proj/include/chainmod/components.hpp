#pragma once

// Irreducible components of the moduli space of w-semistable rank-r sheaves
// with Euler characteristic χ on a chain. Components are indexed by
// multidegree and each carries a rationality verdict.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chainmod/curve.hpp"
#include "chainmod/rational.hpp"

namespace chainmod {

enum class Rationality { RationalByMainTheorem, Unknown };

struct Component {
  std::vector<std::int64_t> chi_vec;
  std::vector<std::int64_t> multidegree;
  bool coprime_everywhere = false;
  Rationality verdict = Rationality::Unknown;
};

/// A bound S_jχ − P_{j−1} + r(j−1) (or + rj) that landed on an integer while
/// enumerating; that integer is excluded by strictness.
struct BoundaryHit {
  std::size_t j;
  std::vector<std::int64_t> chi_prefix;  // χ_1..χ_{j−1} of the branch
  Rat endpoint;
};

struct Enumeration {
  std::vector<Component> components;  // lexicographic in chi_vec
  std::vector<BoundaryHit> boundary_hits;
};

/// Depth-first over j = 1..n−1 with χ_j ranging over the integers strictly
/// inside the j-th bound interval; χ_n is forced by Σχ_i − r(n−1) = χ.
Enumeration enumerate_with_report(const ChainCurve& curve, std::int64_t r, std::int64_t chi,
                                  const Polarization& w);

std::vector<Component> enumerate_components(const ChainCurve& curve, std::int64_t r,
                                            std::int64_t chi, const Polarization& w);

/// Sets coprime_everywhere = AND_i gcd(r, d_i) = 1 and the verdict from it.
/// Components come out of the enumerator already satisfying the strict bounds.
Component rationality_verdict(Component comp, std::int64_t r);

/// True when no S_j χ (1 <= j <= n−1) is an integer, i.e. no bound met while
/// enumerating can be an integer and each interval holds exactly r integers.
bool is_generic(const Polarization& w, std::int64_t chi);

/// Seeded rejection sampling of a generic polarization. Throws Infeasible if
/// χ = 0 with n >= 2 (bounds are integers for every w).
Polarization generic_w_sampler(const ChainCurve& curve, std::int64_t r, std::int64_t chi,
                               std::uint64_t seed);

std::size_t component_count(const ChainCurve& curve, std::int64_t r, std::int64_t chi,
                            const Polarization& w);

const char* to_string(Rationality v);

}  // namespace chainmod
