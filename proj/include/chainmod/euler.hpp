#pragma once

// Closed-form formulas: Euler characteristics, slopes, dimensions.

#include <cstdint>
#include <span>
#include <vector>

#include "chainmod/curve.hpp"
#include "chainmod/rational.hpp"

namespace chainmod {

/// p_a(C) = g_1 + ... + g_n.
std::int64_t arithmetic_genus(const ChainCurve& curve);

/// χ(E) = Σ χ_j − r(n − 1) for a uniform-rank sheaf.
std::int64_t chi_total(std::span<const std::int64_t> chi_vec, std::int64_t r);

/// χ = d + r(1 − g).
std::int64_t chi_from_degree(std::int64_t d, std::int64_t r, std::int64_t g);
/// d = χ + r(g − 1).
std::int64_t degree_from_chi(std::int64_t chi, std::int64_t r, std::int64_t g);

/// μ_w = χ / Σ w_j r_j. Throws InvalidInput if the denominator vanishes or
/// the lengths disagree.
Rat slope_w(std::int64_t chi, std::span<const std::int64_t> multirank, const Polarization& w);

/// μ_k(G) = (deg G + k) / rk G for a bundle on a smooth curve; rank >= 1.
Rat mu_k(std::int64_t deg, std::int64_t rank, std::int64_t k);

/// χ(E ⊗ L) = χ(E) + Σ r_i deg L_i.
std::int64_t twist_chi(std::int64_t chi, std::span<const std::int64_t> multirank,
                       const LineBundleData& line);

/// Componentwise χ(E_i ⊗ L_i) = χ_i + r_i deg L_i.
std::vector<std::int64_t> twist_euler_vector(std::span<const std::int64_t> chi_vec,
                                             std::span<const std::int64_t> multirank,
                                             const LineBundleData& line);

/// dim 𝒰_C(r, d) = r²(g − 1) + 1 on a smooth curve of genus g.
std::int64_t smooth_component_dimension(std::int64_t g, std::int64_t r);

/// Dimension of a component of the moduli space on the chain: the base
/// Π 𝒰_{C_i}(r, d_i) plus (r² − 1) per node, which equals r²(Σ g_i − 1) + 1.
std::int64_t moduli_dimension(const ChainCurve& curve, std::int64_t r);

}  // namespace chainmod
