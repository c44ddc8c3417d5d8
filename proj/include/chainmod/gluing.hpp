#pragma once

// Fibre-level linear algebra of the node maps σ_i : E_{i,q_i} → E_{i+1,q_i'}.

#include <cstdint>
#include <span>
#include <vector>

#include "chainmod/curve.hpp"
#include "chainmod/matrix.hpp"

namespace chainmod {

/// Exact rank by fraction-free (Bareiss) elimination. Each row is first
/// scaled by the lcm of its denominators, so elimination runs on integers.
std::int64_t rank(const RatMatrix& m);

/// The node maps of one gluing datum; n − 1 square matrices of size r.
struct GluingDatum {
  std::int64_t r = 0;
  std::vector<RatMatrix> matrices;

  std::size_t n() const { return matrices.size() + 1; }
};

/// Throws InvalidInput unless every matrix is r × r and r >= 1.
void validate(const GluingDatum& g);

/// Multirank (r, ..., r) with k_i = rank σ_i; the Euler vector is `chi_vec`.
NumericalSheaf to_numerical_sheaf(const GluingDatum& g, std::span<const std::int64_t> chi_vec);

/// Σ rank σ_i, the dimension of the diagonal Δ = ⊕ Δ_i.
std::int64_t diagonal_dimension(const GluingDatum& g);

/// Deterministic r × r integer matrix of exact rank k: U · D · V with U, V
/// random unimodular and D diagonal with k nonzero entries.
RatMatrix sample_of_rank(std::int64_t r, std::int64_t k, std::uint64_t seed);

}  // namespace chainmod
