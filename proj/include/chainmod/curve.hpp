#pragma once

// Combinatorial data of a chain-like curve C_1 - C_2 - ... - C_n and the
// numerical shadow of sheaves on it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainmod/rational.hpp"

namespace chainmod {

/// n smooth components of genus g_i; node i joins C_i and C_{i+1}.
class ChainCurve {
 public:
  /// Throws InvalidInput if `genera` is empty or has a negative entry.
  explicit ChainCurve(std::vector<std::int64_t> genera);

  const std::vector<std::int64_t>& genera() const noexcept { return genera_; }
  std::size_t n() const noexcept { return genera_.size(); }
  std::size_t node_count() const noexcept { return genera_.size() - 1; }
  std::int64_t genus(std::size_t i) const { return genera_.at(i - 1); }  // 1-based

  bool all_genus_at_least(std::int64_t bound) const;

  /// One message per component whose genus is below `bound`, tagged with
  /// the result that needs the bound. Empty when every g_i >= bound.
  std::vector<std::string> genus_warnings(std::int64_t bound, const std::string& needed_by) const;

 private:
  std::vector<std::int64_t> genera_;
};

/// Rational weights with 0 < w_i < 1 and sum 1. Only constructible through
/// validate_polarization.
class Polarization {
 public:
  const std::vector<Rat>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  const Rat& operator[](std::size_t i) const { return weights_[i]; }  // 0-based
  /// w_1 + ... + w_j (1-based j; j = 0 gives 0).
  Rat partial_sum(std::size_t j) const;

  friend bool operator==(const Polarization&, const Polarization&) = default;

 private:
  friend Polarization validate_polarization(std::vector<Rat> weights);
  explicit Polarization(std::vector<Rat> w) : weights_(std::move(w)) {}
  std::vector<Rat> weights_;
};

/// Rejects with a ValidationError naming the first bad index (1-based;
/// index 0 means the sum). For n = 1 the single admissible vector is (1).
Polarization validate_polarization(std::vector<Rat> weights);

/// Multirank, Euler vector and (optionally) the ranks k_i of the node maps.
struct NumericalSheaf {
  std::vector<std::int64_t> multirank;
  std::vector<std::int64_t> euler;
  std::optional<std::vector<std::int64_t>> sigma_ranks;

  std::size_t n() const { return multirank.size(); }
  bool is_uniform_rank() const;
  /// The common rank; throws InvalidInput for non-uniform multirank.
  std::int64_t uniform_rank() const;
};

/// Requires 0 <= k_i <= min(r_i, r_{i+1}) with every r_i >= 0; lengths must match.
NumericalSheaf make_numerical_sheaf(std::vector<std::int64_t> multirank,
                                    std::vector<std::int64_t> euler,
                                    std::optional<std::vector<std::int64_t>> sigma_ranks);

struct LineBundleData {
  std::vector<std::int64_t> degrees;
};

/// Stalk at node p_i: O_p^{k} + O_q^{r-k} + O_q'^{r-k}.
struct StalkStructure {
  std::int64_t free_rank;
  std::int64_t left_torsion;
  std::int64_t right_torsion;
  friend bool operator==(const StalkStructure&, const StalkStructure&) = default;
};

/// `node` is 1-based. Requires sigma ranks and uniform rank.
StalkStructure stalk_structure(const NumericalSheaf& sheaf, std::size_t node);

/// True iff every k_i equals the rank (vacuously true with no nodes).
bool is_vector_bundle(const NumericalSheaf& sheaf);

}  // namespace chainmod
