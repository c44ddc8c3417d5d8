#include "chainmod/curve.hpp"

#include <algorithm>

#include "chainmod/errors.hpp"

namespace chainmod {

ChainCurve::ChainCurve(std::vector<std::int64_t> genera) : genera_(std::move(genera)) {
  if (genera_.empty()) throw InvalidInput("a chain-like curve needs at least one component");
  for (std::size_t i = 0; i < genera_.size(); ++i) {
    if (genera_[i] < 0) {
      throw ValidationError(i + 1, "genus g_" + std::to_string(i + 1) + " is negative");
    }
  }
}

bool ChainCurve::all_genus_at_least(std::int64_t bound) const {
  return std::all_of(genera_.begin(), genera_.end(), [&](auto g) { return g >= bound; });
}

std::vector<std::string> ChainCurve::genus_warnings(std::int64_t bound,
                                                    const std::string& needed_by) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < genera_.size(); ++i) {
    if (genera_[i] < bound) {
      out.push_back("g_" + std::to_string(i + 1) + " = " + std::to_string(genera_[i]) + " < " +
                    std::to_string(bound) + " (" + needed_by + ")");
    }
  }
  return out;
}

Rat Polarization::partial_sum(std::size_t j) const {
  Rat s;
  for (std::size_t i = 0; i < j; ++i) s += weights_.at(i);
  return s;
}

Polarization validate_polarization(std::vector<Rat> weights) {
  if (weights.empty()) throw InvalidInput("polarization has no weights");
  if (weights.size() == 1) {
    if (weights[0] != Rat(1)) {
      throw ValidationError(1, "single-component polarization must be (1), got " + weights[0].str());
    }
    return Polarization(std::move(weights));
  }
  Rat sum;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto idx = std::to_string(i + 1);
    if (weights[i] <= Rat(0)) {
      throw ValidationError(i + 1, "w_" + idx + " = " + weights[i].str() + " is not > 0");
    }
    if (weights[i] >= Rat(1)) {
      throw ValidationError(i + 1, "w_" + idx + " = " + weights[i].str() + " is not < 1");
    }
    sum += weights[i];
  }
  if (sum != Rat(1)) throw ValidationError(0, "weights sum to " + sum.str() + ", not 1");
  return Polarization(std::move(weights));
}

bool NumericalSheaf::is_uniform_rank() const {
  return std::adjacent_find(multirank.begin(), multirank.end(), std::not_equal_to<>()) ==
         multirank.end();
}

std::int64_t NumericalSheaf::uniform_rank() const {
  if (multirank.empty()) throw InvalidInput("empty multirank");
  if (!is_uniform_rank()) throw InvalidInput("operation requires uniform multirank (r, ..., r)");
  return multirank.front();
}

NumericalSheaf make_numerical_sheaf(std::vector<std::int64_t> multirank,
                                    std::vector<std::int64_t> euler,
                                    std::optional<std::vector<std::int64_t>> sigma_ranks) {
  if (multirank.empty()) throw InvalidInput("empty multirank");
  if (euler.size() != multirank.size()) {
    throw InvalidInput("euler vector has length " + std::to_string(euler.size()) +
                       ", expected " + std::to_string(multirank.size()));
  }
  for (std::size_t i = 0; i < multirank.size(); ++i) {
    if (multirank[i] < 0) throw ValidationError(i + 1, "negative rank r_" + std::to_string(i + 1));
  }
  if (sigma_ranks) {
    if (sigma_ranks->size() + 1 != multirank.size()) {
      throw InvalidInput("sigma_ranks has length " + std::to_string(sigma_ranks->size()) +
                         ", expected " + std::to_string(multirank.size() - 1));
    }
    for (std::size_t i = 0; i < sigma_ranks->size(); ++i) {
      auto k = (*sigma_ranks)[i];
      if (k < 0 || k > std::min(multirank[i], multirank[i + 1])) {
        throw ValidationError(i + 1, "k_" + std::to_string(i + 1) + " = " + std::to_string(k) +
                                         " outside [0, min(r_i, r_{i+1})]");
      }
    }
  }
  return {std::move(multirank), std::move(euler), std::move(sigma_ranks)};
}

StalkStructure stalk_structure(const NumericalSheaf& sheaf, std::size_t node) {
  if (!sheaf.sigma_ranks) throw InvalidInput("stalk structure needs sigma_ranks");
  const auto r = sheaf.uniform_rank();
  if (node < 1 || node > sheaf.sigma_ranks->size()) {
    throw InvalidInput("node index " + std::to_string(node) + " out of range");
  }
  const auto k = (*sheaf.sigma_ranks)[node - 1];
  return {k, r - k, r - k};
}

bool is_vector_bundle(const NumericalSheaf& sheaf) {
  if (!sheaf.sigma_ranks) throw InvalidInput("vector-bundle test needs sigma_ranks");
  const auto r = sheaf.uniform_rank();
  return std::all_of(sheaf.sigma_ranks->begin(), sheaf.sigma_ranks->end(),
                     [&](auto k) { return k == r; });
}

}  // namespace chainmod
