#include "chainmod/euler.hpp"

#include "chainmod/checked.hpp"
#include "chainmod/errors.hpp"

namespace chainmod {

using checked::add;
using checked::mul;
using checked::sub;

std::int64_t arithmetic_genus(const ChainCurve& curve) { return checked::sum(curve.genera()); }

std::int64_t chi_total(std::span<const std::int64_t> chi_vec, std::int64_t r) {
  if (chi_vec.empty()) throw InvalidInput("empty Euler vector");
  if (r < 0) throw InvalidInput("rank must be non-negative");
  auto nodes = static_cast<std::int64_t>(chi_vec.size()) - 1;
  return sub(checked::sum(chi_vec), mul(r, nodes));
}

std::int64_t chi_from_degree(std::int64_t d, std::int64_t r, std::int64_t g) {
  return add(d, mul(r, sub(1, g)));
}

std::int64_t degree_from_chi(std::int64_t chi, std::int64_t r, std::int64_t g) {
  return add(chi, mul(r, sub(g, 1)));
}

Rat slope_w(std::int64_t chi, std::span<const std::int64_t> multirank, const Polarization& w) {
  if (multirank.size() != w.size()) {
    throw InvalidInput("multirank and polarization lengths differ");
  }
  Rat weighted_rank;
  for (std::size_t j = 0; j < multirank.size(); ++j) {
    if (multirank[j] < 0) throw ValidationError(j + 1, "negative rank");
    weighted_rank += w[j] * Rat(multirank[j]);
  }
  if (weighted_rank.sign() == 0) throw InvalidInput("slope undefined: all ranks are zero");
  return Rat(chi) / weighted_rank;
}

Rat mu_k(std::int64_t deg, std::int64_t rank, std::int64_t k) {
  if (rank < 1) throw InvalidInput("mu_k needs rank >= 1");
  return Rat(Integer(static_cast<long>(add(deg, k))), Integer(static_cast<long>(rank)));
}

std::int64_t twist_chi(std::int64_t chi, std::span<const std::int64_t> multirank,
                       const LineBundleData& line) {
  if (multirank.size() != line.degrees.size()) {
    throw InvalidInput("multirank and line-bundle degree lengths differ");
  }
  std::int64_t out = chi;
  for (std::size_t i = 0; i < multirank.size(); ++i) {
    out = add(out, mul(multirank[i], line.degrees[i]));
  }
  return out;
}

std::vector<std::int64_t> twist_euler_vector(std::span<const std::int64_t> chi_vec,
                                             std::span<const std::int64_t> multirank,
                                             const LineBundleData& line) {
  if (chi_vec.size() != multirank.size() || multirank.size() != line.degrees.size()) {
    throw InvalidInput("Euler vector, multirank and line-bundle degrees must have equal length");
  }
  std::vector<std::int64_t> out(chi_vec.size());
  for (std::size_t i = 0; i < chi_vec.size(); ++i) {
    out[i] = add(chi_vec[i], mul(multirank[i], line.degrees[i]));
  }
  return out;
}

std::int64_t smooth_component_dimension(std::int64_t g, std::int64_t r) {
  if (r < 1) throw InvalidInput("dimension formula needs r >= 1");
  return add(mul(mul(r, r), sub(g, 1)), 1);
}

std::int64_t moduli_dimension(const ChainCurve& curve, std::int64_t r) {
  if (r < 1) throw InvalidInput("dimension formula needs r >= 1");
  return add(mul(mul(r, r), sub(arithmetic_genus(curve), 1)), 1);
}

}  // namespace chainmod
