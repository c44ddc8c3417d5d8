#include "chainmod/gluing.hpp"

#include <utility>

#include "chainmod/errors.hpp"
#include "chainmod/euler.hpp"
#include "chainmod/random.hpp"

namespace chainmod {

std::int64_t rank(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).den().get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      Integer factor;
      mpz_divexact(factor.get_mpz_t(), scale.get_mpz_t(), m(i, j).den().get_mpz_t());
      a[i][j] = m(i, j).num() * factor;
    }
  }

  Integer previous_pivot = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    // Smallest nonzero pivot in the column keeps intermediate entries short.
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      if (pivot == rows || mpz_cmpabs(a[i][col].get_mpz_t(), a[pivot][col].get_mpz_t()) < 0) pivot = i;
    }
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
      }
      a[i][col] = 0;
    }
    previous_pivot = a[r][col];
    ++r;
  }
  return static_cast<std::int64_t>(r);
}

void validate(const GluingDatum& g) {
  if (g.r < 1) throw InvalidInput("gluing datum needs r >= 1");
  const auto r = static_cast<std::size_t>(g.r);
  for (std::size_t i = 0; i < g.matrices.size(); ++i) {
    if (g.matrices[i].rows() != r || g.matrices[i].cols() != r) {
      throw ValidationError(i + 1, "sigma_" + std::to_string(i + 1) + " is not " +
                                       std::to_string(r) + " x " + std::to_string(r));
    }
  }
}

NumericalSheaf to_numerical_sheaf(const GluingDatum& g, std::span<const std::int64_t> chi_vec) {
  validate(g);
  if (chi_vec.size() != g.n()) {
    throw InvalidInput("Euler vector has length " + std::to_string(chi_vec.size()) +
                       ", gluing datum has " + std::to_string(g.n()) + " components");
  }
  std::vector<std::int64_t> ks;
  ks.reserve(g.matrices.size());
  for (const auto& sigma : g.matrices) ks.push_back(rank(sigma));
  return make_numerical_sheaf(std::vector<std::int64_t>(g.n(), g.r),
                              std::vector<std::int64_t>(chi_vec.begin(), chi_vec.end()),
                              std::move(ks));
}

std::int64_t diagonal_dimension(const GluingDatum& g) {
  validate(g);
  std::int64_t total = 0;
  for (const auto& sigma : g.matrices) total += rank(sigma);
  return total;
}

namespace {

RatMatrix random_unimodular(std::size_t n, Rng& rng) {
  RatMatrix u = RatMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng.coin()) u(0, 0) = Rat(-1);
    return u;
  }
  const std::size_t steps = 3 * n;
  for (std::size_t s = 0; s < steps; ++s) {
    auto src = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto dst = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
    if (dst >= src) ++dst;
    const Rat c(rng.uniform(-2, 2));
    for (std::size_t j = 0; j < n; ++j) u(dst, j) += c * u(src, j);
    if (rng.uniform(0, 3) == 0) {
      for (std::size_t j = 0; j < n; ++j) std::swap(u(src, j), u(dst, j));
    }
  }
  return u;
}

}  // namespace

RatMatrix sample_of_rank(std::int64_t r, std::int64_t k, std::uint64_t seed) {
  if (r < 1) throw InvalidInput("sample_of_rank needs r >= 1");
  if (k < 0 || k > r) throw InvalidInput("rank k must lie in [0, r]");
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(r);
  RatMatrix d(n, n);
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    std::int64_t v = 0;
    while (v == 0) v = rng.uniform(-4, 4);
    d(i, i) = Rat(v);
  }
  return random_unimodular(n, rng) * d * random_unimodular(n, rng);
}

}  // namespace chainmod
