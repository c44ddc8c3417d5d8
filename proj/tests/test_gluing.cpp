#include <doctest.h>

#include "chainmod/errors.hpp"
#include "chainmod/euler.hpp"
#include "chainmod/gluing.hpp"
#include "chainmod/oracles.hpp"
#include "generators.hpp"

using namespace chainmod;

namespace {

using V = std::vector<std::int64_t>;

RatMatrix ints(std::size_t rows, std::size_t cols, std::initializer_list<long> xs) {
  std::vector<Rat> e;
  for (auto x : xs) e.emplace_back(static_cast<std::int64_t>(x));
  return RatMatrix(rows, cols, e);
}

}  // namespace

TEST_SUITE("gluing") {

TEST_CASE("rank examples") {
  CHECK(rank(RatMatrix::identity(4)) == 4);
  CHECK(rank(ints(2, 2, {1, 0, 0, 0})) == 1);
  CHECK(rank(RatMatrix(3, 3)) == 0);
  CHECK(rank(RatMatrix(0, 0)) == 0);
  // Rows 3 and 4 are combinations of rows 1 and 2.
  CHECK(rank(ints(4, 4, {1, 2, 3, 4, 0, 1, -1, 2, 2, 5, 5, 10, -1, 0, -5, 0})) == 2);
  RatMatrix q(2, 2, {rat_make(1, 2), rat_make(1, 3), rat_make(3, 4), rat_make(1, 2)});
  CHECK(rank(q) == 1);
  CHECK(rank(ints(2, 3, {1, 2, 3, 2, 4, 7})) == 2);
}

TEST_CASE("gluing datum validation") {
  GluingDatum ok{2, {RatMatrix::identity(2)}};
  CHECK_NOTHROW(validate(ok));
  CHECK(ok.n() == 2);
  CHECK_THROWS_AS(validate(GluingDatum{0, {}}), InvalidInput);
  CHECK_THROWS_AS(validate(GluingDatum{2, {RatMatrix::identity(3)}}), InvalidInput);
}

TEST_CASE("numerical sheaf of a gluing datum") {
  GluingDatum invertible{2, {RatMatrix::identity(2), ints(2, 2, {0, 1, 1, 0})}};
  auto vb = to_numerical_sheaf(invertible, V{1, 2, 3});
  CHECK(is_vector_bundle(vb));
  CHECK(diagonal_dimension(invertible) == 4);

  GluingDatum zero{3, {RatMatrix(3, 3)}};
  auto z = to_numerical_sheaf(zero, V{0, 0});
  CHECK(z.sigma_ranks == V{0});
  CHECK(stalk_structure(z, 1) == StalkStructure{0, 3, 3});
  CHECK(diagonal_dimension(zero) == 0);

  GluingDatum half{2, {ints(2, 2, {1, 0, 0, 0})}};
  auto h = to_numerical_sheaf(half, V{-1, -3});
  CHECK(h.sigma_ranks == V{1});
  CHECK(h.multirank == V{2, 2});
  CHECK(chi_total(h.euler, 2) == -6);

  GluingDatum mixed{2, {ints(2, 2, {1, 1, 1, 1}), RatMatrix::identity(2)}};
  CHECK(diagonal_dimension(mixed) == 3);
  CHECK_THROWS_AS(to_numerical_sheaf(half, V{1, 2, 3}), InvalidInput);
}

TEST_CASE("sampled matrices have the requested rank") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    CHECK(rank(sample_of_rank(2, 2, s)) == 2);
    CHECK(sample_of_rank(3, 0, s) == RatMatrix(3, 3));
    CHECK(rank(sample_of_rank(3, 1, s)) == 1);
    CHECK(oracle::minor_rank(sample_of_rank(4, 2, s)) == 2);
  }
  CHECK(sample_of_rank(4, 3, 9) == sample_of_rank(4, 3, 9));
  CHECK_THROWS_AS(sample_of_rank(2, 3, 0), InvalidInput);
  CHECK_THROWS_AS(sample_of_rank(2, -1, 0), InvalidInput);
}

TEST_CASE("rank agrees with the largest nonzero minor") {
  Rng rng(101);
  for (int iter = 0; iter < 800; ++iter) {
    auto m = gen::random_matrix(rng);
    REQUIRE(rank(m) == oracle::minor_rank(m));
  }
}

TEST_CASE("rank is invariant under scaling and unimodular changes of basis") {
  Rng rng(102);
  for (int iter = 0; iter < 300; ++iter) {
    auto m = gen::random_matrix(rng);
    const auto base = rank(m);
    Rat c = rat_make(rng.uniform(1, 9) * (rng.coin() ? 1 : -1), rng.uniform(1, 9));
    REQUIRE(rank(c * m) == base);
    auto u = gen::random_unimodular(rng, m.rows());
    auto v = gen::random_unimodular(rng, m.cols());
    REQUIRE(rank(u * m * v) == base);
    auto other = gen::random_matrix(rng);
    if (other.rows() == m.cols()) {
      REQUIRE(rank(m * other) <= std::min(base, rank(other)));
    }
  }
}

TEST_CASE("total Euler characteristic does not depend on the node maps") {
  Rng rng(103);
  for (int iter = 0; iter < 200; ++iter) {
    const auto r = rng.uniform(1, 4);
    const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
    V chi(n);
    for (auto& x : chi) x = rng.uniform(-20, 20);
    GluingDatum a{r, {}}, b{r, {}};
    for (std::size_t i = 0; i + 1 < n; ++i) {
      a.matrices.push_back(sample_of_rank(r, rng.uniform(0, r), rng.uniform(0, 1 << 30)));
      b.matrices.push_back(sample_of_rank(r, rng.uniform(0, r), rng.uniform(0, 1 << 30)));
    }
    auto sa = to_numerical_sheaf(a, chi);
    auto sb = to_numerical_sheaf(b, chi);
    REQUIRE(chi_total(sa.euler, r) == chi_total(sb.euler, r));
  }
}

}  // TEST_SUITE
