#include <doctest.h>

#include "chainmod/errors.hpp"
#include "chainmod/gluing.hpp"
#include "chainmod/oracles.hpp"
#include "chainmod/polarization_solver.hpp"
#include "chainmod/random.hpp"

using namespace chainmod;
using V = std::vector<std::int64_t>;

TEST_SUITE("oracles") {

TEST_CASE("implication sweep on two components") {
  oracle::SweepBounds b;
  b.n = 2;
  b.r = 2;
  b.chi_min = -10;
  b.chi_max = 10;
  b.w_den = 6;
  auto rep = oracle::sweep_implication(b);
  CHECK(rep.tuples == 21u * 21u * 3u * 5u);
  CHECK(rep.passed());
  CHECK(rep.hypothesis_true > 0);
  // With two components both systems say the same thing.
  CHECK(rep.non_equivalence_count == 0);
}

TEST_CASE("implication sweep on three components finds a witness") {
  oracle::SweepBounds b;
  b.n = 3;
  b.r = 2;
  b.chi_min = -6;
  b.chi_max = 6;
  auto rep = oracle::sweep_implication(b);
  CHECK(rep.passed());
  CHECK(rep.non_equivalence_count > 0);
  REQUIRE_FALSE(rep.non_equivalence_witnesses.empty());
  CHECK(rep.non_equivalence_witnesses.size() <= b.max_witnesses);
  const auto& t = rep.non_equivalence_witnesses.front();
  V numerators;
  for (std::size_t j = 0; j + 1 < t.weights.size(); ++j) {
    Rat s;
    for (std::size_t i = 0; i <= j; ++i) s += t.weights[i];
    numerators.push_back(to_int64((s * Rat(b.w_den)).num()));
  }
  auto eval = oracle::evaluate_implication_tuple(b.r, t.chi_vec, t.k_vec, numerators, b.w_den);
  CHECK(eval.bounds_hold);
  CHECK_FALSE(eval.hypothesis_holds);
}

TEST_CASE("empty sweep passes vacuously") {
  oracle::SweepBounds b;
  auto rep = oracle::sweep_implication(b);
  CHECK(rep.tuples == 0);
  CHECK(rep.passed());
}

TEST_CASE("literal subset check") {
  CHECK(oracle::subset_bruteforce(2, V{3, 3, 3}));
  CHECK_FALSE(oracle::subset_bruteforce(2, V{6, -1, 4}));
  CHECK(oracle::subset_bruteforce(2, V{5, 1}));
  CHECK_THROWS_AS(oracle::subset_bruteforce(2, V(21, 5)), InvalidInput);
}

TEST_CASE("subset reduction agrees with the literal check") {
  Rng rng(401);
  for (int iter = 0; iter < 3000; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 12));
    const auto r = rng.uniform(0, 5);
    V chi(n);
    for (auto& x : chi) x = rng.uniform(-3, 12);
    REQUIRE(subset_condition(r, chi) == oracle::subset_bruteforce(r, chi));
  }
}

TEST_CASE("minor rank") {
  CHECK(oracle::minor_rank(RatMatrix::identity(3)) == 3);
  CHECK(oracle::minor_rank(RatMatrix(2, 2)) == 0);
  CHECK(oracle::minor_rank(sample_of_rank(4, 2, 17)) == 2);
  CHECK(oracle::minor_rank(RatMatrix(2, 5)) == 0);
  CHECK_THROWS_AS(oracle::minor_rank(RatMatrix(7, 2)), InvalidInput);
}

TEST_CASE("component vectors by partial sums") {
  auto w = validate_polarization({rat_make(2, 5), rat_make(3, 5)});
  auto got = oracle::component_euler_vectors(2, 2, -6, w);
  CHECK(got == std::vector<V>{{-2, -2}, {-1, -3}});
  CHECK(oracle::component_euler_vectors(1, 2, 9, validate_polarization({Rat(1)})) == std::vector<V>{{9}});
}

}  // TEST_SUITE
