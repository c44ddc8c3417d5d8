#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "chainmod/errors.hpp"
#include "chainmod/random.hpp"
#include "chainmod/rational.hpp"

using namespace chainmod;
namespace mp = boost::multiprecision;

namespace {

// Second arithmetic path: boost's cpp_rational shares no code with GMP.
mp::cpp_rational to_boost(const Rat& q) {
  return mp::cpp_rational(mp::cpp_int(q.num().get_str()), mp::cpp_int(q.den().get_str()));
}

bool same(const Rat& q, const mp::cpp_rational& b) {
  return q.num().get_str() == mp::numerator(b).str() && q.den().get_str() == mp::denominator(b).str();
}

Rat random_rat(Rng& rng, std::int64_t bound) {
  const auto num = rng.uniform(-bound, bound);
  const auto den = rng.uniform(1, bound);
  return rat_make(num, den);
}

}  // namespace

TEST_SUITE("rational") {

TEST_CASE("rat_make reduces and normalizes sign") {
  CHECK(rat_make(2, 4) == rat_make(1, 2));
  CHECK(rat_make(2, 4).str() == "1/2");
  CHECK(rat_make(-3, -6).str() == "1/2");
  auto zero = rat_make(0, 7);
  CHECK(zero.num() == 0);
  CHECK(zero.den() == 1);
  CHECK(zero.str() == "0");
  CHECK(rat_make(3, -9).str() == "-1/3");
  CHECK_THROWS_AS(rat_make(1, 0), InvalidInput);
}

TEST_CASE("parse and print") {
  CHECK(Rat::parse("-4/6").str() == "-2/3");
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat::parse(" 3/-4 ").str() == "-3/4");
  CHECK(Rat::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
  CHECK_THROWS_AS(Rat::parse(""), InvalidInput);
  CHECK_THROWS_AS(Rat::parse("1/0"), InvalidInput);
  CHECK_THROWS_AS(Rat::parse("1.5"), InvalidInput);
  CHECK_THROWS_AS(Rat::parse("abc"), InvalidInput);
}

TEST_CASE("floor, ceil, division by zero") {
  CHECK(rat_make(-12, 5).floor() == -3);
  CHECK(rat_make(-12, 5).ceil() == -2);
  CHECK(Rat(4).floor() == 4);
  CHECK(Rat(4).ceil() == 4);
  CHECK_THROWS_AS(Rat(1) / Rat(0), InvalidInput);
}

TEST_CASE("interval_intersect") {
  OpenInterval unit{Rat(0), Rat(1)};
  auto a = interval_intersect(unit, {rat_make(1, 2), Rat(2)});
  CHECK(a == OpenInterval{rat_make(1, 2), Rat(1)});
  auto b = interval_intersect(unit, {Rat(1), Rat(2)});
  CHECK(b.empty());
  CHECK(b.lo == Rat(1));
  CHECK(b.hi == Rat(1));
  CHECK(interval_intersect({rat_make(1, 6), rat_make(1, 2)}, unit) ==
        OpenInterval{rat_make(1, 6), rat_make(1, 2)});
}

TEST_CASE("pick_in_open examples") {
  CHECK(pick_in_open({rat_make(1, 6), rat_make(1, 2)}) == rat_make(1, 3));
  CHECK(pick_in_open({Rat(0), Rat(1)}) == rat_make(1, 2));
  CHECK(pick_in_open({Rat(2), Rat(3)}) == rat_make(5, 2));
  CHECK(pick_in_open({rat_make(4, 7), rat_make(6, 7)}) == rat_make(2, 3));
  CHECK(pick_in_open({Rat(-3), Rat(-2)}) == rat_make(-5, 2));
  CHECK(pick_in_open({rat_make(-1, 2), rat_make(1, 3)}) == Rat(0));
  CHECK(pick_in_open({rat_make(-7, 3), Rat(5)}) == Rat(0));
  CHECK_THROWS_AS(pick_in_open({Rat(1), Rat(1)}), Infeasible);
  CHECK_THROWS_AS(pick_in_open({Rat(2), Rat(1)}), Infeasible);
}

TEST_CASE("integers in open intervals") {
  OpenInterval a{rat_make(-12, 5), rat_make(-2, 5)};
  CHECK(list_integers_in(a) == std::vector<std::int64_t>{-2, -1});
  CHECK(count_integers_in(a) == 2);
  CHECK(list_integers_in({Rat(-2), Rat(0)}) == std::vector<std::int64_t>{-1});
  CHECK(list_integers_in({Rat(0), Rat(0)}).empty());
  CHECK(count_integers_in({Rat(5), Rat(1)}) == 0);
  CHECK_THROWS_AS(list_integers_in({Rat(0), Rat(100)}, 10), InvalidInput);
}

TEST_CASE("field laws against an independent big-rational path") {
  Rng rng(20240601);
  const std::int64_t bound = std::int64_t{1} << 62;
  for (int iter = 0; iter < 3000; ++iter) {
    auto a = random_rat(rng, bound);
    auto b = random_rat(rng, bound);
    auto c = random_rat(rng, bound);
    auto ba = to_boost(a), bb = to_boost(b), bc = to_boost(c);
    REQUIRE(same(a + b, ba + bb));
    REQUIRE(same(a - b, ba - bb));
    REQUIRE(same(a * b, ba * bb));
    if (b.sign() != 0) REQUIRE(same(a / b, ba / bb));
    REQUIRE(same(a * (b + c), ba * (bb + bc)));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a < b) == (ba < bb));
    REQUIRE((a == b) == (ba == bb));
    auto s = a * b + c;
    REQUIRE(gcd(s.num(), s.den()) == 1);
    REQUIRE(s.den() > 0);
    REQUIRE(Rat::parse(s.str()) == s);
  }
}

TEST_CASE("equal values hash equally") {
  std::hash<Rat> h;
  CHECK(h(rat_make(2, 4)) == h(rat_make(-1, -2)));
  CHECK(h(Rat(0)) == h(rat_make(0, 5)));
}

TEST_CASE("pick_in_open has least denominator, then least magnitude") {
  Rng rng(77);
  for (int iter = 0; iter < 2000; ++iter) {
    auto x = rat_make(rng.uniform(-5000, 5000), rng.uniform(1, 1000));
    auto y = rat_make(rng.uniform(-5000, 5000), rng.uniform(1, 1000));
    if (x == y) continue;
    OpenInterval iv{std::min(x, y), std::max(x, y)};
    auto p = pick_in_open(iv);
    REQUIRE(iv.contains(p));
    // For every smaller denominator d, the least numerator n with n/d > lo
    // must already be >= hi.
    for (long d = 1; mpz_class(d) < p.den(); ++d) {
      Rat first = Rat((iv.lo * Rat(Integer(d))).floor() + 1) / Rat(Integer(d));
      REQUIRE_FALSE(iv.contains(first));
    }
    // Same denominator: the numerators inside form a run, so the neighbour
    // one step toward zero is the only candidate with smaller magnitude.
    if (p.sign() != 0) {
      REQUIRE_FALSE(iv.contains(Rat(Integer(p.num() - p.sign()), p.den())));
    }
  }
}

TEST_CASE("count_integers_in agrees with a naive scan") {
  Rng rng(5);
  for (int iter = 0; iter < 500; ++iter) {
    auto lo = rat_make(rng.uniform(-50000, 50000), rng.uniform(1, 7));
    auto hi = lo + rat_make(rng.uniform(0, 10000 * 7), 7);
    OpenInterval iv{lo, hi};
    std::int64_t naive = 0;
    std::vector<std::int64_t> seen;
    for (auto z = to_int64(lo.floor()) - 1; Rat(z) <= hi + Rat(1); ++z) {
      if (iv.contains(Rat(z))) {
        ++naive;
        seen.push_back(z);
      }
    }
    REQUIRE(count_integers_in(iv) == naive);
    REQUIRE(list_integers_in(iv) == seen);
  }
}

}  // TEST_SUITE
