#pragma once

// Exact rationals over GMP integers, and open/closed rational intervals.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace chainmod {

using Integer = mpz_class;

/// Converts to int64, throwing InvalidInput if the value does not fit.
std::int64_t to_int64(const Integer& z);

/// Rational number kept in canonical form: den > 0 and gcd(|num|, den) = 1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(std::int64_t value) : num_(static_cast<long>(value)), den_(1) {}  // NOLINT: implicit on purpose
  Rat(const Integer& value) : num_(value), den_(1) {}                  // NOLINT
  /// Throws InvalidInput when `den` is zero.
  Rat(Integer num, Integer den);

  /// Accepts "p/q" or "p"; either part may carry a sign.
  static Rat parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }
  Integer floor() const;
  Integer ceil() const;
  Rat abs() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  /// Throws InvalidInput on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  void canonicalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& q);

/// rat_make: canonical num/den. Throws InvalidInput on a zero denominator.
inline Rat rat_make(std::int64_t num, std::int64_t den) {
  return Rat(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// {x : lo < x < hi}; empty iff lo >= hi.
struct OpenInterval {
  Rat lo;
  Rat hi;

  bool empty() const { return lo >= hi; }
  bool contains(const Rat& x) const { return lo < x && x < hi; }
  Rat width() const { return hi - lo; }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// {x : lo <= x <= hi}; empty iff lo > hi.
struct ClosedInterval {
  Rat lo;
  Rat hi;

  bool empty() const { return lo > hi; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

OpenInterval interval_intersect(const OpenInterval& a, const OpenInterval& b);

/// The rational of least denominator strictly inside `iv`; among equal
/// denominators the one of least |numerator|. Throws Infeasible if empty.
Rat pick_in_open(const OpenInterval& iv);

/// Number of integers z with lo < z < hi.
Integer count_integers_in(const OpenInterval& iv);

/// The integers z with lo < z < hi in increasing order. Throws InvalidInput
/// if there are more than `limit` of them or they do not fit in int64.
std::vector<std::int64_t> list_integers_in(const OpenInterval& iv,
                                           std::size_t limit = 10'000'000);

}  // namespace chainmod

template <>
struct std::hash<chainmod::Rat> {
  std::size_t operator()(const chainmod::Rat& q) const noexcept;
};
