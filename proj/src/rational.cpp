#include "chainmod/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

#include "chainmod/errors.hpp"

namespace chainmod {

std::int64_t to_int64(const Integer& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) {
    throw InvalidInput("integer " + z.get_str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(z.get_si());
}

Rat::Rat(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InvalidInput("zero denominator");
  canonicalize();
}

void Rat::canonicalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InvalidInput("malformed rational '" + std::string(whole) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(s, text));
  return Rat(parse_integer(trim(s.substr(0, slash)), text),
             parse_integer(trim(s.substr(slash + 1)), text));
}

Integer Rat::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

Integer Rat::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rat::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rat Rat::operator-() const {
  Rat out = *this;
  out.num_ = -out.num_;
  return out;
}

Rat& Rat::operator+=(const Rat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw InvalidInput("division by zero");
  Integer n = num_ * o.den_;
  Integer d = den_ * o.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  int c = (a.den_ == b.den_) ? cmp(a.num_, b.num_)
                             : cmp(Integer(a.num_ * b.den_), Integer(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.str(); }

OpenInterval interval_intersect(const OpenInterval& a, const OpenInterval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

namespace {

// Simplest rational in (lo, hi) for 0 <= lo < hi, by continued-fraction
// descent of the Stern-Brocot tree. The simplest rational of a positive
// interval has simultaneously the least numerator and least denominator.
Rat simplest_nonnegative(Rat lo, Rat hi) {
  // Each level writes x = k + 1/y; unwinding composes these Möbius maps
  // into an accumulated (a*y + b)/(c*y + d).
  Integer a = 1, b = 0, c = 0, d = 1;
  while (true) {
    Integer k = lo.floor();
    Rat next = Rat(k + 1);
    if (next < hi) {
      // y = k + 1 closes the recursion.
      Integer p = a * (k + 1) + b;
      Integer q = c * (k + 1) + d;
      return Rat(p, q);
    }
    // lo, hi lie in [k, k+1]; x = k + 1/y with y in (1/(hi-k), 1/(lo-k)).
    Rat kr(k);
    // x = k + 1/y  =>  (a*x + b)/(c*x + d) = ((a*k + b)*y + a)/((c*k + d)*y + c)
    Integer na = a * k + b, nc = c * k + d;
    b = a;
    d = c;
    a = na;
    c = nc;
    Rat new_lo = Rat(1) / (hi - kr);
    if (lo == kr) {
      // Upper end is +infinity: the smallest integer above new_lo.
      Integer y = new_lo.floor() + 1;
      return Rat(Integer(a * y + b), Integer(c * y + d));
    }
    Rat new_hi = Rat(1) / (lo - kr);
    lo = std::move(new_lo);
    hi = std::move(new_hi);
  }
}

}  // namespace

Rat pick_in_open(const OpenInterval& iv) {
  if (iv.empty()) {
    throw Infeasible("empty open interval (" + iv.lo.str() + ", " + iv.hi.str() + ")");
  }
  if (iv.lo.sign() < 0 && iv.hi.sign() > 0) return Rat(0);
  if (iv.lo.sign() >= 0) return simplest_nonnegative(iv.lo, iv.hi);
  return -simplest_nonnegative(-iv.hi, -iv.lo);
}

Integer count_integers_in(const OpenInterval& iv) {
  Integer first = iv.lo.floor() + 1;
  Integer last = iv.hi.ceil() - 1;
  if (last < first) return 0;
  return last - first + 1;
}

std::vector<std::int64_t> list_integers_in(const OpenInterval& iv, std::size_t limit) {
  Integer count = count_integers_in(iv);
  if (count > Integer(static_cast<unsigned long>(limit))) {
    throw InvalidInput("interval contains " + count.get_str() + " integers; refusing to list");
  }
  std::vector<std::int64_t> out;
  if (count == 0) return out;
  std::int64_t first = to_int64(Integer(iv.lo.floor() + 1));
  std::int64_t last = to_int64(Integer(iv.hi.ceil() - 1));
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (std::int64_t z = first; z <= last; ++z) out.push_back(z);
  return out;
}

}  // namespace chainmod

std::size_t std::hash<chainmod::Rat>::operator()(const chainmod::Rat& q) const noexcept {
  auto limbs = [](const mpz_class& z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
    std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))) +
           0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  };
  return limbs(q.num()) * 31 + limbs(q.den());
}
