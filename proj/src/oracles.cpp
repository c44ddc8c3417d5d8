#include "chainmod/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "chainmod/errors.hpp"

namespace chainmod::oracle {

ImplicationEval evaluate_implication_tuple(std::int64_t r, std::span<const std::int64_t> chi_vec,
                                           std::span<const std::int64_t> k_vec,
                                           std::span<const std::int64_t> numerators,
                                           std::int64_t den) {
  const std::size_t n = chi_vec.size();
  if (n < 1 || k_vec.size() + 1 != n || numerators.size() + 1 != n || den < 1) {
    throw InvalidInput("implication tuple has inconsistent lengths");
  }
  if (n == 1) return {true, true};
  std::int64_t chi = -r * static_cast<std::int64_t>(n - 1);
  for (auto c : chi_vec) chi += c;

  // Everything below is multiplied by den.
  auto scaled_weight_times_chi = [&](std::size_t i) {  // den * w_i * χ, 1-based i
    std::int64_t hi = i <= numerators.size() ? numerators[i - 1] : den;
    std::int64_t lo = i >= 2 ? numerators[i - 2] : 0;
    return (hi - lo) * chi;
  };

  bool hypothesis = true;
  for (std::size_t i = 1; i <= n; ++i) {
    std::int64_t extra = (i == n) ? r : (i == 1 ? k_vec[0] : k_vec[i - 1] + r);
    if (den * chi_vec[i - 1] > scaled_weight_times_chi(i) + den * extra) hypothesis = false;
  }

  bool bounds = true;
  for (std::size_t j = 1; j < n; ++j) {
    std::int64_t prefix = 0;
    for (std::size_t i = 1; i < j; ++i) prefix += chi_vec[i - 1];
    std::int64_t k_upto = 0;
    for (std::size_t i = 1; i <= j; ++i) k_upto += k_vec[i - 1];
    std::int64_t k_after = 0;
    for (std::size_t i = j + 1; i <= n - 1; ++i) k_after += k_vec[i - 1];
    const std::int64_t common =
        numerators[j - 1] * chi - den * prefix + den * r * static_cast<std::int64_t>(j - 1);
    const std::int64_t value = den * chi_vec[j - 1];
    if (value < common - den * k_after || value > common + den * k_upto) bounds = false;
  }
  return {hypothesis, bounds};
}

namespace {

// Odometer over a box of integer vectors; returns false after the last one.
bool advance(std::vector<std::int64_t>& v, std::int64_t lo, std::int64_t hi) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < hi) {
      ++v[i];
      return true;
    }
    v[i] = lo;
  }
  return false;
}

// Next strictly increasing vector in 1..den−1.
bool advance_increasing(std::vector<std::int64_t>& a, std::int64_t den) {
  const auto m = a.size();
  for (std::size_t i = m; i-- > 0;) {
    const auto cap = den - 1 - static_cast<std::int64_t>(m - 1 - i);
    if (a[i] < cap) {
      ++a[i];
      for (std::size_t t = i + 1; t < m; ++t) a[t] = a[t - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<Rat> weights_from(std::span<const std::int64_t> numerators, std::int64_t den) {
  std::vector<Rat> w;
  std::int64_t previous = 0;
  for (auto a : numerators) {
    w.push_back(rat_make(a - previous, den));
    previous = a;
  }
  w.push_back(rat_make(den - previous, den));
  return w;
}

}  // namespace

SweepReport sweep_implication(const SweepBounds& b) {
  SweepReport report;
  const auto n = b.n;
  if (n < 1 || b.r < 1 || b.chi_min > b.chi_max) return report;
  if (n >= 2 && b.w_den < static_cast<std::int64_t>(n)) return report;

  std::vector<std::int64_t> chi(n, b.chi_min);
  do {
    std::vector<std::int64_t> k(n - 1, 0);
    do {
      std::vector<std::int64_t> a(n - 1);
      std::iota(a.begin(), a.end(), 1);
      do {
        ++report.tuples;
        const auto eval = evaluate_implication_tuple(b.r, chi, k, a, b.w_den);
        if (eval.hypothesis_holds) ++report.hypothesis_true;
        if (eval.bounds_hold) ++report.bounds_true;
        if (eval.hypothesis_holds && !eval.bounds_hold) {
          report.implication_failures.push_back({chi, k, weights_from(a, b.w_den)});
        }
        if (eval.bounds_hold && !eval.hypothesis_holds) {
          ++report.non_equivalence_count;
          if (report.non_equivalence_witnesses.size() < b.max_witnesses) {
            report.non_equivalence_witnesses.push_back({chi, k, weights_from(a, b.w_den)});
          }
        }
      } while (n >= 2 && advance_increasing(a, b.w_den));
    } while (advance(k, 0, b.r));
  } while (advance(chi, b.chi_min, b.chi_max));
  return report;
}

bool subset_bruteforce(std::int64_t r, std::span<const std::int64_t> chi_vec) {
  const auto n = chi_vec.size();
  if (n > 20) throw InvalidInput("subset brute force limited to n <= 20");
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::int64_t sum = 0;
    std::int64_t size = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) {
        sum += chi_vec[i];
        ++size;
      }
    }
    if (sum <= (size - 1) * r) return false;
  }
  return true;
}

namespace {

Rat leibniz_determinant(const RatMatrix& m, std::span<const std::size_t> rows,
                        std::span<const std::size_t> cols) {
  const auto t = rows.size();
  std::vector<std::size_t> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  Rat det;
  do {
    // Sign by counting inversions.
    int inversions = 0;
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    Rat term(1);
    for (std::size_t i = 0; i < t && term.sign() != 0; ++i) term *= m(rows[i], cols[perm[i]]);
    if (inversions % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Calls f on each t-subset of {0..n−1}; stops early when f returns true.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t t, F&& f) {
  std::vector<bool> select(n, false);
  std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(t), true);
  do {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (select[i]) subset.push_back(i);
    }
    if (f(subset)) return true;
  } while (std::prev_permutation(select.begin(), select.end()));
  return false;
}

}  // namespace

std::int64_t minor_rank(const RatMatrix& m) {
  if (m.rows() > 6 || m.cols() > 6) throw InvalidInput("minor_rank limited to 6 x 6");
  for (std::size_t t = std::min(m.rows(), m.cols()); t >= 1; --t) {
    bool nonzero = for_each_subset(m.rows(), t, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(m.cols(), t, [&](const std::vector<std::size_t>& cols) {
        return leibniz_determinant(m, rows, cols).sign() != 0;
      });
    });
    if (nonzero) return static_cast<std::int64_t>(t);
  }
  return 0;
}

std::vector<std::vector<std::int64_t>> component_euler_vectors(std::size_t n, std::int64_t r,
                                                               std::int64_t chi,
                                                               const Polarization& w) {
  if (w.size() != n || n < 1 || r < 1) throw InvalidInput("inconsistent enumeration input");
  const std::int64_t total = chi + r * static_cast<std::int64_t>(n - 1);

  // Candidates for P_j, found by scanning a window around S_j χ.
  std::vector<std::vector<std::int64_t>> candidates;
  for (std::size_t j = 1; j < n; ++j) {
    const Rat center = w.partial_sum(j) * Rat(chi);
    const Rat lo = center + Rat(r * static_cast<std::int64_t>(j - 1));
    const Rat hi = center + Rat(r * static_cast<std::int64_t>(j));
    const std::int64_t start = to_int64(center.floor()) + r * static_cast<std::int64_t>(j - 1) - 1;
    std::vector<std::int64_t> ps;
    for (std::int64_t z = start; z <= start + r + 2; ++z) {
      if (lo < Rat(z) && Rat(z) < hi) ps.push_back(z);
    }
    candidates.push_back(std::move(ps));
  }

  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> sums;
  auto product = [&](auto&& self, std::size_t j) -> void {
    if (j == candidates.size()) {
      std::vector<std::int64_t> chis;
      std::int64_t previous = 0;
      for (auto p : sums) {
        chis.push_back(p - previous);
        previous = p;
      }
      chis.push_back(total - previous);
      out.push_back(std::move(chis));
      return;
    }
    for (auto p : candidates[j]) {
      sums.push_back(p);
      self(self, j + 1);
      sums.pop_back();
    }
  };
  product(product, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chainmod::oracle
