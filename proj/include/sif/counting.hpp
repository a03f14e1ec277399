#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sif/permutation.hpp"

namespace sif {

/// Arbitrary-precision count; a_n overtakes 64 bits near n = 21, so all
/// counting is exact from the start.
using BigCount = boost::multiprecision::cpp_int;

/// Memo tables for factorials, connected counts c_n, SIF counts a_n and the
/// partial counts a_{n,k}. Confine one context to one thread; operations are
/// deterministic, so contexts are freely reproducible.
class CountContext {
 public:
  const BigCount& factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    while (static_cast<int>(factorials_.size()) <= n)
      factorials_.push_back(factorials_.back() * static_cast<int>(factorials_.size()));
    return factorials_[static_cast<std::size_t>(n)];
  }

  /// Connected (indecomposable) permutations of [n]:
  /// c_0 = 0, c_n = n! - sum_{i=1}^{n-1} c_i (n-i)!.
  const BigCount& connected_count(int n) {
    if (n < 0) throw std::invalid_argument("connected_count of a negative number");
    while (static_cast<int>(connected_.size()) <= n) {
      const int m = static_cast<int>(connected_.size());
      if (m == 0) {
        connected_.emplace_back(0);
      } else {
        BigCount c = factorial(m);
        for (int i = 1; i <= m - 1; ++i)
          c -= connected_[static_cast<std::size_t>(i)] * factorial(m - i);
        connected_.push_back(std::move(c));
      }
    }
    return connected_[static_cast<std::size_t>(n)];
  }

  /// SIF permutations of [n] (A075834):
  /// a_0 = a_1 = 1, a_n = sum_{j=2}^{n-2} (j-1) a_j a_{n-j} + (n-1) a_{n-1};
  /// vacuous sums are 0.
  const BigCount& sif_count(int n) {
    if (n < 0) throw std::invalid_argument("sif_count of a negative number");
    while (static_cast<int>(sif_.size()) <= n) {
      const int m = static_cast<int>(sif_.size());
      if (m <= 1) {
        sif_.emplace_back(1);
      } else {
        BigCount a = BigCount(m - 1) * sif_[static_cast<std::size_t>(m) - 1];
        for (int j = 2; j <= m - 2; ++j)
          a += BigCount(j - 1) * sif_[static_cast<std::size_t>(j)] * sif_[static_cast<std::size_t>(m - j)];
        sif_.push_back(std::move(a));
      }
    }
    return sif_[static_cast<std::size_t>(n)];
  }

  /// Permutations of [n] stabilizing no proper subinterval beginning at
  /// i < k. Boundary conventions: a_{m,m+1} = 0 for every m >= 0 (hence
  /// a_{0,1} = 0 and a_{1,2} = 0), a_{n,1} = n! for n >= 1, and for
  /// 2 <= k <= n:
  /// a_{n,k} = n! - sum_{i=1}^{k-1} sum_{j=i}^{n} c_{j-i+1} a_{n-(j-i+1),i}.
  const BigCount& partial_count(int n, int k) {
    if (n < 0 || k < 1 || k > n + 1)
      throw std::invalid_argument("partial_count requires n >= 0 and 1 <= k <= n+1");
    if (k == n + 1) return zero_;
    if (k == 1) return factorial(n);
    const auto key = std::make_pair(n, k);
    if (auto it = partial_.find(key); it != partial_.end()) return it->second;
    BigCount v = factorial(n);
    for (int i = 1; i <= k - 1; ++i)
      for (int j = i; j <= n; ++j) {
        const int len = j - i + 1;
        v -= connected_count(len) * partial_count(n - len, i);
      }
    return partial_.emplace(key, std::move(v)).first->second;
  }

 private:
  // Deques keep returned references valid while the tables keep growing;
  // callers routinely hold one reference across another lookup.
  std::deque<BigCount> factorials_{BigCount(1)};
  std::deque<BigCount> connected_;
  std::deque<BigCount> sif_;
  std::map<std::pair<int, int>, BigCount> partial_;
  inline static const BigCount zero_{0};
};

namespace detail {

template <typename F>
void for_each_permutation(int n, F&& fn) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(v);
  } while (std::next_permutation(v.begin(), v.end()));
}

inline void check_brute_bound(int n, int bound) {
  if (n < 0 || n > bound) throw std::invalid_argument("brute-force bound exceeded");
}

}  // namespace detail

/// Exhaustive filter over all n! permutations by the SIF predicate.
inline BigCount brute_sif_count(int n, int bound = 9) {
  detail::check_brute_bound(n, bound);
  BigCount count = 0;
  detail::for_each_permutation(n, [&](const std::vector<int>& v) {
    count += is_sif(Permutation::from_one_line(v));
  });
  return count;
}

/// Exhaustive filter by connectedness (exactly one component).
inline BigCount brute_connected_count(int n, int bound = 9) {
  detail::check_brute_bound(n, bound);
  BigCount count = 0;
  detail::for_each_permutation(n, [&](const std::vector<int>& v) {
    count += is_connected(Permutation::from_one_line(v));
  });
  return count;
}

/// Exhaustive filter: no stabilized proper subinterval beginning at i for
/// i < k. Meaningful for 1 <= k <= n; the recurrence's a_{m,m+1} = 0
/// boundary is a convention, not a count.
inline BigCount brute_partial_count(int n, int k, int bound = 9) {
  detail::check_brute_bound(n, bound);
  if (k < 1 || k > n + 1) throw std::invalid_argument("k out of range");
  BigCount count = 0;
  detail::for_each_permutation(n, [&](const std::vector<int>& v) {
    const Permutation p = Permutation::from_one_line(v);
    for (int i = 1; i <= std::min(k - 1, n); ++i)
      for (int h = i; h <= n; ++h) {
        if (i == 1 && h == n) continue;
        if (is_stabilized(p, {i, h})) return;
      }
    count += 1;
  });
  return count;
}

}  // namespace sif
