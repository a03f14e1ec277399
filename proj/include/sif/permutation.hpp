#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace sif {

/// 1-based inclusive range of positions in a chain. Nonempty by construction.
struct Interval {
  int lo = 1;
  int hi = 1;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A permutation of [n] = {1,...,n} in one-line notation; n = 0 is allowed.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `values` is a rearrangement of 1..n.
  static Permutation from_one_line(std::vector<int> values) {
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : values) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
        throw std::invalid_argument("one-line form must be a rearrangement of 1..n");
      seen[static_cast<std::size_t>(v) - 1] = 1;
    }
    return Permutation(std::move(values));
  }

  static Permutation identity(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }
  bool empty() const { return images_.empty(); }

  /// sigma(i); i is 1-based and must be in [1, n].
  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }

  std::span<const int> images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// A bijection on an arbitrary finite chain of positive integers, e.g.
/// 5 9 2 3 on {2,3,5,9}. Positions are 1-based indices into the sorted
/// support; elements are the support values themselves.
class LabeledPermutation {
 public:
  LabeledPermutation() = default;

  static LabeledPermutation from_support_images(std::vector<int> support,
                                                std::vector<int> images) {
    if (support.size() != images.size())
      throw std::invalid_argument("support and images must have equal length");
    if (!support.empty() && support.front() < 1)
      throw std::invalid_argument("support elements must be positive");
    for (std::size_t i = 0; i + 1 < support.size(); ++i)
      if (support[i] >= support[i + 1])
        throw std::invalid_argument("support must be strictly increasing");
    std::vector<int> sorted_images = images;
    std::sort(sorted_images.begin(), sorted_images.end());
    if (sorted_images != support)
      throw std::invalid_argument("images must be a rearrangement of the support");
    return LabeledPermutation(std::move(support), std::move(images));
  }

  /// View a permutation of [n] as the labeled permutation on the chain 1..n.
  static LabeledPermutation standard(const Permutation& p) {
    std::vector<int> support(static_cast<std::size_t>(p.size()));
    std::iota(support.begin(), support.end(), 1);
    return LabeledPermutation(std::move(support),
                              std::vector<int>(p.images().begin(), p.images().end()));
  }

  /// Transport `pattern` onto `support` via the order isomorphism.
  static LabeledPermutation from_pattern(std::vector<int> support, const Permutation& pattern) {
    if (static_cast<int>(support.size()) != pattern.size())
      throw std::invalid_argument("support size must match pattern length");
    std::vector<int> images(support.size());
    for (int t = 1; t <= pattern.size(); ++t)
      images[static_cast<std::size_t>(t) - 1] = support[static_cast<std::size_t>(pattern(t)) - 1];
    return from_support_images(std::move(support), std::move(images));
  }

  int size() const { return static_cast<int>(support_.size()); }
  bool empty() const { return support_.empty(); }

  int element_at(int pos) const { return support_[static_cast<std::size_t>(pos) - 1]; }
  int image_at(int pos) const { return images_[static_cast<std::size_t>(pos) - 1]; }
  int image_of(int element) const { return image_at(position_of(element)); }

  /// 1-based position of `element` in the support; throws if absent.
  int position_of(int element) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), element);
    if (it == support_.end() || *it != element)
      throw std::invalid_argument("element not in support");
    return static_cast<int>(it - support_.begin()) + 1;
  }

  bool contains(int element) const {
    return std::binary_search(support_.begin(), support_.end(), element);
  }

  std::span<const int> support() const { return support_; }
  std::span<const int> images() const { return images_; }

  friend bool operator==(const LabeledPermutation&, const LabeledPermutation&) = default;

 private:
  LabeledPermutation(std::vector<int> support, std::vector<int> images)
      : support_(std::move(support)), images_(std::move(images)) {}
  std::vector<int> support_;
  std::vector<int> images_;
};

/// Rank-relabel onto [n]: smallest element becomes 1, next smallest 2, ...
inline Permutation reduce(const LabeledPermutation& p) {
  auto sup = p.support();
  std::vector<int> pattern(sup.size());
  for (int pos = 1; pos <= p.size(); ++pos) {
    auto it = std::lower_bound(sup.begin(), sup.end(), p.image_at(pos));
    pattern[static_cast<std::size_t>(pos) - 1] = static_cast<int>(it - sup.begin()) + 1;
  }
  return Permutation::from_one_line(std::move(pattern));
}

/// Canonical cycle decomposition: each cycle starts at its minimum, cycles
/// ordered by minimum.
inline std::vector<std::vector<int>> cycles(const Permutation& p) {
  const int n = p.size();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) {
    if (visited[static_cast<std::size_t>(i) - 1]) continue;
    std::vector<int> cycle;
    int cur = i;
    while (!visited[static_cast<std::size_t>(cur) - 1]) {
      visited[static_cast<std::size_t>(cur) - 1] = 1;
      cycle.push_back(cur);
      cur = p(cur);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

/// True iff sigma maps every element of the interval into the interval.
inline bool is_stabilized(const Permutation& p, Interval iv) {
  if (iv.lo < 1 || iv.hi > p.size() || iv.lo > iv.hi)
    throw std::out_of_range("interval out of bounds");
  for (int i = iv.lo; i <= iv.hi; ++i)
    if (p(i) < iv.lo || p(i) > iv.hi) return false;
  return true;
}

/// First (lexicographically by lo, then hi) stabilized proper nonempty
/// subinterval, if any. "Proper" excludes the whole chain.
inline std::optional<Interval> first_stabilized_proper_subinterval(const Permutation& p) {
  const int n = p.size();
  for (int lo = 1; lo <= n; ++lo) {
    int mn = n + 1, mx = 0;
    for (int hi = lo; hi <= n; ++hi) {
      mn = std::min(mn, p(hi));
      mx = std::max(mx, p(hi));
      if (lo == 1 && hi == n) break;
      // An interval is stabilized iff the images' min and max are its ends
      // (injectivity forces equality of the sets).
      if (mn == lo && mx == hi) return Interval{lo, hi};
    }
  }
  return std::nullopt;
}

inline bool is_sif(const Permutation& p) {
  return !first_stabilized_proper_subinterval(p).has_value();
}

/// The finest partition of the chain into consecutive stabilized intervals,
/// by a single left-to-right running-maximum scan.
inline std::vector<Interval> components(const Permutation& p) {
  std::vector<Interval> result;
  const int n = p.size();
  int start = 1, running_max = 0;
  for (int i = 1; i <= n; ++i) {
    running_max = std::max(running_max, p(i));
    if (running_max == i) {
      result.push_back({start, i});
      start = i + 1;
    }
  }
  return result;
}

inline bool is_connected(const Permutation& p) { return components(p).size() == 1; }

/// Inclusion-maximal stabilized proper nonempty subintervals, left to right.
/// For connected inputs these are pairwise disjoint and touch neither end of
/// the chain.
inline std::vector<Interval> maximal_stabilized_proper_subintervals(const Permutation& p) {
  const int n = p.size();
  std::vector<Interval> stabilized;
  for (int lo = 1; lo <= n; ++lo) {
    int mn = n + 1, mx = 0;
    for (int hi = lo; hi <= n; ++hi) {
      mn = std::min(mn, p(hi));
      mx = std::max(mx, p(hi));
      if (lo == 1 && hi == n) continue;
      if (mn == lo && mx == hi) stabilized.push_back({lo, hi});
    }
  }
  // stabilized is sorted by lo asc, hi asc. [lo,hi] is dominated exactly when
  // some interval with lo' <= lo reaches hi' >= hi, so one sweep suffices.
  std::vector<Interval> result;
  int best_hi = 0;
  std::size_t i = 0;
  while (i < stabilized.size()) {
    const int lo = stabilized[i].lo;
    int hi = stabilized[i].hi;
    while (i + 1 < stabilized.size() && stabilized[i + 1].lo == lo) {
      ++i;
      hi = stabilized[i].hi;
    }
    if (hi > best_hi) {
      result.push_back({lo, hi});
      best_hi = hi;
    }
    ++i;
  }
  return result;
}

// Labeled-chain overloads: intervals index positions of the support chain
// (saturated subchains), so everything reduces to the positional pattern.
inline bool is_stabilized(const LabeledPermutation& p, Interval iv) {
  return is_stabilized(reduce(p), iv);
}
inline std::optional<Interval> first_stabilized_proper_subinterval(const LabeledPermutation& p) {
  return first_stabilized_proper_subinterval(reduce(p));
}
inline bool is_sif(const LabeledPermutation& p) { return is_sif(reduce(p)); }
inline std::vector<Interval> components(const LabeledPermutation& p) {
  return components(reduce(p));
}
inline bool is_connected(const LabeledPermutation& p) { return is_connected(reduce(p)); }
inline std::vector<Interval> maximal_stabilized_proper_subintervals(const LabeledPermutation& p) {
  return maximal_stabilized_proper_subintervals(reduce(p));
}

/// Induced bijection on a stabilized subset (given as an increasing element
/// sequence). Throws if the subset is not stabilized.
inline LabeledPermutation restrict_to(const LabeledPermutation& p, std::span<const int> subset) {
  std::vector<int> sub(subset.begin(), subset.end());
  for (std::size_t i = 0; i + 1 < sub.size(); ++i)
    if (sub[i] >= sub[i + 1])
      throw std::invalid_argument("subset must be strictly increasing");
  std::vector<int> images;
  images.reserve(sub.size());
  for (int e : sub) {
    const int v = p.image_of(e);
    if (!std::binary_search(sub.begin(), sub.end(), v))
      throw std::invalid_argument("subset is not stabilized");
    images.push_back(v);
  }
  return LabeledPermutation::from_support_images(std::move(sub), std::move(images));
}

inline LabeledPermutation restrict_to(const Permutation& p, std::span<const int> subset) {
  return restrict_to(LabeledPermutation::standard(p), subset);
}

struct DeleteMaxResult {
  Permutation rest;                       // permutation of [n-1]
  std::optional<int> moved_position;      // preimage of n; absent when n was fixed
};

/// Erase n from its cycle: with j the preimage of n, the result q has
/// q(j) = sigma(n) and agrees with sigma elsewhere. When n is a fixed point
/// the result is sigma without its last entry and no position is reported.
inline DeleteMaxResult delete_max(const Permutation& p) {
  const int n = p.size();
  if (n == 0) throw std::invalid_argument("cannot delete the maximum of the empty permutation");
  std::vector<int> q(p.images().begin(), p.images().end() - 1);
  if (p(n) == n) return {Permutation::from_one_line(std::move(q)), std::nullopt};
  int j = 0;
  for (int i = 1; i < n; ++i)
    if (p(i) == n) {
      j = i;
      break;
    }
  q[static_cast<std::size_t>(j) - 1] = p(n);
  return {Permutation::from_one_line(std::move(q)), j};
}

/// Exact inverse of delete_max: with j, the result r has r(j) = n and
/// r(n) = p(j); without j, n becomes a fixed point.
inline Permutation insert_max(const Permutation& p, std::optional<int> moved_position) {
  const int n = p.size() + 1;
  std::vector<int> r(p.images().begin(), p.images().end());
  if (!moved_position) {
    r.push_back(n);
    return Permutation::from_one_line(std::move(r));
  }
  const int j = *moved_position;
  if (j < 1 || j > n - 1) throw std::out_of_range("insertion position out of range");
  r.push_back(r[static_cast<std::size_t>(j) - 1]);
  r[static_cast<std::size_t>(j) - 1] = n;
  return Permutation::from_one_line(std::move(r));
}

}  // namespace sif
