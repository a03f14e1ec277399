#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sif/split.hpp"

namespace sif {

/// A list of unlabeled SIF permutations; empty items allowed. The image of
/// encode on S_[n] is exactly the n-item lists of total length n-1.
class SifList {
 public:
  SifList() = default;

  static SifList from_items(std::vector<Permutation> items) {
    for (const auto& item : items)
      if (!is_sif(item)) throw std::invalid_argument("every list item must be SIF");
    return SifList(std::move(items));
  }

  int item_count() const { return static_cast<int>(items_.size()); }
  int total_length() const {
    int total = 0;
    for (const auto& item : items_) total += item.size();
    return total;
  }
  std::span<const Permutation> items() const { return items_; }

  friend bool operator==(const SifList&, const SifList&) = default;

 private:
  explicit SifList(std::vector<Permutation> items) : items_(std::move(items)) {}
  std::vector<Permutation> items_;
};

/// Canonical form of the balanced path Q = D^{d_1} U D^{d_2} U ... U D^{d_n}:
/// n descents (zero descents included) separated by n-1 single upsteps, with
/// one SIF label per nonzero descent and sum d_i = n-1. In the marked case
/// the marked upstep is the k-th one, k = index of the first zero descent.
struct BalancedForm {
  std::vector<int> descent_lengths;
  std::vector<Permutation> labels;
  std::optional<int> marked_upstep;

  LatticePath to_path() const {
    std::vector<Step> steps;
    const int n = static_cast<int>(descent_lengths.size());
    for (int i = 0; i < n; ++i) {
      for (int t = 0; t < descent_lengths[static_cast<std::size_t>(i)]; ++t)
        steps.push_back(Step::down);
      if (i + 1 < n) steps.push_back(Step::up);
    }
    return LatticePath(std::move(steps));
  }

  friend bool operator==(const BalancedForm&, const BalancedForm&) = default;
};

namespace detail {

// Step sequence in which every downstep carries the id of the maximal
// descent it came from, so descents keep their SIF labels through all the
// cut-and-paste below. Cuts always happen just before an upstep, so a
// maximal descent is never torn apart.
struct TaggedStep {
  Step step;
  int tag;  // -1 for upsteps
};
using TaggedSeq = std::vector<TaggedStep>;

inline TaggedSeq tag_path(const DescentLabeledPath& dlp, std::vector<Permutation>& label_store) {
  TaggedSeq out;
  out.reserve(static_cast<std::size_t>(dlp.path.length()));
  std::size_t next_label = 0;
  int current = -1;
  bool in_descent = false;
  for (Step s : dlp.path.steps()) {
    if (s == Step::up) {
      out.push_back({s, -1});
      in_descent = false;
    } else {
      if (!in_descent) {
        label_store.push_back(dlp.labels.at(next_label++));
        current = static_cast<int>(label_store.size()) - 1;
        in_descent = true;
      }
      out.push_back({s, current});
    }
  }
  if (next_label != dlp.labels.size())
    throw std::logic_error("descent/label mismatch while tagging a path");
  return out;
}

inline int count_ups(const TaggedSeq& seq) {
  int c = 0;
  for (const TaggedStep& s : seq) c += (s.step == Step::up);
  return c;
}

// Rebuild a DescentLabeledPath from tagged steps; every maximal down-run
// must be uniformly tagged.
inline DescentLabeledPath untag_path(const TaggedSeq& seq,
                                     const std::vector<Permutation>& label_store) {
  std::vector<Step> steps;
  steps.reserve(seq.size());
  std::vector<Permutation> labels;
  bool in_descent = false;
  int current = -1;
  for (const TaggedStep& s : seq) {
    steps.push_back(s.step);
    if (s.step == Step::up) {
      in_descent = false;
    } else {
      if (!in_descent) {
        current = s.tag;
        labels.push_back(label_store.at(static_cast<std::size_t>(s.tag)));
        in_descent = true;
      } else if (s.tag != current) {
        throw std::logic_error("a maximal descent lost its label identity");
      }
    }
  }
  return {LatticePath(std::move(steps)), std::move(labels), std::nullopt};
}

}  // namespace detail

/// The balanced path Q of the encoding of p, in canonical form.
///
/// Construction: split p into components sigma_1..sigma_k; record j, the
/// preimage of n; erase n from the last component's cycle (sigma_k'); build
/// the descent-labeled Dyck paths of sigma_1..sigma_{k-1} and sigma_k'.
/// Across the concatenated paths upstep t corresponds to element t of
/// [n-1], and upstep j is marked unless j = n (then sigma_k' is empty). Cut
/// the last path just before its marked upstep into R and S; strip the last
/// upstep u of each earlier path, leaving a prefix P_i and its final descent
/// D_i; then Q = D_1 u D_2 u ... D_{k-1} u S R P_1 ... P_{k-1}.
inline BalancedForm canonical_q(const Permutation& p) {
  const int n = p.size();
  if (n == 0) throw std::invalid_argument("the bijection is defined for n >= 1");

  const auto comps = components(p);
  const int k = static_cast<int>(comps.size());
  int j = 0;
  for (int i = 1; i <= n; ++i)
    if (p(i) == n) {
      j = i;
      break;
    }
  const bool marked = (j != n);  // j = n exactly when n is a fixed point

  std::vector<LabeledPermutation> parts;
  parts.reserve(static_cast<std::size_t>(k));
  for (int c = 0; c + 1 < k; ++c) {
    std::vector<int> elems;
    for (int e = comps[static_cast<std::size_t>(c)].lo; e <= comps[static_cast<std::size_t>(c)].hi;
         ++e)
      elems.push_back(e);
    parts.push_back(restrict_to(p, elems));
  }
  const int last_lo = comps[static_cast<std::size_t>(k) - 1].lo;
  if (marked) {
    // sigma_k with n erased from its cycle: sigma'(j) = p(n).
    std::vector<int> elems, images;
    for (int e = last_lo; e <= n - 1; ++e) {
      elems.push_back(e);
      images.push_back(e == j ? p(n) : p(e));
    }
    parts.push_back(LabeledPermutation::from_support_images(std::move(elems), std::move(images)));
  }

  std::vector<Permutation> label_store;
  std::vector<detail::TaggedSeq> tagged;
  tagged.reserve(parts.size());
  for (const auto& part : parts)
    tagged.push_back(detail::tag_path(component_labeled_path(part), label_store));

  detail::TaggedSeq q;
  q.reserve(2 * static_cast<std::size_t>(n));
  // Earlier components: emit final descent + the stripped upstep, keep the prefix.
  std::vector<detail::TaggedSeq> prefixes;
  for (int i = 0; i < k - 1; ++i) {
    const detail::TaggedSeq& t = tagged[static_cast<std::size_t>(i)];
    std::size_t last_up = t.size();
    for (std::size_t s = t.size(); s-- > 0;)
      if (t[s].step == Step::up) {
        last_up = s;
        break;
      }
    q.insert(q.end(), t.begin() + static_cast<std::ptrdiff_t>(last_up) + 1, t.end());
    q.push_back({Step::up, -1});
    prefixes.emplace_back(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(last_up));
  }
  if (marked) {
    const detail::TaggedSeq& t = tagged.back();
    // Global upstep j is the (j - last_lo + 1)-th upstep of the last path.
    const int ordinal = j - last_lo + 1;
    std::size_t cut = 0;
    int seen = 0;
    for (std::size_t s = 0; s < t.size(); ++s)
      if (t[s].step == Step::up && ++seen == ordinal) {
        cut = s;
        break;
      }
    q.insert(q.end(), t.begin() + static_cast<std::ptrdiff_t>(cut), t.end());    // S
    q.insert(q.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(cut));  // R
  }
  for (const auto& prefix : prefixes) q.insert(q.end(), prefix.begin(), prefix.end());

  // Canonical descent-length form: gap i+1 sits after the i-th upstep.
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  std::vector<Permutation> labels;
  int ups_seen = 0;
  bool in_descent = false;
  int current = -1;
  for (const detail::TaggedStep& s : q) {
    if (s.step == Step::up) {
      ++ups_seen;
      in_descent = false;
    } else {
      ++d[static_cast<std::size_t>(ups_seen)];
      if (!in_descent) {
        labels.push_back(label_store.at(static_cast<std::size_t>(s.tag)));
        current = s.tag;
        in_descent = true;
      } else if (s.tag != current) {
        throw std::logic_error("descents merged while assembling the balanced path");
      }
    }
  }
  if (ups_seen != n - 1) throw std::logic_error("balanced path must have n-1 upsteps");
  std::optional<int> marked_upstep;
  if (marked) {
    // The marked upstep is the first step of S, i.e. the upstep following
    // the k-1 nonzero descents D_1..D_{k-1}: the first zero-descent slot.
    for (int i = 0; i < n; ++i)
      if (d[static_cast<std::size_t>(i)] == 0) {
        marked_upstep = i + 1;
        break;
      }
  }
  return {std::move(d), std::move(labels), marked_upstep};
}

/// Encode a permutation of [n] as an n-list of unlabeled SIF permutations of
/// total length n-1: scan all descents of Q, recording the empty permutation
/// for each zero descent and the descent's SIF label otherwise.
inline SifList encode(const Permutation& p) {
  BalancedForm q = canonical_q(p);
  std::vector<Permutation> items;
  items.reserve(q.descent_lengths.size());
  std::size_t next_label = 0;
  for (int len : q.descent_lengths)
    items.push_back(len == 0 ? Permutation{} : q.labels[next_label++]);
  return SifList::from_items(std::move(items));
}

/// Decode an n-item SIF list of total length n-1 back to the permutation of
/// [n]. Recovery walks the balanced path Q: the center p of the first double
/// rise (upsteps conceptually prepended/appended) starts the marked upstep;
/// the rightmost lowest point after p ends S; the rightmost vertex at p's
/// level ends R; the descent lengths D_1..D_{k-1} segment the remainder into
/// the prefixes P_1..P_{k-1}.
inline Permutation decode(const SifList& list) {
  const int n = list.item_count();
  if (n == 0) throw std::invalid_argument("the bijection is defined for n >= 1");
  if (list.total_length() != n - 1)
    throw std::invalid_argument("an n-item list must have total length n-1");
  const auto items = list.items();

  detail::TaggedSeq q;
  q.reserve(2 * static_cast<std::size_t>(n));
  std::vector<Permutation> label_store(items.begin(), items.end());
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    d[static_cast<std::size_t>(i)] = items[static_cast<std::size_t>(i)].size();
    for (int t = 0; t < d[static_cast<std::size_t>(i)]; ++t) q.push_back({Step::down, i});
    if (i + 1 < n) q.push_back({Step::up, -1});
  }
  const int len = static_cast<int>(q.size());

  // k = index of the first zero descent; exists since sum d_i = n-1 < n.
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (d[static_cast<std::size_t>(i)] == 0) {
      k = i + 1;
      break;
    }

  // Vertex after D_1 u ... D_{k-1} u: the center of the first double rise.
  int p_idx = k - 1;
  int level_p = k - 1;
  for (int i = 0; i < k - 1; ++i) {
    p_idx += d[static_cast<std::size_t>(i)];
    level_p -= d[static_cast<std::size_t>(i)];
  }

  std::vector<int> level(static_cast<std::size_t>(len) + 1, 0);
  for (int v = 0; v < len; ++v)
    level[static_cast<std::size_t>(v) + 1] =
        level[static_cast<std::size_t>(v)] + (q[static_cast<std::size_t>(v)].step == Step::up ? 1 : -1);

  // Marked exactly when some vertex strictly after p sits at level <= l_p;
  // for unmarked inputs everything after p stays strictly above.
  bool marked = false;
  for (int v = p_idx + 1; v <= len; ++v)
    if (level[static_cast<std::size_t>(v)] <= level_p) {
      marked = true;
      break;
    }

  detail::TaggedSeq path_r, path_s;
  int q_idx = p_idx;
  if (marked) {
    int min_level = level[static_cast<std::size_t>(p_idx) + 1], m_idx = p_idx + 1;
    for (int v = p_idx + 1; v <= len; ++v)
      if (level[static_cast<std::size_t>(v)] <= min_level) {
        min_level = level[static_cast<std::size_t>(v)];
        m_idx = v;  // rightmost lowest point following p
      }
    path_s.assign(q.begin() + p_idx, q.begin() + m_idx);
    q_idx = m_idx;
    for (int v = m_idx + 1; v <= len; ++v)
      if (level[static_cast<std::size_t>(v)] == level_p) q_idx = v;  // rightmost at p's level
    path_r.assign(q.begin() + m_idx, q.begin() + q_idx);
  }

  // Segment the tail into P_1..P_{k-1}: each P_i ends at the rightmost
  // vertex at its base level B_i = B_{i-1} + (d_i - 1); a greedy first-hit
  // rule would be wrong, the interiors may revisit the base.
  std::vector<detail::TaggedSeq> prefixes;
  prefixes.reserve(static_cast<std::size_t>(k) - 1);
  int x_prev = q_idx;
  int base = level_p;
  for (int i = 1; i <= k - 1; ++i) {
    base += d[static_cast<std::size_t>(i) - 1] - 1;
    int x = -1;
    for (int v = x_prev; v <= len; ++v)
      if (level[static_cast<std::size_t>(v)] == base) x = v;
    if (x < x_prev) throw std::logic_error("decode: segmentation failed");
    prefixes.emplace_back(q.begin() + x_prev, q.begin() + x);
    x_prev = x;
  }
  if (x_prev != len) throw std::logic_error("decode: trailing steps after segmentation");

  // Reassemble the component paths, assign consecutive element intervals by
  // upstep counts, and take the union.
  std::vector<std::pair<int, int>> mapping;  // (element, image) over [n-1]
  int next_base = 1;
  std::optional<int> j;
  for (int i = 0; i < k - 1; ++i) {
    detail::TaggedSeq path = prefixes[static_cast<std::size_t>(i)];
    path.push_back({Step::up, -1});
    for (int t = 0; t < d[static_cast<std::size_t>(i)]; ++t) path.push_back({Step::down, i});
    const LabeledPermutation piece =
        labeled_path_to_perm(detail::untag_path(path, label_store), next_base);
    for (int pos = 1; pos <= piece.size(); ++pos)
      mapping.emplace_back(piece.element_at(pos), piece.image_at(pos));
    next_base += piece.size();
  }
  if (marked) {
    detail::TaggedSeq path = path_r;
    path.insert(path.end(), path_s.begin(), path_s.end());
    j = next_base - 1 + detail::count_ups(path_r) + 1;
    const LabeledPermutation piece =
        labeled_path_to_perm(detail::untag_path(path, label_store), next_base);
    for (int pos = 1; pos <= piece.size(); ++pos)
      mapping.emplace_back(piece.element_at(pos), piece.image_at(pos));
    next_base += piece.size();
  }
  if (next_base != n) throw std::logic_error("decode: element intervals do not cover 1..n-1");

  std::sort(mapping.begin(), mapping.end());
  std::vector<int> images;
  images.reserve(mapping.size());
  for (const auto& [element, image] : mapping) {
    if (element != static_cast<int>(images.size()) + 1)
      throw std::logic_error("decode: recovered supports do not tile 1..n-1");
    images.push_back(image);
  }
  return insert_max(Permutation::from_one_line(std::move(images)), j);
}

/// Exhaustive self-check of the bijection on S_[n].
struct BijectionReport {
  int n = 0;
  std::uint64_t permutations = 0;
  std::uint64_t roundtrip_failures = 0;
  std::uint64_t invalid_outputs = 0;
  std::uint64_t distinct_outputs = 0;
  std::uint64_t valid_list_count = 0;
  std::vector<std::string> failure_samples;

  bool passed() const {
    return roundtrip_failures == 0 && invalid_outputs == 0 &&
           distinct_outputs == permutations && valid_list_count == permutations;
  }
};

namespace detail {

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Permutation of [n] with the given lexicographic rank (0-based).
inline std::vector<int> nth_permutation(int n, std::uint64_t rank) {
  std::vector<int> available(static_cast<std::size_t>(n));
  std::iota(available.begin(), available.end(), 1);
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i)
    fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i) - 1] * static_cast<std::uint64_t>(i);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = fact[static_cast<std::size_t>(i)];
    const std::size_t idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(available[idx]);
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

inline std::string list_key(const SifList& list) {
  std::string key;
  for (const Permutation& item : list.items()) {
    if (!key.empty()) key += '/';
    if (item.empty()) {
      key += 'e';
    } else {
      for (int i = 1; i <= item.size(); ++i) {
        if (i > 1) key += ',';
        key += std::to_string(item(i));
      }
    }
  }
  return key;
}

/// Number of n-item lists of SIF permutations of total length n-1, with the
/// per-length SIF counts obtained by exhaustive filtering (independent of
/// encode and of the counting recurrences).
inline std::uint64_t count_valid_lists(int n) {
  std::vector<std::uint64_t> sif_counts(static_cast<std::size_t>(n), 0);
  sif_counts[0] = 1;
  for (int m = 1; m < n; ++m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    std::uint64_t count = 0;
    do {
      count += is_sif(Permutation::from_one_line(v));
    } while (std::next_permutation(v.begin(), v.end()));
    sif_counts[static_cast<std::size_t>(m)] = count;
  }
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n), 0);  // by total length
  ways[0] = 1;
  for (int item = 1; item <= n; ++item) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n), 0);
    for (int total = 0; total < n; ++total)
      for (int len = 0; len <= total; ++len)
        next[static_cast<std::size_t>(total)] +=
            ways[static_cast<std::size_t>(total - len)] * sif_counts[static_cast<std::size_t>(len)];
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(n) - 1];
}

}  // namespace detail

/// Check decode(encode(p)) = p over all n! permutations, that every output
/// is a well-formed n-list of total length n-1, that outputs are pairwise
/// distinct, and that the number of valid lists equals n!. The permutation
/// space is sharded across threads (0 = automatic; the SIFKIT_THREADS
/// environment variable bounds the automatic choice); results are merged in
/// shard order, so the report is deterministic.
inline BijectionReport verify_bijection(int n, int threads = 0) {
  if (n < 1) throw std::invalid_argument("verification requires n >= 1");
  BijectionReport report;
  report.n = n;
  report.permutations = detail::factorial_u64(n);
  report.valid_list_count = detail::count_valid_lists(n);

  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(hw == 0 ? 1 : std::min(hw, 8u));
    if (const char* env = std::getenv("SIFKIT_THREADS")) {
      const int bound = std::atoi(env);
      if (bound >= 1) threads = std::min(threads, bound);
    }
  }
  const std::uint64_t total = report.permutations;
  threads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total));

  struct Shard {
    std::uint64_t roundtrip_failures = 0;
    std::uint64_t invalid_outputs = 0;
    std::vector<std::string> keys;
    std::vector<std::string> samples;
  };
  std::vector<Shard> shards(static_cast<std::size_t>(threads));

  auto run_shard = [n](std::uint64_t lo, std::uint64_t hi, Shard& shard) {
    std::vector<int> v = detail::nth_permutation(n, lo);
    for (std::uint64_t r = lo; r < hi; ++r) {
      const Permutation p = Permutation::from_one_line(v);
      try {
        const SifList list = encode(p);
        bool ok = list.item_count() == n && list.total_length() == n - 1;
        if (!ok) {
          ++shard.invalid_outputs;
        } else {
          shard.keys.push_back(detail::list_key(list));
          if (decode(list) != p) {
            ++shard.roundtrip_failures;
            if (shard.samples.size() < 4) shard.samples.push_back(detail::list_key(list));
          }
        }
      } catch (const std::exception& e) {
        ++shard.roundtrip_failures;
        if (shard.samples.size() < 4) shard.samples.push_back(e.what());
      }
      std::next_permutation(v.begin(), v.end());
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(threads);
    const std::uint64_t hi =
        total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(threads);
    pool.emplace_back(run_shard, lo, hi, std::ref(shards[static_cast<std::size_t>(w)]));
  }
  for (auto& t : pool) t.join();

  std::vector<std::string> all_keys;
  all_keys.reserve(static_cast<std::size_t>(total));
  for (const Shard& shard : shards) {
    report.roundtrip_failures += shard.roundtrip_failures;
    report.invalid_outputs += shard.invalid_outputs;
    all_keys.insert(all_keys.end(), shard.keys.begin(), shard.keys.end());
    for (const std::string& s : shard.samples)
      if (report.failure_samples.size() < 8) report.failure_samples.push_back(s);
  }
  std::sort(all_keys.begin(), all_keys.end());
  report.distinct_outputs =
      static_cast<std::uint64_t>(std::unique(all_keys.begin(), all_keys.end()) - all_keys.begin());
  return report;
}

}  // namespace sif
