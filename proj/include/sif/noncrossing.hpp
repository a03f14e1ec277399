#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sif/lattice_path.hpp"

namespace sif {

namespace detail {

/// Validates that `blocks` partitions [n]; returns owner[e] = block index
/// for e in 1..n (owner[0] unused). Blocks must be sorted ascending.
inline std::vector<int> block_owner(int ground_size, const std::vector<std::vector<int>>& blocks) {
  if (ground_size < 0) throw std::invalid_argument("negative ground size");
  std::vector<int> owner(static_cast<std::size_t>(ground_size) + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("blocks must be nonempty");
    for (int e : blocks[b]) {
      if (e < 1 || e > ground_size || owner[static_cast<std::size_t>(e)] != -1)
        throw std::invalid_argument("blocks do not partition 1..n");
      owner[static_cast<std::size_t>(e)] = static_cast<int>(b);
    }
  }
  for (int e = 1; e <= ground_size; ++e)
    if (owner[static_cast<std::size_t>(e)] == -1)
      throw std::invalid_argument("blocks do not partition 1..n");
  return owner;
}

}  // namespace detail

/// True iff no a<b<c<d exists with a,c in one block and b,d in another.
/// Throws if the blocks do not partition [ground_size].
inline bool is_noncrossing(int ground_size, std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  const auto owner = detail::block_owner(ground_size, blocks);
  // Scan 1..n with a stack of open blocks; a noncrossing partition behaves
  // like well-nested brackets.
  std::vector<int> open;
  for (int e = 1; e <= ground_size; ++e) {
    const int b = owner[static_cast<std::size_t>(e)];
    if (e == blocks[static_cast<std::size_t>(b)].front())
      open.push_back(b);
    else if (open.empty() || open.back() != b)
      return false;
    if (e == blocks[static_cast<std::size_t>(b)].back()) open.pop_back();
  }
  return true;
}

/// A noncrossing partition of [n]; blocks stored ascending, ordered by
/// minimum element.
class NoncrossingPartition {
 public:
  NoncrossingPartition() = default;

  static NoncrossingPartition from_blocks(int ground_size, std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    if (!is_noncrossing(ground_size, blocks))
      throw std::invalid_argument("blocks cross");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return NoncrossingPartition(ground_size, std::move(blocks));
  }

  int ground_size() const { return ground_size_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// Blocks sorted by maximal element (the order in which they become
  /// descents of the corresponding Dyck path).
  std::vector<std::vector<int>> blocks_by_max() const {
    std::vector<std::vector<int>> out = blocks_;
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.back() < b.back(); });
    return out;
  }

  friend bool operator==(const NoncrossingPartition&, const NoncrossingPartition&) = default;

 private:
  NoncrossingPartition(int n, std::vector<std::vector<int>> blocks)
      : ground_size_(n), blocks_(std::move(blocks)) {}
  int ground_size_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Blocks sorted by maximal element m_1 < ... < m_k with sizes n_i give the
/// Dyck n-path with ascent lengths (m_i - m_{i-1}) and descent lengths (n_i).
inline LatticePath partition_to_path(const NoncrossingPartition& ncp) {
  std::vector<Step> steps;
  steps.reserve(2 * static_cast<std::size_t>(ncp.ground_size()));
  int prev_max = 0;
  for (const auto& block : ncp.blocks_by_max()) {
    for (int t = prev_max; t < block.back(); ++t) steps.push_back(Step::up);
    for (std::size_t t = 0; t < block.size(); ++t) steps.push_back(Step::down);
    prev_max = block.back();
  }
  return LatticePath(std::move(steps));
}

/// Inverse of partition_to_path: number upsteps 1..n left to right; the
/// matching upsteps of each maximal descent form one block.
inline NoncrossingPartition path_to_partition(const LatticePath& p) {
  if (!p.is_dyck()) throw std::invalid_argument("not a Dyck path");
  std::vector<std::vector<int>> blocks;
  std::vector<int> open;  // upstep numbers not yet matched
  int upstep_number = 0;
  auto s = p.steps();
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == Step::up) {
      open.push_back(++upstep_number);
      ++i;
    } else {
      std::vector<int> block;
      while (i < s.size() && s[i] == Step::down) {
        block.push_back(open.back());
        open.pop_back();
        ++i;
      }
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
    }
  }
  return NoncrossingPartition::from_blocks(upstep_number, std::move(blocks));
}

/// Number of connected components: blocks whose [min,max] spans overlap are
/// linked; for a noncrossing partition spans nest or are disjoint, so the
/// components are counted by the blocks not nested inside any other.
inline int component_count(const NoncrossingPartition& ncp) {
  const auto& blocks = ncp.blocks();
  int roots = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    bool nested = false;
    for (std::size_t j = 0; j < blocks.size() && !nested; ++j)
      if (j != i && blocks[j].front() < blocks[i].front() && blocks[i].back() < blocks[j].back())
        nested = true;
    roots += !nested;
  }
  return roots;
}

/// ASCII Murasaki diagram: one column per element, vertical lines joined at
/// their tips ('+') by horizontal runs ('-'), nested heights, element labels
/// in the bottom row. Presentational only.
inline std::string murasaki_render(const NoncrossingPartition& ncp) {
  const int n = ncp.ground_size();
  if (n == 0) return "";
  const auto& blocks = ncp.blocks();
  const int k = static_cast<int>(blocks.size());

  // Height of a block: 1 + max height of blocks strictly inside its span.
  std::vector<int> height(static_cast<std::size_t>(k), 1);
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return blocks[static_cast<std::size_t>(a)].back() - blocks[static_cast<std::size_t>(a)].front() <
           blocks[static_cast<std::size_t>(b)].back() - blocks[static_cast<std::size_t>(b)].front();
  });
  for (int bi : order)
    for (int ci = 0; ci < k; ++ci)
      if (ci != bi && blocks[static_cast<std::size_t>(bi)].front() < blocks[static_cast<std::size_t>(ci)].front() &&
          blocks[static_cast<std::size_t>(ci)].back() < blocks[static_cast<std::size_t>(bi)].back())
        height[static_cast<std::size_t>(bi)] =
            std::max(height[static_cast<std::size_t>(bi)], height[static_cast<std::size_t>(ci)] + 1);

  int max_height = 1;
  for (int h : height) max_height = std::max(max_height, h);

  const int label_width = static_cast<int>(std::to_string(n).size());
  auto column = [&](int e) { return (e - 1) * (label_width + 1); };
  const std::size_t width = static_cast<std::size_t>(column(n) + label_width);
  std::vector<std::string> grid(static_cast<std::size_t>(max_height), std::string(width, ' '));

  for (int b = 0; b < k; ++b)
    for (int e : blocks[static_cast<std::size_t>(b)])
      for (int r = 1; r <= height[static_cast<std::size_t>(b)]; ++r)
        grid[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(column(e))] = '|';
  for (int b = 0; b < k; ++b) {
    const auto& block = blocks[static_cast<std::size_t>(b)];
    if (block.size() < 2) continue;
    auto& row = grid[static_cast<std::size_t>(height[static_cast<std::size_t>(b)]) - 1];
    for (int c = column(block.front()); c <= column(block.back()); ++c)
      if (row[static_cast<std::size_t>(c)] == ' ') row[static_cast<std::size_t>(c)] = '-';
    for (int e : block) row[static_cast<std::size_t>(column(e))] = '+';
  }

  std::string labels(width, ' ');
  for (int e = 1; e <= n; ++e) {
    const std::string num = std::to_string(e);
    labels.replace(static_cast<std::size_t>(column(e)), num.size(), num);
  }

  auto rtrim = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  std::string out;
  for (int r = max_height; r >= 1; --r) {
    out += rtrim(grid[static_cast<std::size_t>(r) - 1]);
    out += '\n';
  }
  out += rtrim(labels);
  out += '\n';
  return out;
}

}  // namespace sif
