#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sif/noncrossing.hpp"
#include "sif/permutation.hpp"

namespace sif {

/// A support set together with the reduced SIF pattern acting on it.
struct SplitPiece {
  std::vector<int> support;
  Permutation pattern;
  friend bool operator==(const SplitPiece&, const SplitPiece&) = default;
};

/// A noncrossing family of SIF pieces whose supports partition the ground
/// chain; pieces ordered by minimum support element.
class SifFamily {
 public:
  SifFamily() = default;

  static SifFamily from_pieces(std::vector<SplitPiece> pieces) {
    for (auto& piece : pieces) {
      if (piece.support.empty()) throw std::invalid_argument("piece supports must be nonempty");
      std::sort(piece.support.begin(), piece.support.end());
      if (static_cast<int>(piece.support.size()) != piece.pattern.size())
        throw std::invalid_argument("piece support and pattern sizes differ");
      if (!is_sif(piece.pattern))
        throw std::invalid_argument("piece patterns must be SIF");
    }
    std::sort(pieces.begin(), pieces.end(), [](const SplitPiece& a, const SplitPiece& b) {
      return a.support.front() < b.support.front();
    });
    // Disjointness, and the noncrossing property of the supports over the
    // ground chain (positions taken within the sorted union).
    std::vector<int> ground;
    for (const auto& piece : pieces)
      ground.insert(ground.end(), piece.support.begin(), piece.support.end());
    std::sort(ground.begin(), ground.end());
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
      throw std::invalid_argument("piece supports overlap");
    std::vector<std::vector<int>> positional;
    positional.reserve(pieces.size());
    for (const auto& piece : pieces) {
      std::vector<int> block;
      block.reserve(piece.support.size());
      for (int e : piece.support)
        block.push_back(static_cast<int>(std::lower_bound(ground.begin(), ground.end(), e) -
                                         ground.begin()) +
                        1);
      positional.push_back(std::move(block));
    }
    if (!is_noncrossing(static_cast<int>(ground.size()), positional))
      throw std::invalid_argument("piece supports cross");
    return SifFamily(std::move(pieces));
  }

  std::span<const SplitPiece> pieces() const { return pieces_; }
  int piece_count() const { return static_cast<int>(pieces_.size()); }
  bool empty() const { return pieces_.empty(); }

  /// Sorted union of the piece supports.
  std::vector<int> ground() const {
    std::vector<int> g;
    for (const auto& piece : pieces_) g.insert(g.end(), piece.support.begin(), piece.support.end());
    std::sort(g.begin(), g.end());
    return g;
  }

  friend bool operator==(const SifFamily&, const SifFamily&) = default;

 private:
  explicit SifFamily(std::vector<SplitPiece> pieces) : pieces_(std::move(pieces)) {}
  std::vector<SplitPiece> pieces_;
};

/// Decompose a permutation into a noncrossing family of SIF pieces: split
/// into components; in each connected component set aside the maximal
/// stabilized proper subintervals and keep the (SIF) remainder as a piece;
/// repeat on the permutation induced on everything set aside, until nothing
/// is set aside.
inline SifFamily split(const LabeledPermutation& input) {
  std::vector<SplitPiece> pieces;
  LabeledPermutation work = input;
  while (!work.empty()) {
    std::vector<int> aside;
    for (Interval comp : components(work)) {
      std::vector<int> elems;
      elems.reserve(static_cast<std::size_t>(comp.hi - comp.lo + 1));
      for (int pos = comp.lo; pos <= comp.hi; ++pos) elems.push_back(work.element_at(pos));
      const LabeledPermutation part = restrict_to(work, elems);
      std::vector<char> set_aside(static_cast<std::size_t>(part.size()) + 1, 0);
      for (Interval iv : maximal_stabilized_proper_subintervals(part))
        for (int pos = iv.lo; pos <= iv.hi; ++pos) set_aside[static_cast<std::size_t>(pos)] = 1;
      std::vector<int> remaining;
      for (int pos = 1; pos <= part.size(); ++pos) {
        if (set_aside[static_cast<std::size_t>(pos)])
          aside.push_back(part.element_at(pos));
        else
          remaining.push_back(part.element_at(pos));
      }
      pieces.push_back({remaining, reduce(restrict_to(part, remaining))});
    }
    std::sort(aside.begin(), aside.end());
    work = aside.empty() ? LabeledPermutation{} : restrict_to(input, aside);
  }
  return SifFamily::from_pieces(std::move(pieces));
}

inline SifFamily split(const Permutation& p) { return split(LabeledPermutation::standard(p)); }

/// Inverse of split: transport each pattern onto its support and take the
/// union of the resulting bijections.
inline LabeledPermutation unsplit(const SifFamily& family) {
  std::vector<std::pair<int, int>> mapping;
  for (const auto& piece : family.pieces()) {
    const LabeledPermutation transported =
        LabeledPermutation::from_pattern(piece.support, piece.pattern);
    for (int pos = 1; pos <= transported.size(); ++pos)
      mapping.emplace_back(transported.element_at(pos), transported.image_at(pos));
  }
  std::sort(mapping.begin(), mapping.end());
  std::vector<int> support, images;
  support.reserve(mapping.size());
  images.reserve(mapping.size());
  for (const auto& [element, image] : mapping) {
    support.push_back(element);
    images.push_back(image);
  }
  return LabeledPermutation::from_support_images(std::move(support), std::move(images));
}

/// A lattice path whose maximal nonzero descents carry SIF labels, with an
/// optional marked upstep. Labels appear in path order; the i-th label
/// belongs to the i-th maximal descent and has the descent's length.
struct DescentLabeledPath {
  LatticePath path;
  std::vector<Permutation> labels;
  std::optional<int> marked_upstep;  // 1-based ordinal among upsteps
  friend bool operator==(const DescentLabeledPath&, const DescentLabeledPath&) = default;
};

/// Package a permutation as the Dyck path of its split family: blocks sorted
/// by maximal element become the maximal descents, each labeled with its
/// block's SIF pattern. Strict Dyck path exactly when the input is
/// connected; non-connected inputs are accepted and yield non-strict paths.
inline DescentLabeledPath component_labeled_path(const LabeledPermutation& p) {
  const SifFamily family = split(p);
  const auto sup = p.support();
  std::vector<std::vector<int>> positional;
  positional.reserve(family.pieces().size());
  for (const auto& piece : family.pieces()) {
    std::vector<int> block;
    block.reserve(piece.support.size());
    for (int e : piece.support)
      block.push_back(static_cast<int>(std::lower_bound(sup.begin(), sup.end(), e) - sup.begin()) +
                      1);
    positional.push_back(std::move(block));
  }
  const auto ncp = NoncrossingPartition::from_blocks(p.size(), std::move(positional));
  LatticePath path = partition_to_path(ncp);
  // Labels in descent order = pieces sorted by maximal support element.
  std::vector<const SplitPiece*> by_max;
  by_max.reserve(family.pieces().size());
  for (const auto& piece : family.pieces()) by_max.push_back(&piece);
  std::sort(by_max.begin(), by_max.end(), [](const SplitPiece* a, const SplitPiece* b) {
    return a->support.back() < b->support.back();
  });
  std::vector<Permutation> labels;
  labels.reserve(by_max.size());
  for (const SplitPiece* piece : by_max) labels.push_back(piece->pattern);
  return {std::move(path), std::move(labels), std::nullopt};
}

inline DescentLabeledPath component_labeled_path(const Permutation& p) {
  return component_labeled_path(LabeledPermutation::standard(p));
}

/// Inverse direction: recover the permutation on the chain base..base+n-1
/// from a descent-labeled Dyck path.
inline LabeledPermutation labeled_path_to_perm(const DescentLabeledPath& dlp, int base) {
  if (base < 1) throw std::invalid_argument("chain base must be positive");
  if (!dlp.path.is_dyck()) throw std::invalid_argument("path must be Dyck");
  if (dlp.path.empty()) {
    if (!dlp.labels.empty()) throw std::invalid_argument("label count mismatch");
    return {};
  }
  const auto ncp = path_to_partition(dlp.path);
  const auto by_max = ncp.blocks_by_max();
  if (by_max.size() != dlp.labels.size())
    throw std::invalid_argument("label count must equal the number of maximal descents");
  std::vector<SplitPiece> pieces;
  pieces.reserve(by_max.size());
  for (std::size_t i = 0; i < by_max.size(); ++i) {
    if (static_cast<int>(by_max[i].size()) != dlp.labels[i].size())
      throw std::invalid_argument("label length must equal its descent length");
    std::vector<int> support;
    support.reserve(by_max[i].size());
    for (int e : by_max[i]) support.push_back(base - 1 + e);
    pieces.push_back({std::move(support), dlp.labels[i]});
  }
  return unsplit(SifFamily::from_pieces(std::move(pieces)));
}

}  // namespace sif
