#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sif {

enum class Step : std::uint8_t { up, down };

/// A lattice path of upsteps (1,1) and downsteps (1,-1), stored as its raw
/// step sequence. Levels and the balanced/nonnegative/Dyck/strict predicates
/// are computed on demand, never stored, so the same type serves Dyck paths,
/// balanced paths that dip below the axis, and path fragments.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  static LatticePath parse(std::string_view text) {
    std::vector<Step> s;
    s.reserve(text.size());
    for (char c : text) {
      if (c == 'U' || c == 'u')
        s.push_back(Step::up);
      else if (c == 'D' || c == 'd')
        s.push_back(Step::down);
      else
        throw std::invalid_argument("path text must consist of U and D only");
    }
    return LatticePath(std::move(s));
  }

  std::string text() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out += (s == Step::up ? 'U' : 'D');
    return out;
  }

  int length() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }

  /// 1-based step access.
  Step step(int i) const { return steps_[static_cast<std::size_t>(i) - 1]; }
  std::span<const Step> steps() const { return steps_; }

  /// levels()[v] is the level after the first v steps; size length()+1.
  std::vector<int> levels() const {
    std::vector<int> lv(steps_.size() + 1, 0);
    for (std::size_t i = 0; i < steps_.size(); ++i)
      lv[i + 1] = lv[i] + (steps_[i] == Step::up ? 1 : -1);
    return lv;
  }

  int final_level() const {
    int lvl = 0;
    for (Step s : steps_) lvl += (s == Step::up ? 1 : -1);
    return lvl;
  }

  int min_level() const {
    int lvl = 0, mn = 0;
    for (Step s : steps_) {
      lvl += (s == Step::up ? 1 : -1);
      if (lvl < mn) mn = lvl;
    }
    return mn;
  }

  bool is_balanced() const { return final_level() == 0; }
  bool is_nonnegative() const { return min_level() >= 0; }
  bool is_dyck() const { return is_balanced() && is_nonnegative(); }

  /// 1-based indices of steps after which the path is back at its start
  /// level, for Dyck paths.
  std::vector<int> returns() const {
    std::vector<int> r;
    int lvl = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      lvl += (steps_[i] == Step::up ? 1 : -1);
      if (lvl == 0) r.push_back(static_cast<int>(i) + 1);
    }
    return r;
  }

  /// Dyck with exactly one return.
  bool is_strict() const { return !empty() && is_dyck() && returns().size() == 1; }

  int upstep_count() const {
    int c = 0;
    for (Step s : steps_) c += (s == Step::up);
    return c;
  }
  int downstep_count() const { return length() - upstep_count(); }

  /// 1-based step index of the t-th upstep.
  int upstep_position(int t) const {
    int seen = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i)
      if (steps_[i] == Step::up && ++seen == t) return static_cast<int>(i) + 1;
    throw std::out_of_range("fewer upsteps than requested");
  }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

/// The matching upstep of a downstep: head horizontally west from the
/// downstep to the first upstep encountered at the same level. 1-based step
/// indices on both sides.
inline int matching_upstep(const LatticePath& p, int downstep_index) {
  if (downstep_index < 1 || downstep_index > p.length() ||
      p.step(downstep_index) != Step::down)
    throw std::invalid_argument("index must address a downstep");
  int depth = 0;
  for (int i = downstep_index - 1; i >= 1; --i) {
    if (p.step(i) == Step::down)
      ++depth;
    else if (depth == 0)
      return i;
    else
      --depth;
  }
  throw std::invalid_argument("downstep has no matching upstep");
}

/// Split a Dyck path at its returns; each part is a strict Dyck path.
inline std::vector<LatticePath> path_components(const LatticePath& p) {
  if (!p.is_dyck()) throw std::invalid_argument("path components are defined for Dyck paths");
  std::vector<LatticePath> comps;
  auto s = p.steps();
  int lvl = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    lvl += (s[i] == Step::up ? 1 : -1);
    if (lvl == 0) {
      comps.emplace_back(std::vector<Step>(s.begin() + static_cast<std::ptrdiff_t>(start),
                                           s.begin() + static_cast<std::ptrdiff_t>(i) + 1));
      start = i + 1;
    }
  }
  return comps;
}

}  // namespace sif
