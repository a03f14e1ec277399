#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sif/bijection.hpp"
#include "sif/permutation.hpp"
#include "sif/split.hpp"

namespace sif {

namespace detail {

inline std::vector<std::string_view> split_on(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

inline int parse_int(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty number");
  int value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') throw std::invalid_argument("expected a nonnegative integer");
    value = value * 10 + (c - '0');
    if (value < 0) throw std::invalid_argument("number out of range");
  }
  return value;
}

inline std::vector<int> parse_csv(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (std::string_view token : split_on(text, ',')) out.push_back(parse_int(token));
  return out;
}

inline std::string join_csv(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

/// "6 1 5 3 4 2"; the empty string is the empty permutation.
inline std::string to_one_line(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p(i));
  }
  return out;
}

inline Permutation parse_one_line(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) values.push_back(detail::parse_int(text.substr(start, i - start)));
  }
  return Permutation::from_one_line(std::move(values));
}

/// "(1 6 2)(3 5 4)"; empty permutation renders as "".
inline std::string to_cycles_string(const Permutation& p) {
  std::string out;
  for (const auto& cycle : cycles(p)) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

/// "support:2,3,5,9 images:5,9,2,3"
inline std::string to_text(const LabeledPermutation& p) {
  return "support:" + detail::join_csv(p.support()) + " images:" + detail::join_csv(p.images());
}

inline LabeledPermutation parse_labeled(std::string_view text) {
  const auto halves = detail::split_on(text, ' ');
  if (halves.size() != 2 || !halves[0].starts_with("support:") || !halves[1].starts_with("images:"))
    throw std::invalid_argument("expected \"support:... images:...\"");
  return LabeledPermutation::from_support_images(
      detail::parse_csv(halves[0].substr(8)), detail::parse_csv(halves[1].substr(7)));
}

/// Blocks joined by "|", elements by ",": "1,7|2,3,5,6|4|8|9,10,12|11".
inline std::string to_text(const NoncrossingPartition& ncp) {
  std::string out;
  for (std::size_t i = 0; i < ncp.blocks().size(); ++i) {
    if (i) out += '|';
    out += detail::join_csv(ncp.blocks()[i]);
  }
  return out;
}

inline NoncrossingPartition parse_partition(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  int n = 0;
  for (std::string_view token : detail::split_on(text, '|')) {
    blocks.push_back(detail::parse_csv(token));
    for (int e : blocks.back()) n = std::max(n, e);
  }
  return NoncrossingPartition::from_blocks(n, std::move(blocks));
}

namespace detail {

// Patterns print as concatenated digits ("3412") while every value fits one
// digit, comma-separated otherwise; the parser accepts both.
inline std::string pattern_text(const Permutation& pattern) {
  if (pattern.size() <= 9) {
    std::string out;
    for (int i = 1; i <= pattern.size(); ++i) out += static_cast<char>('0' + pattern(i));
    return out;
  }
  std::string out;
  for (int i = 1; i <= pattern.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(pattern(i));
  }
  return out;
}

inline Permutation parse_pattern(std::string_view text) {
  if (text.find(',') != std::string_view::npos)
    return Permutation::from_one_line(parse_csv(text));
  std::vector<int> values;
  values.reserve(text.size());
  for (char c : text) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad pattern digit");
    values.push_back(c - '0');
  }
  return Permutation::from_one_line(std::move(values));
}

}  // namespace detail

/// Pieces joined by ";", each "elements:pattern":
/// "1,7:21;2,3,5,6:3412;4:1;8:1;9,10,12:231;11:1".
inline std::string to_text(const SifFamily& family) {
  std::string out;
  for (std::size_t i = 0; i < family.pieces().size(); ++i) {
    if (i) out += ';';
    out += detail::join_csv(family.pieces()[i].support);
    out += ':';
    out += detail::pattern_text(family.pieces()[i].pattern);
  }
  return out;
}

inline SifFamily parse_family(std::string_view text) {
  std::vector<SplitPiece> pieces;
  if (!text.empty()) {
    for (std::string_view token : detail::split_on(text, ';')) {
      const std::size_t colon = token.find(':');
      if (colon == std::string_view::npos)
        throw std::invalid_argument("each piece must be \"elements:pattern\"");
      pieces.push_back({detail::parse_csv(token.substr(0, colon)),
                        detail::parse_pattern(token.substr(colon + 1))});
    }
  }
  return SifFamily::from_pieces(std::move(pieces));
}

/// Items joined by "/", the empty permutation as "e", values by ",":
/// "2,3,1/2,1/e/1/3,1,2/e/2,1/e/1/e/e/e/1/e/e/2,1".
inline std::string to_text(const SifList& list) {
  std::string out;
  for (int i = 0; i < list.item_count(); ++i) {
    if (i) out += '/';
    const Permutation& item = list.items()[static_cast<std::size_t>(i)];
    out += item.empty() ? "e" : detail::join_csv(item.images());
  }
  return out;
}

inline SifList parse_sif_list(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("a SIF list has at least one item");
  std::vector<Permutation> items;
  for (std::string_view token : detail::split_on(text, '/')) {
    if (token == "e")
      items.push_back({});
    else
      items.push_back(Permutation::from_one_line(detail::parse_csv(token)));
  }
  return SifList::from_items(std::move(items));
}

inline nlohmann::json to_json(const SifFamily& family) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& piece : family.pieces())
    out.push_back({{"support", piece.support},
                   {"pattern", std::vector<int>(piece.pattern.images().begin(),
                                                piece.pattern.images().end())}});
  return out;
}

inline SifFamily family_from_json(const nlohmann::json& j) {
  std::vector<SplitPiece> pieces;
  for (const auto& item : j)
    pieces.push_back({item.at("support").get<std::vector<int>>(),
                      Permutation::from_one_line(item.at("pattern").get<std::vector<int>>())});
  return SifFamily::from_pieces(std::move(pieces));
}

inline nlohmann::json to_json(const SifList& list) {
  nlohmann::json items = nlohmann::json::array();
  for (const Permutation& item : list.items())
    items.push_back(std::vector<int>(item.images().begin(), item.images().end()));
  return {{"n", list.item_count()}, {"items", items}};
}

inline SifList sif_list_from_json(const nlohmann::json& j) {
  std::vector<Permutation> items;
  for (const auto& item : j.at("items"))
    items.push_back(Permutation::from_one_line(item.get<std::vector<int>>()));
  SifList list = SifList::from_items(std::move(items));
  if (j.contains("n") && j.at("n").get<int>() != list.item_count())
    throw std::invalid_argument("item count disagrees with the declared n");
  return list;
}

}  // namespace sif
